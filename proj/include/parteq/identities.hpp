#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "parteq/series.hpp"

namespace parteq {

/// One comparison inside an identity check: two independently computed
/// series agree on q-degrees 0..degrees-1.
struct IdentityCheck {
    std::string lhs;
    std::string rhs;
    int degrees = 0;
    bool equal = true;
    int mismatch_degree = -1;
    CoeffPoly mismatch_lhs;
    CoeffPoly mismatch_rhs;
};

struct IdentityReport {
    std::string name;
    int order = 0;
    bool equal = true;
    std::vector<IdentityCheck> checks;

    /// The first failing check, if any.
    const IdentityCheck* first_mismatch() const;
    /// {name, order, equal, first_mismatch:{degree, lhs, rhs}?, checks:[...]}
    nlohmann::json to_json() const;
};

struct IdentityOptions {
    /// Degrees up to this weight are also compared against brute-force
    /// enumeration of the partition families the series counts.
    int enumeration_max = 30;
    /// Same, for the bicolored side (B and C), which is slower to enumerate.
    int bicolored_max = 22;
};

/// ped_gf, qbinomial_ped, thm12_gf, lebesgue, a_gf, euler, thm4_gf.
const std::vector<std::string_view>& identity_names();
bool is_identity(std::string_view name);

/// Computes every side of the named identity modulo q^order and compares
/// the coefficient polynomials exactly. Unknown names throw UsageError.
IdentityReport verify_identity(std::string_view name, int order, const IdentityOptions& = {});

// Individual sides, exposed for tests and the CLI.

/// (-q^2; q^2)_inf / (q; q^2)_inf
TruncatedSeries ped_product(int order);
/// (-xyq^2; q^2)_inf / (xq; q^2)_inf
TruncatedSeries ped_refined_product(int order);
/// sum_n (-yq; q^2)_n x^n q^n / (q^2; q^2)_n, the F side.
TruncatedSeries f_series(int order);
/// sum_j x^j q^j / (q^2; q^2)_j times the negative parts of F_-1 counted by
/// (count, weight) through their complement in the odd numbers below 2j.
TruncatedSeries f_signed_series(int order);
/// sum_n (-xq; q)_n q^{n(n+1)/2} / (q; q)_n, the Lebesgue series and A side.
TruncatedSeries lebesgue_series(int order);
/// (-xq^2; q^2)_inf (-q; q)_inf
TruncatedSeries lebesgue_product(int order);
/// The A_-1 side, built like f_signed_series over negative parts <= j.
TruncatedSeries a_signed_series(int order);
/// (-xq^2; q^2)_inf / (q; q^2)_inf
TruncatedSeries ped_even_refined_product(int order);

} // namespace parteq
