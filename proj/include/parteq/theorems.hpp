#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "parteq/enumerate.hpp"

namespace parteq {

/// Outcome of an exhaustive cardinality comparison between families.
struct CardinalityReport {
    std::string name;
    int n_max = 0;
    long cells = 0;   // (n, m, k) or (n, k) cells compared
    long objects = 0; // objects enumerated across all families
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
    nlohmann::json to_json() const;
};

/// |P_ed(n,m,k)| = |F(n,m,k)| = |F_-1(n,m,k)| for every n <= n_max and all m, k.
CardinalityReport verify_theorem12(int n_max, const Limits& = {});
/// |V(n,k)| = |A(n,k)| = |A_-1(n,k)| and sum_k |V(n,k)| = |P_ed(n)|.
CardinalityReport verify_theorem13(int n_max, const Limits& = {});
/// |P_ed(n,k)| = |B(n,k)| where k counts even parts resp. red parts; also
/// checks that B(4) is exactly {4b, 3b+1b, 2b+2r, 2b+1b+1r}.
CardinalityReport verify_theorem14(int n_max, const Limits& = {});

} // namespace parteq
