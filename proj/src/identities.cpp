#include "parteq/identities.hpp"

#include <algorithm>
#include <functional>

#include "parteq/enumerate.hpp"
#include "parteq/errors.hpp"
#include "parteq/statistics.hpp"

namespace parteq {

namespace {

// Shorthand for Pochhammer parameters: sign * x^x y^y q^q.
constexpr QMonomial qm(int sign, int x, int y, int q) { return {sign, x, y, q}; }

/// Rows [count][weight] of subset counts of a growing pool of values,
/// keeping only weights below `cap`.
class SubsetTable {
public:
    explicit SubsetTable(int cap)
        : cap_(cap)
        , rows_(1, std::vector<Integer>(static_cast<std::size_t>(std::max(cap, 1)), 0))
    {
        if (cap_ > 0)
            rows_[0][0] = 1;
    }

    void add(int value)
    {
        rows_.emplace_back(static_cast<std::size_t>(std::max(cap_, 1)), 0);
        for (std::size_t c = rows_.size() - 1; c-- > 0;)
            for (int w = cap_ - 1 - value; w >= 0; --w)
                if (rows_[c][static_cast<std::size_t>(w)] != 0)
                    rows_[c + 1][static_cast<std::size_t>(w + value)] +=
                        rows_[c][static_cast<std::size_t>(w)];
    }

    int max_count() const { return static_cast<int>(rows_.size()) - 1; }
    int cap() const { return cap_; }
    const Integer& at(int count, int weight) const
    {
        return rows_[static_cast<std::size_t>(count)][static_cast<std::size_t>(weight)];
    }

private:
    int cap_;
    std::vector<std::vector<Integer>> rows_;
};

IdentityCheck compare(std::string lhs_label, const TruncatedSeries& lhs, std::string rhs_label,
                      const TruncatedSeries& rhs, int degrees)
{
    IdentityCheck c;
    c.lhs = std::move(lhs_label);
    c.rhs = std::move(rhs_label);
    c.degrees = degrees;
    const auto a = lhs.truncated(degrees);
    const auto b = rhs.truncated(degrees);
    c.mismatch_degree = a.first_difference(b);
    c.equal = c.mismatch_degree < 0;
    if (!c.equal) {
        c.mismatch_lhs = a.coefficient(c.mismatch_degree);
        c.mismatch_rhs = b.coefficient(c.mismatch_degree);
    }
    return c;
}

/// Generating series of a family up to weight degrees-1, each member
/// contributing the monomial chosen by `mono` from its cell.
TruncatedSeries enumerated_series(Family f, int degrees, const std::function<Monomial(Cell)>& mono)
{
    TruncatedSeries s(degrees);
    Limits limits;
    limits.max_n = std::max(limits.max_n, degrees - 1);
    for (int n = 0; n < degrees; ++n)
        for (const auto& v : enumerate(f, n, {}, {}, limits))
            s[n] += CoeffPoly(1, mono(cell_of(f, v)));
    return s;
}

Monomial x_m_y_k(Cell c) { return {c.m, c.k}; }
Monomial x_k(Cell c) { return {c.k, 0}; }
Monomial none(Cell) { return {}; }

/// Partitions with distinct even parts counted by a direct coin-change
/// recurrence: odd parts any number of times, even parts at most once.
TruncatedSeries ped_counts(int order)
{
    std::vector<Integer> dp(static_cast<std::size_t>(order), 0);
    dp[0] = 1;
    for (int v = 1; v < order; ++v) {
        if (v % 2 == 1)
            for (int i = v; i < order; ++i)
                dp[static_cast<std::size_t>(i)] += dp[static_cast<std::size_t>(i - v)];
        else
            for (int i = order - 1; i >= v; --i)
                dp[static_cast<std::size_t>(i)] += dp[static_cast<std::size_t>(i - v)];
    }
    return TruncatedSeries::from_integers(order, dp);
}

/// sum_n (-yq; q^2)_n x^n q^n / (q^2; q^2)_n with every factor applied
/// explicitly to each summand.
TruncatedSeries qbinomial_series(int order)
{
    TruncatedSeries total(order);
    // The n-th summand starts at q^n.
    for (int n = 0; n < order; ++n) {
        const int room = order - n;
        auto term = poch_finite(qm(-1, 0, 1, 1), 2, n, room);
        term = divide_poch_finite(std::move(term), qm(1, 0, 0, 2), 2, n);
        total.add_shifted(term, qm(1, n, 0, n));
    }
    return total;
}

} // namespace

TruncatedSeries ped_product(int order)
{
    return divide_poch_infinite(poch_infinite(qm(-1, 0, 0, 2), 2, order), qm(1, 0, 0, 1), 2);
}

TruncatedSeries ped_refined_product(int order)
{
    return divide_poch_infinite(poch_infinite(qm(-1, 1, 1, 2), 2, order), qm(1, 1, 0, 1), 2);
}

TruncatedSeries ped_even_refined_product(int order)
{
    return divide_poch_infinite(poch_infinite(qm(-1, 1, 0, 2), 2, order), qm(1, 0, 0, 1), 2);
}

TruncatedSeries lebesgue_product(int order)
{
    return poch_infinite(qm(-1, 1, 0, 2), 2, order) * poch_infinite(qm(-1, 0, 0, 1), 1, order);
}

TruncatedSeries f_series(int order)
{
    // term_n = term_{n-1} * xq * (1 + y q^{2n-1}) / (1 - q^{2n})
    TruncatedSeries total = TruncatedSeries::one(order);
    TruncatedSeries term = TruncatedSeries::one(order);
    for (int n = 1; n < order; ++n) {
        term.shift(qm(1, 1, 0, 1));
        term.multiply_binomial(qm(-1, 0, 1, 2 * n - 1));
        term.divide_binomial(qm(1, 0, 0, 2 * n));
        total += term;
    }
    return total;
}

TruncatedSeries f_signed_series(int order)
{
    // With j positive parts, pi runs over j distinct even parts:
    // x^j y^j q^{j(j+1)} / (q^2; q^2)_j. Each nu subset of {1, 3, ..., 2j-1}
    // contributes y^{-l(nu)} q^{-|nu|}. Writing nu as the complement of S,
    // l(nu) = j - |S| and |nu| = j^2 - |S|_w, so the pair contributes
    // x^j y^{|S|} q^{j + |S|_w}; only S with j + |S|_w < order matter.
    TruncatedSeries total(order);
    SubsetTable complements(order);
    for (int j = 0; j < order; ++j) {
        if (j > 0)
            complements.add(2 * j - 1);
        const int room = order - j;
        TruncatedSeries term(room);
        for (int c = 0; c <= complements.max_count(); ++c)
            for (int w = 0; w < room; ++w)
                if (complements.at(c, w) != 0)
                    term[w] += CoeffPoly(complements.at(c, w), {0, c});
        term = divide_poch_finite(std::move(term), qm(1, 0, 0, 2), 2, j);
        total.add_shifted(term, qm(1, j, 0, j));
    }
    return total;
}

TruncatedSeries lebesgue_series(int order)
{
    TruncatedSeries total(order);
    for (int n = 0; n * (n + 1) / 2 < order; ++n) {
        const int start = n * (n + 1) / 2;
        const int room = order - start;
        auto term = poch_finite(qm(-1, 1, 0, 1), 1, n, room);
        term = divide_poch_finite(std::move(term), qm(1, 0, 0, 1), 1, n);
        total.add_shifted(term, qm(1, 0, 0, start));
    }
    return total;
}

TruncatedSeries a_signed_series(int order)
{
    // With j positive parts, pi runs over j parts with gaps >= 2 and
    // smallest >= 2: x^j q^{j(j+1)} / (q; q)_j. Each nu subset of {1..j}
    // contributes x^{-l(nu)} q^{-|nu|}; through its complement S this is
    // x^{|S|} q^{j(j+1)/2 + |S|_w}.
    TruncatedSeries total(order);
    SubsetTable complements(order);
    for (int j = 0; j * (j + 1) / 2 < order; ++j) {
        if (j > 0)
            complements.add(j);
        const int start = j * (j + 1) / 2;
        const int room = order - start;
        TruncatedSeries term(room);
        for (int c = 0; c <= complements.max_count(); ++c)
            for (int w = 0; w < room; ++w)
                if (complements.at(c, w) != 0)
                    term[w] += CoeffPoly(complements.at(c, w), {c, 0});
        term = divide_poch_finite(std::move(term), qm(1, 0, 0, 1), 1, j);
        total.add_shifted(term, qm(1, 0, 0, start));
    }
    return total;
}

const std::vector<std::string_view>& identity_names()
{
    static const std::vector<std::string_view> names = {
        "ped_gf", "qbinomial_ped", "thm12_gf", "lebesgue", "a_gf", "euler", "thm4_gf",
    };
    return names;
}

bool is_identity(std::string_view name)
{
    const auto& n = identity_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

const IdentityCheck* IdentityReport::first_mismatch() const
{
    for (const auto& c : checks)
        if (!c.equal)
            return &c;
    return nullptr;
}

nlohmann::json IdentityReport::to_json() const
{
    nlohmann::json j = {{"name", name}, {"order", order}, {"equal", equal}};
    if (const auto* m = first_mismatch())
        j["first_mismatch"] = {{"degree", m->mismatch_degree},
                               {"lhs", m->mismatch_lhs.to_string()},
                               {"rhs", m->mismatch_rhs.to_string()},
                               {"check", m->lhs + " = " + m->rhs}};
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks)
        checks_json.push_back(
            {{"lhs", c.lhs}, {"rhs", c.rhs}, {"degrees", c.degrees}, {"equal", c.equal}});
    j["checks"] = checks_json;
    return j;
}

IdentityReport verify_identity(std::string_view name, int order, const IdentityOptions& options)
{
    if (!is_identity(name))
        throw UsageError("unknown identity '" + std::string(name) + "'");
    if (order < 1)
        throw UsageError("order must be at least 1");

    IdentityReport r;
    r.name = std::string(name);
    r.order = order;
    const int enum_degrees = std::min(order, options.enumeration_max + 1);
    const int bicolored_degrees = std::min(order, options.bicolored_max + 1);
    auto check = [&](std::string a, const TruncatedSeries& lhs, std::string b,
                     const TruncatedSeries& rhs, int degrees) {
        r.checks.push_back(compare(std::move(a), lhs, std::move(b), rhs, degrees));
    };

    if (name == "ped_gf") {
        const auto product = ped_product(order);
        check("sum ped(n) q^n (recurrence)", ped_counts(order),
              "(-q^2;q^2)_inf/(q;q^2)_inf", product, order);
        check("sum |P_ed(n)| q^n (enumerated)", enumerated_series(Family::ped, enum_degrees, none),
              "(-q^2;q^2)_inf/(q;q^2)_inf", product, enum_degrees);
    } else if (name == "qbinomial_ped") {
        check("sum (-yq;q^2)_n x^n q^n/(q^2;q^2)_n", qbinomial_series(order),
              "(-xyq^2;q^2)_inf/(xq;q^2)_inf", ped_refined_product(order), order);
    } else if (name == "thm12_gf") {
        const auto f = f_series(order);
        check("F series", f, "F_-1 series", f_signed_series(order), order);
        check("F series", f, "(-xyq^2;q^2)_inf/(xq;q^2)_inf", ped_refined_product(order), order);
        check("F series", f, "sum ped(n,m,k) x^m y^k q^n (enumerated)",
              enumerated_series(Family::ped, enum_degrees, x_m_y_k), enum_degrees);
        check("F series", f, "sum F(n,m,k) x^m y^k q^n (enumerated)",
              enumerated_series(Family::F, enum_degrees, x_m_y_k), enum_degrees);
        check("F series", f, "sum F_-1(n,m,k) x^m y^k q^n (enumerated)",
              enumerated_series(Family::F_signed, enum_degrees, x_m_y_k), enum_degrees);
    } else if (name == "lebesgue") {
        check("sum (-xq;q)_n q^(n(n+1)/2)/(q;q)_n", lebesgue_series(order),
              "(-xq^2;q^2)_inf(-q;q)_inf", lebesgue_product(order), order);
    } else if (name == "a_gf") {
        const auto a = lebesgue_series(order);
        check("A series", a, "A_-1 series", a_signed_series(order), order);
        check("A series", a, "sum A(n,k) x^k q^n (enumerated)",
              enumerated_series(Family::A, enum_degrees, x_k), enum_degrees);
        check("A series", a, "sum V(n,k) x^k q^n (enumerated)",
              enumerated_series(Family::V, enum_degrees, x_k), enum_degrees);
        check("A series", a, "sum A_-1(n,k) x^k q^n (enumerated)",
              enumerated_series(Family::A_signed, enum_degrees, x_k), enum_degrees);
    } else if (name == "euler") {
        check("1/(q;q^2)_inf", divide_poch_infinite(TruncatedSeries::one(order), qm(1, 0, 0, 1), 2),
              "(-q;q)_inf", poch_infinite(qm(-1, 0, 0, 1), 1, order), order);
    } else if (name == "thm4_gf") {
        const auto lhs = ped_even_refined_product(order);
        check("(-xq^2;q^2)_inf/(q;q^2)_inf", lhs, "(-q;q)_inf(-xq^2;q^2)_inf",
              lebesgue_product(order), order);
        check("(-xq^2;q^2)_inf/(q;q^2)_inf", lhs, "sum ped(n,k) x^k q^n (enumerated)",
              enumerated_series(Family::ped, bicolored_degrees, x_k), bicolored_degrees);
        check("(-xq^2;q^2)_inf/(q;q^2)_inf", lhs, "sum B(n,k) x^k q^n (enumerated)",
              enumerated_series(Family::B, bicolored_degrees, x_k), bicolored_degrees);
        check("(-xq^2;q^2)_inf/(q;q^2)_inf", lhs, "sum C(n,k) x^k q^n (enumerated)",
              enumerated_series(Family::C, bicolored_degrees, x_k), bicolored_degrees);
    }

    r.equal = std::all_of(r.checks.begin(), r.checks.end(),
                          [](const IdentityCheck& c) { return c.equal; });
    return r;
}

} // namespace parteq
