#include "parteq/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "parteq/errors.hpp"

namespace parteq {

namespace {

void check_args(int n, Opt m, Opt k, const Limits& limits)
{
    if (n < 0 || (m && *m < 0) || (k && *k < 0))
        throw UsageError("enumeration parameters must be non-negative");
    if (n > limits.max_n)
        throw LimitError("n = " + std::to_string(n) + " exceeds the enumeration limit " +
                         std::to_string(limits.max_n));
}

bool matches(Opt want, int got) { return !want || *want == got; }

/// Visits every partition of `n` into parts <= `max_part` and at most
/// `max_len` parts, in lexicographically descending order.
void for_each_partition(int n, int max_part, int max_len,
                        const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            visit(cur);
            return;
        }
        const int slots = max_len - static_cast<int>(cur.size());
        for (int p = std::min(rest, cap); p >= 1; --p) {
            if (rest > p * slots)
                break;
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, max_part);
}

/// Sum of the `t` smallest positive values congruent to `residue` mod
/// `modulus`, and of the `t` largest such values not exceeding `cap`
/// (-1 when fewer than `t` exist).
int smallest_sum(int t, int modulus, int residue)
{
    const int first = residue == 0 ? modulus : residue;
    return t * first + modulus * t * (t - 1) / 2;
}

int largest_sum(int t, int cap, int modulus, int residue)
{
    if (t == 0)
        return 0;
    int top = cap - ((cap % modulus - residue) % modulus + modulus) % modulus;
    const int bottom = top - modulus * (t - 1);
    if (bottom < 1)
        return -1;
    return t * (top + bottom) / 2;
}

/// Total of every positive value <= cap congruent to `residue` mod `modulus`.
int total_upto(int cap, int modulus, int residue)
{
    int s = 0;
    for (int v = cap; v >= 1; --v)
        if (v % modulus == residue)
            s += v;
    return s;
}

/// Partitions of `n` into distinct parts <= `max_part`, optionally exactly
/// `len` parts, all parts congruent to `residue` mod `modulus`.
void for_each_distinct(int n, int max_part, Opt len, int modulus, int residue,
                       const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        const int used = static_cast<int>(cur.size());
        if (rest == 0) {
            if (!len || used == *len)
                visit(cur);
            return;
        }
        if (len && used == *len)
            return;
        for (int p = std::min(rest, cap); p >= 1; --p) {
            if (p % modulus != residue)
                continue;
            const int after = rest - p;
            if (len) {
                const int t = *len - used - 1;
                const int most = largest_sum(t, p - 1, modulus, residue);
                if (most < 0 || after > most)
                    break;
                if (after < smallest_sum(t, modulus, residue))
                    continue;
            } else if (after > total_upto(p - 1, modulus, residue)) {
                break;
            }
            cur.push_back(p);
            rec(after, p - 1);
            cur.pop_back();
        }
    };
    rec(n, max_part);
}

/// Every subset of `pool` (given in descending order) whose sum is at most
/// `max_sum`, reported as a descending vector.
void for_each_subset_upto(const std::vector<int>& pool, int max_sum,
                          const std::function<void(const std::vector<int>&, int)>& visit)
{
    std::vector<int> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sum) {
        if (i == pool.size()) {
            visit(cur, sum);
            return;
        }
        rec(i + 1, sum);
        if (sum + pool[i] <= max_sum) {
            cur.push_back(pool[i]);
            rec(i + 1, sum + pool[i]);
            cur.pop_back();
        }
    };
    rec(0, 0);
}

std::vector<int> complement(const std::vector<int>& pool, const std::vector<int>& taken)
{
    std::vector<int> out;
    std::set_difference(pool.begin(), pool.end(), taken.begin(), taken.end(),
                        std::back_inserter(out), std::greater<>());
    return out;
}

template <class T>
void sort_canonical(std::vector<T>& v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
}

} // namespace

Limits Limits::from_env()
{
    Limits out;
    if (const char* s = std::getenv("PARTEQ_LIMIT")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v >= 0)
            out.max_n = static_cast<int>(v);
    }
    return out;
}

std::vector<Partition> enumerate_ped(int n, Opt m, Opt k, const Limits& limits)
{
    check_args(n, m, k, limits);
    std::vector<Partition> out;
    for_each_partition(n, n, n, [&](const std::vector<int>& parts) {
        Partition p(parts);
        if (check_ped(p) && matches(m, p.length()) && matches(k, p.even_parts()))
            out.push_back(std::move(p));
    });
    sort_canonical(out);
    return out;
}

std::vector<FPartition> enumerate_F(int n, Opt m, Opt k, const Limits& limits)
{
    check_args(n, m, k, limits);
    std::vector<FPartition> out;
    auto keep = [&](FPartition f) {
        if (check_F(f) && matches(m, f.ones()) && matches(k, f.odd_overlined()))
            out.push_back(std::move(f));
    };
    // Every F-partition is an ordinary partition of n, with possibly one of
    // its ones overlined.
    for_each_partition(n, n, n, [&](const std::vector<int>& parts) {
        keep({Partition(parts), false});
        if (!parts.empty() && parts.back() == 1) {
            std::vector<int> rest(parts.begin(), parts.end() - 1);
            keep({Partition(std::move(rest)), true});
        }
    });
    sort_canonical(out);
    return out;
}

std::vector<SignedPartition> enumerate_F_signed(int n, Opt m, Opt k, const Limits& limits)
{
    check_args(n, m, k, limits);
    std::vector<SignedPartition> out;
    // With l+ = j: the positives are j distinct evens, so |pi| >= j(j+1); the
    // negatives are distinct odds <= 2j-1, so |nu| <= j^2. Hence n >= j, and
    // the odds missing from nu weigh j^2 - |nu| <= n - j.
    for (int j = 0; j <= n; ++j) {
        if (!matches(m, j))
            continue;
        std::vector<int> odds;
        for (int v = 2 * j - 1; v >= 1; v -= 2)
            odds.push_back(v);
        const int all_odds = j * j;
        for_each_subset_upto(odds, n - j, [&](const std::vector<int>& missing, int missing_sum) {
            const auto nu = complement(odds, missing);
            const int nu_len = static_cast<int>(nu.size());
            if (!matches(k, j - nu_len))
                return;
            const int pi_weight = n + all_odds - missing_sum;
            for_each_distinct(pi_weight, pi_weight, j, 2, 0, [&](const std::vector<int>& pi) {
                SignedPartition s{Partition(pi), Partition(nu)};
                if (check_F_signed(s))
                    out.push_back(std::move(s));
            });
        });
    }
    sort_canonical(out);
    return out;
}

std::vector<PartitionPair> enumerate_V(int n, Opt k, const Limits& limits)
{
    check_args(n, {}, k, limits);
    std::vector<PartitionPair> out;
    for (int b = 0; b <= n; ++b) {
        for_each_distinct(b, b, k, 1, 0, [&](const std::vector<int>& beta) {
            for_each_distinct(n - b, n - b, {}, 1, 0, [&](const std::vector<int>& alpha) {
                PartitionPair pair{Partition(alpha), Partition(beta)};
                if (check_V(pair))
                    out.push_back(std::move(pair));
            });
        });
    }
    sort_canonical(out);
    return out;
}

std::vector<XLabeledPartition> enumerate_A(int n, Opt k, const Limits& limits)
{
    check_args(n, {}, k, limits);
    std::vector<XLabeledPartition> out;
    for_each_distinct(n, n, {}, 1, 0, [&](const std::vector<int>& values) {
        const std::size_t len = values.size();
        for (unsigned long mask = 0; mask < (1UL << len); ++mask) {
            std::vector<LabeledPart> entries;
            for (std::size_t i = 0; i < len; ++i)
                entries.push_back({values[i], ((mask >> i) & 1UL) != 0});
            XLabeledPartition p(std::move(entries));
            if (check_A(p) && matches(k, p.labeled()))
                out.push_back(std::move(p));
        }
    });
    sort_canonical(out);
    return out;
}

std::vector<SignedPartition> enumerate_A_signed(int n, Opt k, const Limits& limits)
{
    check_args(n, {}, k, limits);
    std::vector<SignedPartition> out;
    // With l+ = j: the positives are at least the staircase 2j + ... + 4 + 2,
    // so |pi| >= j(j+1); the negatives are distinct and <= j, so
    // |nu| <= j(j+1)/2. Hence j(j+1)/2 <= n, and the values missing from nu
    // weigh j(j+1)/2 - |nu| <= n - j(j+1)/2.
    for (int j = 0; j * (j + 1) / 2 <= n; ++j) {
        std::vector<int> pool;
        for (int v = j; v >= 1; --v)
            pool.push_back(v);
        const int full = j * (j + 1) / 2;
        for_each_subset_upto(pool, n - full, [&](const std::vector<int>& missing, int missing_sum) {
            const auto nu = complement(pool, missing);
            if (!matches(k, j - static_cast<int>(nu.size())))
                return;
            const int slack = n + full - missing_sum - j * (j + 1);
            if (slack < 0)
                return;
            // pi_i = rho_i + 2(j - i + 1) for a partition rho into at most j parts.
            for_each_partition(slack, slack, j, [&](const std::vector<int>& rho) {
                std::vector<int> pi(j);
                for (int i = 0; i < j; ++i)
                    pi[i] = (i < static_cast<int>(rho.size()) ? rho[i] : 0) + 2 * (j - i);
                SignedPartition s{Partition(std::move(pi)), Partition(nu)};
                if (check_A_signed(s))
                    out.push_back(std::move(s));
            });
        });
    }
    sort_canonical(out);
    return out;
}

std::vector<BicoloredPartition> enumerate_B(int n, Opt k, const Limits& limits)
{
    check_args(n, {}, k, limits);
    std::vector<BicoloredPartition> out;
    for (int r = 0; r <= n; ++r) {
        for_each_distinct(r, r, k, 1, 0, [&](const std::vector<int>& reds) {
            for_each_distinct(n - r, n - r, {}, 1, 0, [&](const std::vector<int>& blues) {
                std::vector<ColoredPart> entries;
                for (int v : blues)
                    entries.push_back({v, Color::blue});
                for (int v : reds)
                    entries.push_back({v, Color::red});
                auto p = BicoloredPartition::canonical(std::move(entries));
                if (check_B(p))
                    out.push_back(std::move(p));
            });
        });
    }
    sort_canonical(out);
    return out;
}

std::vector<PartitionPair> enumerate_C(int n, Opt k, const Limits& limits)
{
    check_args(n, {}, k, limits);
    std::vector<PartitionPair> out;
    for (int b = 0; b <= n; b += 2) {
        for_each_distinct(b, b, k, 2, 0, [&](const std::vector<int>& beta) {
            for_each_distinct(n - b, n - b, {}, 1, 0, [&](const std::vector<int>& alpha) {
                PartitionPair pair{Partition(alpha), Partition(beta)};
                if (check_C(pair))
                    out.push_back(std::move(pair));
            });
        });
    }
    sort_canonical(out);
    return out;
}

namespace {

template <class T>
std::vector<FamilyValue> erase(std::vector<T> v)
{
    return {std::make_move_iterator(v.begin()), std::make_move_iterator(v.end())};
}

} // namespace

std::vector<FamilyValue> enumerate(Family family, int n, Opt m, Opt k, const Limits& limits)
{
    const bool refined_by_m =
        family == Family::ped || family == Family::F || family == Family::F_signed;
    if (m && !refined_by_m)
        throw UsageError("family " + std::string(family_name(family)) + " has no m parameter");
    switch (family) {
    case Family::ped: return erase(enumerate_ped(n, m, k, limits));
    case Family::F: return erase(enumerate_F(n, m, k, limits));
    case Family::F_signed: return erase(enumerate_F_signed(n, m, k, limits));
    case Family::V: return erase(enumerate_V(n, k, limits));
    case Family::A: return erase(enumerate_A(n, k, limits));
    case Family::A_signed: return erase(enumerate_A_signed(n, k, limits));
    case Family::B: return erase(enumerate_B(n, k, limits));
    case Family::C: return erase(enumerate_C(n, k, limits));
    }
    throw UsageError("unknown family");
}

} // namespace parteq
