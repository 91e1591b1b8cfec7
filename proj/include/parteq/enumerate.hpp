#pragma once

#include <optional>
#include <vector>

#include "parteq/membership.hpp"

namespace parteq {

/// Enumeration cap. Requests above `max_n` throw LimitError instead of
/// running for hours.
struct Limits {
    int max_n = 60;

    /// Default cap, overridden by PARTEQ_LIMIT when it holds an integer.
    static Limits from_env();
};

using Opt = std::optional<int>;

// Every generator returns the members of the requested cell, or the union
// over omitted parameters, sorted in canonical descending order. Negative
// arguments throw UsageError; n above the cap throws LimitError.

/// P_ed(n, m, k): m parts, k of them even.
std::vector<Partition> enumerate_ped(int n, Opt m = {}, Opt k = {}, const Limits& = {});
/// F(n, m, k): m plain ones, k = odd parts above 1 plus the overlined 1.
std::vector<FPartition> enumerate_F(int n, Opt m = {}, Opt k = {}, const Limits& = {});
/// F_-1(n, m, k): m positive parts, m - k negative parts.
std::vector<SignedPartition> enumerate_F_signed(int n, Opt m = {}, Opt k = {}, const Limits& = {});
/// V(n, k): k = l(beta).
std::vector<PartitionPair> enumerate_V(int n, Opt k = {}, const Limits& = {});
/// A(n, k): k labeled parts.
std::vector<XLabeledPartition> enumerate_A(int n, Opt k = {}, const Limits& = {});
/// A_-1(n, k): k = l+ - l-.
std::vector<SignedPartition> enumerate_A_signed(int n, Opt k = {}, const Limits& = {});
/// B(n, k): k red parts.
std::vector<BicoloredPartition> enumerate_B(int n, Opt k = {}, const Limits& = {});
/// C(n, k): k = l(beta).
std::vector<PartitionPair> enumerate_C(int n, Opt k = {}, const Limits& = {});

/// Type-erased front end. `m` is only meaningful for ped, F and F_signed;
/// passing it for another family throws UsageError.
std::vector<FamilyValue> enumerate(Family family, int n, Opt m = {}, Opt k = {},
                                   const Limits& = {});

} // namespace parteq
