#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "parteq/partition.hpp"

namespace parteq {

/// The eight partition families.
///
///   ped       partitions with distinct even parts
///   F         overlined-one partitions bounded by twice the number of ones
///   F_signed  signed: distinct even positives, distinct odd negatives <= 2l+ - 1
///   V         pairs of distinct-part partitions with max(beta) <= l(alpha)
///   A         x-labeled distinct-part partitions, labeled parts gap >= 2
///   A_signed  signed: positives gap >= 2 and >= 2, distinct negatives <= l+
///   B         bicolored partitions with a red-to-blue matching
///   C         distinct alpha with distinct even beta
enum class Family { ped, F, F_signed, V, A, A_signed, B, C };

inline constexpr Family all_families[] = {
    Family::ped, Family::F, Family::F_signed, Family::V,
    Family::A,   Family::A_signed, Family::B, Family::C,
};

std::string_view family_name(Family f);
/// Accepts the names above plus the short forms "F-1" and "A-1".
/// Throws UsageError on anything else.
Family parse_family(std::string_view tag);

using FamilyValue = std::variant<Partition, FPartition, SignedPartition, XLabeledPartition,
                                 PartitionPair, BicoloredPartition>;

struct Verdict {
    bool ok = true;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

Verdict check_ped(const Partition& p);
Verdict check_F(const FPartition& p);
Verdict check_F_signed(const SignedPartition& s);
Verdict check_V(const PartitionPair& pair);
Verdict check_A(const XLabeledPartition& p);
Verdict check_A_signed(const SignedPartition& s);
Verdict check_B(const BicoloredPartition& p);
Verdict check_C(const PartitionPair& pair);

/// Dispatches on `family`. A value of the wrong carrier type fails with a
/// reason rather than throwing.
Verdict validate_membership(Family family, const FamilyValue& value);

/// For each red entry (in entry order) the index of a distinct blue entry
/// of value c or c+1, found by augmenting paths. nullopt when none exists.
/// Entries with repeated blue or red values are still accepted here; that
/// is condition (a), checked separately by check_B.
std::optional<std::vector<std::size_t>> red_blue_matching(const BicoloredPartition& p);

} // namespace parteq
