#pragma once

#include <string_view>
#include <vector>

#include "parteq/membership.hpp"

namespace parteq {

// Each map checks its input against the domain family (DomainError) and its
// output against the codomain family and the statistics it promises
// (IntegrityError). Positions below are 1-based.

/// P_ed(n,m,k) -> F(n,m,k): l(lambda) becomes the number of plain ones,
/// the even-part count becomes the odd-part-plus-overline count.
FPartition apply_f1(const Partition& lambda);
Partition apply_f1_inv(const FPartition& mu);

/// P_ed(n,m,k) -> F_-1(n,m,k): l(lambda) = l+, l_e(lambda) = l+ - l-.
SignedPartition apply_f2(const Partition& lambda);
Partition apply_f2_inv(const SignedPartition& sigma);

/// V(n,k) -> A(n,k): the parts of beta become the labeled positions.
XLabeledPartition apply_g1(const PartitionPair& pair);
PartitionPair apply_g1_inv(const XLabeledPartition& lambda);

/// A(n,k) -> A_-1(n,k): the unlabeled positions become the negative parts.
/// Preserves the number of parts: l(lambda) = l+.
SignedPartition apply_g2(const XLabeledPartition& lambda);
XLabeledPartition apply_g2_inv(const SignedPartition& sigma);

/// C(n,k) -> B(n,k): l(beta) becomes the number of red parts.
BicoloredPartition apply_h(const PartitionPair& pair);
/// Searches every admissible red-to-blue pairing and returns the unique
/// preimage. IntegrityError if none, BijectivityError if several.
PartitionPair apply_h_inv(const BicoloredPartition& lambda);
/// All preimages found by the search (exactly one for members of B).
std::vector<PartitionPair> h_preimages(const BicoloredPartition& lambda);

/// One slot of the sequence built by h before it is sorted into canonical
/// order. `pair` is the 0-based index j of the beta' pair a slot belongs to,
/// or -1 for a plain part.
struct HSlot {
    int value = 0;
    Color color = Color::blue;
    int pair = -1;

    friend bool operator==(const HSlot&, const HSlot&) = default;
};
std::vector<HSlot> h_sequence(const PartitionPair& pair);

enum class Bijection { f1, f2, g1, g2, h };

inline constexpr Bijection all_bijections[] = {Bijection::f1, Bijection::f2, Bijection::g1,
                                               Bijection::g2, Bijection::h};

std::string_view bijection_name(Bijection b);
/// Throws UsageError for unknown tags.
Bijection parse_bijection(std::string_view tag);
Family domain_of(Bijection b);
Family codomain_of(Bijection b);

/// Type-erased application. Throws DomainError when the value has the wrong
/// carrier type.
FamilyValue apply_forward(Bijection b, const FamilyValue& value);
FamilyValue apply_inverse(Bijection b, const FamilyValue& value);

} // namespace parteq
