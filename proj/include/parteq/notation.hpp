#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "parteq/membership.hpp"

namespace parteq {

// Text notation. Parts are joined by "+" in descending order and the empty
// partition renders as "0".
//
//   Partition           4+3+1
//   FPartition          4+1*+1+1+1      (1* is the overlined 1)
//   SignedPartition     8+6+2 | 5+3
//   XLabeledPartition   4x+2
//   BicoloredPartition  5b+4r+2b
//   PartitionPair       (3+1, 2)

std::string to_text(const Partition& p);
std::string to_text(const FPartition& p);
std::string to_text(const SignedPartition& s);
std::string to_text(const XLabeledPartition& p);
std::string to_text(const BicoloredPartition& p);
std::string to_text(const PartitionPair& p);
std::string to_text(const FamilyValue& v);

// Parsers throw StructureError on malformed text. Parts must already be in
// canonical order; "0", "ε" and the empty string all denote the empty
// partition. Bicolored parts without a suffix are read as blue.
Partition parse_partition(std::string_view text);
FPartition parse_f_partition(std::string_view text);
SignedPartition parse_signed(std::string_view text);
XLabeledPartition parse_x_labeled(std::string_view text);
BicoloredPartition parse_bicolored(std::string_view text);
PartitionPair parse_pair(std::string_view text);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const FPartition& p);
nlohmann::json to_json(const SignedPartition& s);
nlohmann::json to_json(const XLabeledPartition& p);
nlohmann::json to_json(const BicoloredPartition& p);
nlohmann::json to_json(const PartitionPair& p);
nlohmann::json to_json(const FamilyValue& v);

/// The carrier type each family uses.
enum class Carrier { partition, f_partition, signed_partition, x_labeled, pair, bicolored };
Carrier carrier_of(Family f);

/// Reads a value of the given carrier from JSON. Throws StructureError on
/// missing keys or wrong shapes.
FamilyValue value_from_json(Carrier carrier, const nlohmann::json& j);

/// Reads either JSON (input starting with '{') or text notation.
FamilyValue parse_value(Carrier carrier, std::string_view input);

} // namespace parteq
