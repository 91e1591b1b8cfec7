#pragma once

#include <compare>
#include <map>
#include <string>

#include "parteq/membership.hpp"

namespace parteq {

/// Statistic name -> value. Keys per carrier type:
///   Partition          weight, length, even_parts, odd_parts
///   FPartition         weight, length, ones, odd_overlined
///   SignedPartition    weight, positive_parts, negative_parts
///   XLabeledPartition  weight, length, x_labels
///   PartitionPair      weight, alpha_length, beta_length
///   BicoloredPartition weight, length, red_parts
using Statistics = std::map<std::string, long long>;

Statistics statistics(const FamilyValue& value);

/// The refinement cell (n, m, k) a value occupies in a family. Families
/// refined by a single statistic leave m = -1.
struct Cell {
    int n = 0;
    int m = -1;
    int k = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// The statistics each family is graded by:
///   ped (l, l_e)   F (l_1, l_o-bar)   F_signed (l+, l+ - l-)
///   V l(beta)      A l_x              A_signed l+ - l-
///   B l_r          C l(beta)
/// Throws UsageError if the carrier type does not fit the family.
Cell cell_of(Family family, const FamilyValue& value);

} // namespace parteq
