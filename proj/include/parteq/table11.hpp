#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parteq/partition.hpp"

namespace parteq {

/// The worked n = 11 correspondence for h, one "(ALPHA, BETA) -> IMAGE" row
/// per line, in the published notation: blue parts bare, red parts suffixed
/// "r", the empty partition written as ε. Compiled in from data/table11.txt.
std::string_view table11_golden();

/// C(11) in the published row order: by l(beta), then |beta| ascending,
/// beta descending, l(alpha) ascending, alpha descending.
std::vector<PartitionPair> table11_order();

/// Published notation for one side of a row.
std::string table_text(const PartitionPair& pair);
std::string table_text(const BicoloredPartition& lambda);

/// Rows computed by applying h to table11_order().
std::vector<std::string> table11_rows();

/// Differences between the computed rows and the golden file, one message
/// per differing line; empty when they agree byte for byte.
std::vector<std::string> table11_mismatches();

} // namespace parteq
