#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seriesid/ledger.hpp"

namespace seriesid {

struct DiscoveryEntry {
  std::vector<LinearFactor> factors;
  /// Set when the closed form exists in the constant basis.
  std::optional<IdentityRecord> record;
  /// Otherwise the reason, e.g. an UnsupportedConstantBasis message.
  std::string error;
};

/// Closed forms of sum 1/prod(subset) for every subset of `pool` with
/// min_size..max_size factors. Subsets are ordered by size, then
/// lexicographically by position in `pool`. Records are named by their
/// rendered series expression.
std::vector<DiscoveryEntry> discover(const std::vector<LinearFactor>& pool, std::size_t min_size,
                                     std::size_t max_size);

}  // namespace seriesid
