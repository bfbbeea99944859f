#pragma once

// Counterexample search over exhaustively enumerated small instances.

#include <optional>
#include <string>
#include <vector>

#include "pnbd/classify.hpp"

namespace pnbd {

struct SearchOptions {
  int max_points = 2;
  int probe_bound = 2;
  std::uint64_t seed = 1;
};

struct SearchResult {
  bool found = false;
  std::optional<Witness> witness;
  long long examined = 0;
  std::string summary;
};

const std::vector<std::string>& search_targets();
bool search_target_exists(const std::string& target);

// Canonically-least witness under the enumeration order, or an exhaustion
// report. Unknown targets throw DomainError.
SearchResult search_counterexample(const std::string& target, const SearchOptions& opts);

}  // namespace pnbd
