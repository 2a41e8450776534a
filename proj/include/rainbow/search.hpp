#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rainbow/coloring.hpp"
#include "rainbow/trees.hpp"

namespace rainbow {

enum class SearchStrategy { Random, Exhaustive, Local };

SearchStrategy parse_strategy(const std::string& name);
std::string to_string(SearchStrategy strategy);

struct SearchConfig {
  int n = 6;
  int k = 3;
  int ell = 1;
  int t = 3;
  SearchStrategy strategy = SearchStrategy::Random;
  // Colorings sampled (random), enumerated (exhaustive) or objective
  // evaluations (local).
  std::uint64_t budget = 100'000;
  std::uint64_t seed = 0;
  OracleMode mode = OracleMode::full();
  int workers = 1;
};

struct SearchResult {
  std::optional<CompleteGraphColoring> coloring;
  std::uint64_t evaluated = 0;
  // Exhaustive only: the whole canonical space was scanned without success,
  // so no coloring with these parameters exists.
  bool proven_none = false;
};

SearchResult search_coloring(const SearchConfig& config);

// Number of k-sets below demand, and the summed shortfall, under `mode`.
struct Deficit {
  int failing_sets = 0;
  int shortfall = 0;
  friend auto operator<=>(const Deficit&, const Deficit&) = default;
};
Deficit coloring_deficit(const CompleteGraphColoring& coloring, int k, int ell, const OracleMode& mode);

}  // namespace rainbow
