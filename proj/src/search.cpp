#include "rainbow/search.hpp"

#include <algorithm>
#include <limits>

#include "rainbow/errors.hpp"

namespace rainbow {

SearchStrategy parse_strategy(const std::string& name) {
  if (name == "random") return SearchStrategy::Random;
  if (name == "exhaustive") return SearchStrategy::Exhaustive;
  if (name == "local") return SearchStrategy::Local;
  throw DomainError("unknown search strategy '" + name + "'");
}

std::string to_string(SearchStrategy strategy) {
  switch (strategy) {
    case SearchStrategy::Random: return "random";
    case SearchStrategy::Exhaustive: return "exhaustive";
    case SearchStrategy::Local: return "local";
  }
  return "?";
}

Deficit coloring_deficit(const CompleteGraphColoring& coloring, int k, int ell, const OracleMode& mode) {
  Deficit d;
  std::vector<Vertex> members(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) members[static_cast<std::size_t>(i)] = i + 1;
  do {
    const VertexSet s(members);
    int value = rainbow_star_count(s, coloring);
    if (value < ell) value += internal_tree_packing(s, coloring).size();
    if (value < ell && mode.kind == OracleMode::Kind::Full)
      value = max_disjoint_rainbow_trees(s, coloring, mode, ell).value;
    if (value < ell) {
      ++d.failing_sets;
      d.shortfall += ell - value;
    }
  } while (next_subset(members, coloring.n()));
  return d;
}

namespace {

bool passes(const CompleteGraphColoring& coloring, const SearchConfig& config) {
  VerifyOptions options;
  options.mode = config.mode;
  options.workers = config.workers;
  return verify_coloring(coloring, config.k, config.ell, options).pass;
}

SearchResult random_search(const SearchConfig& config) {
  SearchResult result;
  for (std::uint64_t i = 0; i < config.budget; ++i) {
    auto coloring = random_coloring(config.n, config.t, SeededStream{config.seed, i});
    ++result.evaluated;
    if (passes(coloring, config)) {
      result.coloring = std::move(coloring);
      return result;
    }
  }
  return result;
}

SearchResult exhaustive_search(const SearchConfig& config) {
  SearchResult result;
  // Rainbowness only depends on which edges share a color, so one
  // representative per color-permutation orbit suffices.
  ColoringEnumerator walk(config.n, config.t, true, std::numeric_limits<std::uint64_t>::max() - 1);
  while (result.evaluated < config.budget && walk.next()) {
    ++result.evaluated;
    auto coloring = walk.coloring();
    if (passes(coloring, config)) {
      result.coloring = std::move(coloring);
      return result;
    }
  }
  result.proven_none = result.evaluated == walk.size();
  return result;
}

// First-improvement hill climbing over single-edge recolorings, with sideways
// moves and random restarts on plateaus.
SearchResult local_search(const SearchConfig& config) {
  constexpr int kMaxSideways = 50;
  SearchResult result;
  StreamGenerator rng(SeededStream{config.seed, std::numeric_limits<std::uint64_t>::max()});
  const std::size_t m = pair_count(config.n);
  std::uint64_t restart = 0;

  while (result.evaluated < config.budget) {
    auto current = random_coloring(config.n, config.t, SeededStream{config.seed, restart++});
    Deficit score = coloring_deficit(current, config.k, config.ell, config.mode);
    ++result.evaluated;
    int sideways = 0;
    while (result.evaluated < config.budget) {
      if (score.failing_sets == 0) {
        if (passes(current, config)) {
          result.coloring = std::move(current);
          return result;
        }
        break;
      }
      // Random scan order over (edge, new color) moves.
      std::vector<std::pair<std::size_t, Color>> moves;
      for (std::size_t e = 0; e < m; ++e)
        for (int c = 1; c <= config.t; ++c)
          if (c != current.color_at(e)) moves.emplace_back(e, static_cast<Color>(c));
      for (std::size_t i = moves.size(); i > 1; --i)
        std::swap(moves[i - 1], moves[rng.uniform_below(static_cast<std::uint32_t>(i))]);

      bool moved = false;
      std::optional<CompleteGraphColoring> plateau;
      for (const auto& [e, c] : moves) {
        if (result.evaluated >= config.budget) break;
        auto candidate = current.recolored(e, c);
        const Deficit d = coloring_deficit(candidate, config.k, config.ell, config.mode);
        ++result.evaluated;
        if (d < score) {
          current = std::move(candidate);
          score = d;
          sideways = 0;
          moved = true;
          break;
        }
        if (d == score && !plateau) plateau = std::move(candidate);
      }
      if (moved) continue;
      if (!plateau || ++sideways > kMaxSideways) break;
      current = std::move(*plateau);
    }
  }
  return result;
}

}  // namespace

SearchResult search_coloring(const SearchConfig& config) {
  if (config.n < 2 || config.k < 2 || config.k > config.n)
    throw DomainError("need 2 <= k <= n");
  if (config.t < 1) throw DomainError("t must be at least 1");
  if (config.ell < 0) throw DomainError("ell must be non-negative");
  switch (config.strategy) {
    case SearchStrategy::Random: return random_search(config);
    case SearchStrategy::Exhaustive: return exhaustive_search(config);
    case SearchStrategy::Local: return local_search(config);
  }
  return {};
}

}  // namespace rainbow
