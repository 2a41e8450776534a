#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"

namespace rainbow {

// Unordered pair {first, second} with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Terminal set S: sorted, distinct vertices, at least two of them.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

  // {1, ..., k}
  static VertexSet first(int k);

  int size() const { return static_cast<int>(members_.size()); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // Throws DomainError unless every member lies in 1..n.
  void check_within(int n) const;

  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// A tree connecting the terminal set. Construction validates the tree shape
// (connected, |E| = |V| - 1), that S is spanned, and that every leaf is a
// terminal. Edges are kept sorted.
class STree {
 public:
  STree(VertexSet terminals, std::vector<Edge> edges);

  const VertexSet& terminals() const { return terminals_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Vertex> external_vertices() const;
  bool is_internal() const { return vertices_.size() == terminals_.members().size(); }

  friend bool operator==(const STree&, const STree&) = default;

 private:
  VertexSet terminals_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

// Orders trees by edge count, then by sorted edge list.
bool tree_less(const STree& a, const STree& b);

// Trees over one terminal set that are meant to be rainbow and pairwise
// internally disjoint; see validate_family.
struct DisjointFamily {
  VertexSet terminals;
  std::vector<STree> trees;

  int size() const { return static_cast<int>(trees.size()); }
};

// Candidate sets for the exact oracle.
//  Paper: trees whose vertex set is exactly S, plus the stars T(u).
//  Full:  trees with at most `budget` external vertices, all leaves in S.
//         Unset budget means k - 2 (at least 1).
struct OracleMode {
  enum class Kind { Paper, Full };
  Kind kind = Kind::Paper;
  std::optional<int> budget;

  static OracleMode paper() { return {Kind::Paper, std::nullopt}; }
  static OracleMode full(std::optional<int> budget = std::nullopt);

  int external_budget(int k) const;
  std::string name() const;
};

bool is_rainbow(const STree& tree, const CompleteGraphColoring& coloring);

// E(T) ∩ E(T') = ∅ and V(T) ∩ V(T') = S.
bool internally_disjoint(const STree& a, const STree& b);

// Every tree rainbow, all on `family.terminals`, and pairwise internally disjoint.
bool validate_family(const DisjointFamily& family, const CompleteGraphColoring& coloring);

// The star T(u) with edges {u s : s in S}.
STree star_tree(const VertexSet& terminals, Vertex center);

// Number of u outside S whose star T(u) is rainbow.
int rainbow_star_count(const VertexSet& terminals, const CompleteGraphColoring& coloring);

// Maximum set of pairwise edge-disjoint rainbow spanning trees of G[S].
DisjointFamily internal_tree_packing(const VertexSet& terminals, const CompleteGraphColoring& coloring);

enum class TreeClass { Internal, External };

struct TreeClassification {
  TreeClass kind;
  int edge_count;
  int color_count;
};

// Internal iff every edge lies in G[S]. The tree must be rainbow; internal
// trees carry exactly k-1 colors and external ones at least k.
TreeClassification classify_stree(const STree& tree, const CompleteGraphColoring& coloring);

inline constexpr std::uint64_t kDefaultCandidateBudget = 2'000'000;

// All rainbow candidate trees for S under `mode`, sorted by tree_less.
std::vector<STree> rainbow_candidates(const VertexSet& terminals,
                                      const CompleteGraphColoring& coloring, const OracleMode& mode,
                                      std::uint64_t candidate_budget = kDefaultCandidateBudget);

struct OracleResult {
  int value = 0;
  DisjointFamily witness;
  std::size_t candidates = 0;
};

// Exact maximum number of pairwise internally disjoint rainbow S-trees drawn
// from the mode's candidate set. With `stop_at`, search ends once a family of
// that size is found (the value is then a lower bound equal to stop_at).
OracleResult max_disjoint_rainbow_trees(const VertexSet& terminals,
                                        const CompleteGraphColoring& coloring,
                                        const OracleMode& mode,
                                        std::optional<int> stop_at = std::nullopt,
                                        std::uint64_t candidate_budget = kDefaultCandidateBudget);

struct VerifyOptions {
  // nullopt: star certificate only (stars plus internal packing).
  std::optional<OracleMode> mode = OracleMode::paper();
  int workers = 1;
  bool per_set_counts = false;
  std::uint64_t candidate_budget = kDefaultCandidateBudget;
};

struct VerifyResult {
  bool pass = true;
  std::optional<VertexSet> witness;
  int witness_count = 0;
  // Filled when VerifyOptions::per_set_counts is set, in lexicographic S order.
  std::vector<std::pair<VertexSet, int>> per_set;
};

// PASS iff every k-subset S has at least `ell` internally disjoint rainbow
// S-trees. S-sets are scanned lexicographically and the first failure is
// reported, independently of `workers`.
VerifyResult verify_coloring(const CompleteGraphColoring& coloring, int k, int ell,
                             const VerifyOptions& options = {});

// Lexicographic k-subsets of 1..n.
std::uint64_t subset_count(int n, int k);
VertexSet subset_at(int n, int k, std::uint64_t rank);
bool next_subset(std::vector<Vertex>& members, int n);

std::string format_tree(const STree& tree);

}  // namespace rainbow
