#include "rainbow/trees.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <bitset>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "rainbow/errors.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// VertexSet / STree

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw DomainError("terminal set has a repeated vertex");
  if (members_.size() < 2) throw DomainError("terminal set needs at least 2 vertices");
  if (members_.front() < 1) throw DomainError("vertices are numbered from 1");
}

VertexSet VertexSet::first(int k) {
  std::vector<Vertex> members(static_cast<std::size_t>(std::max(k, 0)));
  std::iota(members.begin(), members.end(), 1);
  return VertexSet(std::move(members));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::check_within(int n) const {
  if (!members_.empty() && members_.back() > n)
    throw DomainError("vertex " + std::to_string(members_.back()) + " not in K_" + std::to_string(n));
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

STree::STree(VertexSet terminals, std::vector<Edge> edges)
    : terminals_(std::move(terminals)), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.first == e.second) throw DomainError("tree edge is a loop");
    if (e.first < 1 || e.second < 1) throw DomainError("vertices are numbered from 1");
    e = make_edge(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw DomainError("tree has a repeated edge");

  vertices_ = terminals_.members();
  for (const auto& [u, v] : edges_) {
    vertices_.push_back(u);
    vertices_.push_back(v);
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

  if (edges_.size() + 1 != vertices_.size()) throw DomainError("not a tree: |E| != |V| - 1");

  auto local = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(vertices_.begin(), vertices_.end(), v) -
                                    vertices_.begin());
  };
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> degree(vertices_.size(), 0);
  for (const auto& [u, v] : edges_) {
    const auto a = local(u);
    const auto b = local(v);
    ++degree[a];
    ++degree[b];
    const auto ra = find(a);
    const auto rb = find(b);
    if (ra == rb) throw DomainError("not a tree: edges contain a cycle");
    parent[ra] = rb;
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (degree[i] <= 1 && !terminals_.contains(vertices_[i]))
      throw DomainError("leaf " + std::to_string(vertices_[i]) + " is not a terminal");
}

std::vector<Vertex> STree::external_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v : vertices_)
    if (!terminals_.contains(v)) out.push_back(v);
  return out;
}

bool tree_less(const STree& a, const STree& b) {
  if (a.edges().size() != b.edges().size()) return a.edges().size() < b.edges().size();
  return a.edges() < b.edges();
}

OracleMode OracleMode::full(std::optional<int> budget) {
  if (budget && *budget < 1) throw DomainError("external-vertex budget must be at least 1");
  return {Kind::Full, budget};
}

int OracleMode::external_budget(int k) const {
  if (kind == Kind::Paper) return 1;
  return budget.value_or(std::max(1, k - 2));
}

std::string OracleMode::name() const {
  if (kind == Kind::Paper) return "paper";
  return budget ? "full:" + std::to_string(*budget) : "full";
}

std::string format_tree(const STree& tree) {
  std::string out = "T:";
  for (const auto& [u, v] : tree.edges()) out += " (" + std::to_string(u) + "," + std::to_string(v) + ")";
  return out;
}

// ---------------------------------------------------------------------------
// Predicates

namespace {

class ColorSeen {
 public:
  bool insert(Color c) {
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    std::uint64_t& word = words_[c >> 6];
    if (word & bit) return false;
    word |= bit;
    return true;
  }

 private:
  std::uint64_t words_[4] = {0, 0, 0, 0};
};

}  // namespace

bool is_rainbow(const STree& tree, const CompleteGraphColoring& coloring) {
  ColorSeen seen;
  for (const auto& [u, v] : tree.edges())
    if (!seen.insert(coloring.color(u, v))) return false;
  return true;
}

bool internally_disjoint(const STree& a, const STree& b) {
  if (a.terminals() != b.terminals()) return false;
  std::vector<Edge> shared;
  std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                        std::back_inserter(shared));
  if (!shared.empty()) return false;
  const auto ea = a.external_vertices();
  const auto eb = b.external_vertices();
  std::vector<Vertex> common;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common));
  return common.empty();
}

bool validate_family(const DisjointFamily& family, const CompleteGraphColoring& coloring) {
  for (const auto& tree : family.trees) {
    if (tree.terminals() != family.terminals) return false;
    if (!tree.vertices().empty() && tree.vertices().back() > coloring.n()) return false;
    if (!is_rainbow(tree, coloring)) return false;
  }
  for (std::size_t i = 0; i < family.trees.size(); ++i)
    for (std::size_t j = i + 1; j < family.trees.size(); ++j)
      if (!internally_disjoint(family.trees[i], family.trees[j])) return false;
  return true;
}

STree star_tree(const VertexSet& terminals, Vertex center) {
  if (terminals.contains(center))
    throw DomainError("star center " + std::to_string(center) + " lies in S");
  std::vector<Edge> edges;
  for (Vertex s : terminals) edges.push_back(make_edge(center, s));
  return STree(terminals, std::move(edges));
}

int rainbow_star_count(const VertexSet& terminals, const CompleteGraphColoring& coloring) {
  terminals.check_within(coloring.n());
  int count = 0;
  for (Vertex u = 1; u <= coloring.n(); ++u) {
    if (terminals.contains(u)) continue;
    ColorSeen seen;
    bool rainbow = true;
    for (Vertex s : terminals)
      if (!seen.insert(coloring.color(u, s))) {
        rainbow = false;
        break;
      }
    count += rainbow;
  }
  return count;
}

TreeClassification classify_stree(const STree& tree, const CompleteGraphColoring& coloring) {
  if (!is_rainbow(tree, coloring)) throw DomainError("classify_stree expects a rainbow tree");
  const int k = tree.terminals().size();
  const int edges = static_cast<int>(tree.edges().size());
  TreeClassification out{tree.is_internal() ? TreeClass::Internal : TreeClass::External, edges, edges};
  if (out.kind == TreeClass::Internal && out.color_count != k - 1)
    throw std::logic_error("internal rainbow S-tree without exactly k-1 colors");
  if (out.kind == TreeClass::External && out.color_count < k)
    throw std::logic_error("external rainbow S-tree with fewer than k colors");
  return out;
}

// ---------------------------------------------------------------------------
// Candidate generation

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

// Decodes a Prüfer sequence over local labels 0..m-1 into m-1 edges.
void decode_pruefer(const std::vector<int>& code, int m, std::vector<std::pair<int, int>>& edges) {
  edges.clear();
  std::vector<int> degree(static_cast<std::size_t>(m), 1);
  for (int x : code) ++degree[x];
  for (int x : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int a = -1;
  for (int v = 0; v < m; ++v)
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
        break;
      }
    }
}

// Emits every rainbow spanning tree of the complete graph on `local` whose
// vertices flagged `must_branch` have degree >= 2.
template <class Sink>
void rainbow_spanning_trees(const std::vector<Vertex>& local, const std::vector<bool>& must_branch,
                            const CompleteGraphColoring& coloring, Sink&& sink) {
  const int m = static_cast<int>(local.size());
  if (m - 1 > coloring.t()) return;
  std::vector<std::pair<int, int>> local_edges;
  std::vector<Edge> edges;
  auto emit = [&] {
    ColorSeen seen;
    edges.clear();
    for (const auto& [a, b] : local_edges) {
      const Vertex u = local[static_cast<std::size_t>(a)];
      const Vertex v = local[static_cast<std::size_t>(b)];
      if (!seen.insert(coloring.color(u, v))) return;
      edges.push_back(make_edge(u, v));
    }
    sink(edges);
  };
  if (m == 2) {
    local_edges = {{0, 1}};
    emit();
    return;
  }
  std::vector<int> code(static_cast<std::size_t>(m - 2), 0);
  std::vector<int> occurrences(static_cast<std::size_t>(m), 0);
  for (;;) {
    std::fill(occurrences.begin(), occurrences.end(), 0);
    for (int x : code) ++occurrences[static_cast<std::size_t>(x)];
    bool admissible = true;
    for (int v = 0; v < m; ++v)
      if (must_branch[static_cast<std::size_t>(v)] && occurrences[static_cast<std::size_t>(v)] == 0) {
        admissible = false;
        break;
      }
    if (admissible) {
      decode_pruefer(code, m, local_edges);
      emit();
    }
    std::size_t i = code.size();
    while (i > 0 && code[i - 1] == m - 1) code[--i] = 0;
    if (i == 0) break;
    ++code[i - 1];
  }
}

}  // namespace

std::vector<STree> rainbow_candidates(const VertexSet& terminals,
                                      const CompleteGraphColoring& coloring, const OracleMode& mode,
                                      std::uint64_t candidate_budget) {
  const int n = coloring.n();
  const int k = terminals.size();
  terminals.check_within(n);
  std::vector<Vertex> outside;
  for (Vertex v = 1; v <= n; ++v)
    if (!terminals.contains(v)) outside.push_back(v);

  // A rainbow tree has at most t edges, so at most t + 1 - k external vertices.
  const int budget = std::min({mode.external_budget(k), coloring.t() + 1 - k,
                               static_cast<int>(outside.size())});

  std::uint64_t raw = ipow(static_cast<std::uint64_t>(k), k - 2);
  if (mode.kind == OracleMode::Kind::Paper) {
    raw = sat_add(raw, outside.size());
  } else {
    for (int j = 1; j <= budget; ++j)
      raw = sat_add(raw, sat_mul(binomial(outside.size(), static_cast<std::uint64_t>(j)),
                                 ipow(static_cast<std::uint64_t>(k + j), k + j - 2)));
  }
  if (raw > candidate_budget)
    throw BudgetExceeded("candidate tree enumeration for S=" + terminals.to_string() +
                             " exceeds budget " + std::to_string(candidate_budget),
                         std::to_string(raw));

  std::vector<STree> out;
  auto sink = [&](const std::vector<Edge>& edges) { out.emplace_back(terminals, edges); };

  rainbow_spanning_trees(terminals.members(), std::vector<bool>(static_cast<std::size_t>(k), false),
                         coloring, sink);

  if (mode.kind == OracleMode::Kind::Paper) {
    if (k <= coloring.t())
      for (Vertex u : outside) {
        STree star = star_tree(terminals, u);
        if (is_rainbow(star, coloring)) out.push_back(std::move(star));
      }
  } else {
    for (int j = 1; j <= budget; ++j) {
      std::vector<int> pick(static_cast<std::size_t>(j));
      std::iota(pick.begin(), pick.end(), 0);
      const int pool = static_cast<int>(outside.size());
      for (;;) {
        std::vector<Vertex> local = terminals.members();
        for (int p : pick) local.push_back(outside[static_cast<std::size_t>(p)]);
        std::vector<bool> branch(local.size(), false);
        std::fill(branch.begin() + k, branch.end(), true);
        rainbow_spanning_trees(local, branch, coloring, sink);
        int i = j - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == pool - j + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int q = i + 1; q < j; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
      }
    }
  }
  std::sort(out.begin(), out.end(), tree_less);
  return out;
}

// ---------------------------------------------------------------------------
// Exact packing: maximum independent set in the conflict graph of candidates.

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

class PackingSolver {
 public:
  PackingSolver(const std::vector<STree>& trees, int n, std::optional<int> stop_at)
      : trees_(trees), stop_at_(stop_at), words_((trees.size() + 63) / 64) {
    const std::size_t edge_words = (pair_count(n) + 63) / 64;
    const std::size_t vertex_words = (static_cast<std::size_t>(n) + 64) / 64;
    std::vector<Bits> edge_sets(trees.size(), Bits(edge_words, 0));
    std::vector<Bits> vertex_sets(trees.size(), Bits(vertex_words, 0));
    Bits all_edges(edge_words, 0);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (const auto& [u, v] : trees[i].edges()) {
        set_bit(edge_sets[i], edge_index(n, u, v));
        set_bit(all_edges, edge_index(n, u, v));
      }
      for (Vertex x : trees[i].external_vertices()) set_bit(vertex_sets[i], static_cast<std::size_t>(x));
      edge_counts_.push_back(static_cast<int>(trees[i].edges().size()));
    }
    for (auto w : all_edges) capacity_ += std::popcount(w);
    conflicts_.assign(trees.size(), Bits(words_, 0));
    for (std::size_t i = 0; i < trees.size(); ++i)
      for (std::size_t j = i + 1; j < trees.size(); ++j) {
        bool clash = false;
        for (std::size_t w = 0; w < edge_words && !clash; ++w) clash = edge_sets[i][w] & edge_sets[j][w];
        for (std::size_t w = 0; w < vertex_words && !clash; ++w) clash = vertex_sets[i][w] & vertex_sets[j][w];
        if (clash) {
          set_bit(conflicts_[i], j);
          set_bit(conflicts_[j], i);
        }
      }
  }

  std::vector<std::size_t> solve() {
    Bits open(words_, 0);
    for (std::size_t i = 0; i < trees_.size(); ++i) set_bit(open, i);
    std::vector<std::size_t> chosen;
    search(open, chosen, 0);
    return best_;
  }

 private:
  bool done() const { return stop_at_ && static_cast<int>(best_.size()) >= *stop_at_; }

  void search(const Bits& open, std::vector<std::size_t>& chosen, int used_edges) {
    if (chosen.size() > best_.size()) best_ = chosen;
    if (done()) return;
    std::size_t first = trees_.size();
    std::size_t remaining = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      if (open[w] && first == trees_.size()) first = w * 64 + static_cast<std::size_t>(std::countr_zero(open[w]));
      remaining += static_cast<std::size_t>(std::popcount(open[w]));
    }
    if (remaining == 0) return;
    // Candidates are sorted by edge count, so `first` is the cheapest open tree.
    const auto by_edges = static_cast<std::size_t>((capacity_ - used_edges) / edge_counts_[first]);
    if (chosen.size() + std::min(remaining, by_edges) <= best_.size()) return;

    Bits with(open);
    for (std::size_t w = 0; w < words_; ++w) with[w] &= ~conflicts_[first][w];
    with[first >> 6] &= ~(std::uint64_t{1} << (first & 63));
    chosen.push_back(first);
    search(with, chosen, used_edges + edge_counts_[first]);
    chosen.pop_back();
    if (done()) return;

    Bits without(open);
    without[first >> 6] &= ~(std::uint64_t{1} << (first & 63));
    search(without, chosen, used_edges);
  }

  const std::vector<STree>& trees_;
  std::optional<int> stop_at_;
  std::size_t words_;
  std::vector<Bits> conflicts_;
  std::vector<int> edge_counts_;
  int capacity_ = 0;
  std::vector<std::size_t> best_;
};

DisjointFamily pack(const VertexSet& terminals, const std::vector<STree>& candidates, int n,
                    std::optional<int> stop_at) {
  DisjointFamily family{terminals, {}};
  if (candidates.empty()) return family;
  PackingSolver solver(candidates, n, stop_at);
  for (std::size_t i : solver.solve()) family.trees.push_back(candidates[i]);
  return family;
}

}  // namespace

DisjointFamily internal_tree_packing(const VertexSet& terminals, const CompleteGraphColoring& coloring) {
  terminals.check_within(coloring.n());
  std::vector<STree> internal;
  rainbow_spanning_trees(terminals.members(),
                         std::vector<bool>(static_cast<std::size_t>(terminals.size()), false), coloring,
                         [&](const std::vector<Edge>& edges) { internal.emplace_back(terminals, edges); });
  std::sort(internal.begin(), internal.end(), tree_less);
  return pack(terminals, internal, coloring.n(), std::nullopt);
}

OracleResult max_disjoint_rainbow_trees(const VertexSet& terminals,
                                        const CompleteGraphColoring& coloring,
                                        const OracleMode& mode, std::optional<int> stop_at,
                                        std::uint64_t candidate_budget) {
  const auto candidates = rainbow_candidates(terminals, coloring, mode, candidate_budget);
  OracleResult result;
  result.candidates = candidates.size();
  result.witness = pack(terminals, candidates, coloring.n(), stop_at);
  result.value = result.witness.size();
  return result;
}

// ---------------------------------------------------------------------------
// Verification

std::uint64_t subset_count(int n, int k) {
  if (k < 0 || n < 0) return 0;
  return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}

VertexSet subset_at(int n, int k, std::uint64_t rank) {
  std::vector<Vertex> members;
  Vertex v = 1;
  for (int i = 0; i < k; ++i) {
    for (;; ++v) {
      const std::uint64_t block = subset_count(n - v, k - i - 1);
      if (rank < block) break;
      rank -= block;
    }
    members.push_back(v++);
  }
  return VertexSet(std::move(members));
}

bool next_subset(std::vector<Vertex>& members, int n) {
  const int k = static_cast<int>(members.size());
  int i = k - 1;
  while (i >= 0 && members[static_cast<std::size_t>(i)] == n - k + 1 + i) --i;
  if (i < 0) return false;
  ++members[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) members[static_cast<std::size_t>(j)] = members[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

namespace {

// Stars plus internal packing: a lower bound valid in every mode.
int certificate_value(const VertexSet& s, const CompleteGraphColoring& coloring, int ell) {
  const int stars = rainbow_star_count(s, coloring);
  if (stars >= ell) return stars;
  return stars + internal_tree_packing(s, coloring).size();
}

int evaluate(const VertexSet& s, const CompleteGraphColoring& coloring, int ell,
             const VerifyOptions& options, bool exact) {
  if (exact) {
    const int stars = rainbow_star_count(s, coloring);
    const int internal = internal_tree_packing(s, coloring).size();
    if (!options.mode || options.mode->kind == OracleMode::Kind::Paper) return stars + internal;
    return max_disjoint_rainbow_trees(s, coloring, *options.mode, std::nullopt, options.candidate_budget).value;
  }
  const int cert = certificate_value(s, coloring, ell);
  if (cert >= ell || !options.mode || options.mode->kind == OracleMode::Kind::Paper) return cert;
  return max_disjoint_rainbow_trees(s, coloring, *options.mode, ell, options.candidate_budget).value;
}

}  // namespace

VerifyResult verify_coloring(const CompleteGraphColoring& coloring, int k, int ell,
                             const VerifyOptions& options) {
  const int n = coloring.n();
  if (k < 2 || k > n) throw DomainError("need 2 <= k <= n, got k=" + std::to_string(k));
  if (ell < 0) throw DomainError("demand must be non-negative");
  VerifyResult result;
  if (ell == 0 && !options.per_set_counts) return result;

  const std::uint64_t total = subset_count(n, k);
  const int workers = static_cast<int>(std::clamp<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(options.workers, 1)), 1, std::max<std::uint64_t>(total, 1)));
  std::atomic<std::uint64_t> first_failure{std::numeric_limits<std::uint64_t>::max()};
  std::vector<int> counts(options.per_set_counts ? total : 0, 0);
  std::mutex error_mutex;
  std::uint64_t error_rank = std::numeric_limits<std::uint64_t>::max();
  std::exception_ptr error;

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    std::vector<Vertex> members = subset_at(n, k, begin).members();
    for (std::uint64_t r = begin; r < end; ++r, next_subset(members, n)) {
      if (!options.per_set_counts && r > first_failure.load(std::memory_order_relaxed)) return;
      try {
        const VertexSet s(members);
        const int value = evaluate(s, coloring, ell, options, options.per_set_counts);
        if (options.per_set_counts) counts[r] = value;
        if (value < ell) {
          std::uint64_t seen = first_failure.load();
          while (r < seen && !first_failure.compare_exchange_weak(seen, r)) {
          }
          if (!options.per_set_counts) return;
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (r < error_rank) {
          error_rank = r;
          error = std::current_exception();
        }
        return;
      }
    }
  };

  if (workers == 1) {
    run(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(total, chunk * static_cast<std::uint64_t>(w));
      pool.emplace_back(run, begin, std::min(total, begin + chunk));
    }
  }

  const std::uint64_t failure = first_failure.load();
  if (error && error_rank < failure) std::rethrow_exception(error);
  if (failure != std::numeric_limits<std::uint64_t>::max()) {
    result.pass = false;
    result.witness = subset_at(n, k, failure);
    result.witness_count = options.per_set_counts ? counts[failure]
                                                  : evaluate(*result.witness, coloring, ell, options, true);
  }
  if (options.per_set_counts) {
    std::vector<Vertex> members = subset_at(n, k, 0).members();
    for (std::uint64_t r = 0; r < total; ++r, next_subset(members, n))
      result.per_set.emplace_back(VertexSet(members), counts[r]);
  }
  return result;
}

}  // namespace rainbow
