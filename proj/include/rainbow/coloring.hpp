#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rainbow/philox.hpp"

namespace rainbow {

// Vertices are 1-based in every public interface: v in 1..n.
using Vertex = int;
// Colors are 1-based: c in 1..t.
using Color = std::uint8_t;

inline constexpr int kMaxPalette = 255;

// Position of edge {u,v} in the lexicographic pair order
// (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).
constexpr std::size_t edge_index(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  const auto a = static_cast<std::size_t>(u - 1);
  return a * static_cast<std::size_t>(2 * n - u) / 2 + static_cast<std::size_t>(v - u - 1);
}

constexpr std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

// Inverse of edge_index.
std::pair<Vertex, Vertex> edge_endpoints(int n, std::size_t index);

// Edge-coloring of K_n with palette 1..t, stored densely in lexicographic
// pair order. Immutable once built; `recolored` returns a modified copy.
class CompleteGraphColoring {
 public:
  CompleteGraphColoring(int n, int t, std::vector<Color> colors);

  static CompleteGraphColoring monochromatic(int n, int t, Color c = 1);

  int n() const { return n_; }
  int t() const { return t_; }
  std::size_t edge_count() const { return colors_.size(); }

  Color color(Vertex u, Vertex v) const { return colors_[edge_index(n_, u, v)]; }
  Color color_at(std::size_t edge) const { return colors_[edge]; }
  std::span<const Color> colors() const { return colors_; }

  CompleteGraphColoring recolored(std::size_t edge, Color c) const;

  friend bool operator==(const CompleteGraphColoring&, const CompleteGraphColoring&) = default;

 private:
  int n_;
  int t_;
  std::vector<Color> colors_;
};

// d(v, i): number of edges of color i at vertex v.
class ColorDegreeTable {
 public:
  ColorDegreeTable(int n, int t) : n_(n), t_(t), counts_(static_cast<std::size_t>(n * t), 0) {}

  int n() const { return n_; }
  int t() const { return t_; }
  int operator()(Vertex v, Color i) const { return counts_[slot(v, i)]; }
  int& operator()(Vertex v, Color i) { return counts_[slot(v, i)]; }
  int row_sum(Vertex v) const;

 private:
  std::size_t slot(Vertex v, Color i) const {
    return static_cast<std::size_t>((v - 1) * t_ + (i - 1));
  }
  int n_;
  int t_;
  std::vector<int> counts_;
};

// Uniform, independent edge colors drawn from the stream in lexicographic edge order.
CompleteGraphColoring random_coloring(int n, int t, SeededStream stream);

ColorDegreeTable color_degrees(const CompleteGraphColoring& coloring);

// Size of the enumeration space: t^(n(n-1)/2) without symmetry breaking, or the
// number of color-permutation orbits (restricted growth strings with at most
// t distinct values) with it.
boost::multiprecision::cpp_int coloring_space_size(int n, int t, bool symmetry_breaking);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// Enumerates colorings of K_n in lexicographic order of their color
// sequences. With symmetry breaking only canonical sequences are produced:
// colors first appear in increasing order 1,2,3,... along the edge order.
// The space is rank-addressable so it can be split into independent ranges.
class ColoringEnumerator {
 public:
  ColoringEnumerator(int n, int t, bool symmetry_breaking,
                     std::uint64_t budget = kDefaultEnumerationBudget);

  std::uint64_t size() const { return size_; }

  // Positions the enumerator at `rank` (0-based); the next call to next()
  // yields that coloring.
  void seek(std::uint64_t rank);

  // Advances and returns false once the range is exhausted.
  bool next();

  std::span<const Color> current() const { return sequence_; }
  CompleteGraphColoring coloring() const;
  std::uint64_t rank() const { return rank_; }

  // Canonical (first-occurrence) relabeling of an arbitrary color sequence.
  static std::vector<Color> canonicalize(std::span<const Color> sequence);

 private:
  bool advance();

  int n_;
  int t_;
  bool breaking_;
  std::size_t length_;
  std::uint64_t size_ = 0;
  std::uint64_t rank_ = 0;
  bool primed_ = false;
  std::vector<Color> sequence_;
  // completions_[i][m]: canonical suffixes from position i given prefix max m.
  std::vector<std::vector<std::uint64_t>> completions_;
};

// Coloring file: line 1 "n t", then n(n-1)/2 colors in lexicographic edge
// order separated by spaces or newlines; lines starting with '#' are ignored.
void write_coloring(const CompleteGraphColoring& coloring, std::ostream& out);
std::string to_text(const CompleteGraphColoring& coloring);
CompleteGraphColoring read_coloring(std::istream& in);
CompleteGraphColoring parse_coloring(const std::string& text);
CompleteGraphColoring load_coloring(const std::string& path);
void save_coloring(const CompleteGraphColoring& coloring, const std::string& path);

}  // namespace rainbow
