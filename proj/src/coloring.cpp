#include "rainbow/coloring.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

void check_shape(int n, int t) {
  if (n < 2) throw DomainError("vertex count must be at least 2, got " + std::to_string(n));
  if (t < 1) throw DomainError("palette size must be at least 1, got " + std::to_string(t));
  if (t > kMaxPalette)
    throw DomainError("palette size must be at most " + std::to_string(kMaxPalette));
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

}  // namespace

std::pair<Vertex, Vertex> edge_endpoints(int n, std::size_t index) {
  Vertex u = 1;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (index >= row) {
    index -= row;
    --row;
    ++u;
  }
  return {u, u + 1 + static_cast<Vertex>(index)};
}

CompleteGraphColoring::CompleteGraphColoring(int n, int t, std::vector<Color> colors)
    : n_(n), t_(t), colors_(std::move(colors)) {
  check_shape(n, t);
  if (colors_.size() != pair_count(n))
    throw DomainError("expected " + std::to_string(pair_count(n)) + " edge colors, got " +
                      std::to_string(colors_.size()));
  for (Color c : colors_)
    if (c < 1 || c > t)
      throw DomainError("color " + std::to_string(c) + " outside palette 1.." + std::to_string(t));
}

CompleteGraphColoring CompleteGraphColoring::monochromatic(int n, int t, Color c) {
  check_shape(n, t);
  return CompleteGraphColoring(n, t, std::vector<Color>(pair_count(n), c));
}

CompleteGraphColoring CompleteGraphColoring::recolored(std::size_t edge, Color c) const {
  std::vector<Color> next = colors_;
  next.at(edge) = c;
  return CompleteGraphColoring(n_, t_, std::move(next));
}

int ColorDegreeTable::row_sum(Vertex v) const {
  int sum = 0;
  for (int i = 1; i <= t_; ++i) sum += (*this)(v, static_cast<Color>(i));
  return sum;
}

CompleteGraphColoring random_coloring(int n, int t, SeededStream stream) {
  check_shape(n, t);
  StreamGenerator gen(stream);
  std::vector<Color> colors(pair_count(n));
  for (auto& c : colors) c = static_cast<Color>(gen.uniform_below(static_cast<std::uint32_t>(t)) + 1);
  return CompleteGraphColoring(n, t, std::move(colors));
}

ColorDegreeTable color_degrees(const CompleteGraphColoring& coloring) {
  ColorDegreeTable table(coloring.n(), coloring.t());
  std::size_t e = 0;
  for (Vertex u = 1; u <= coloring.n(); ++u)
    for (Vertex v = u + 1; v <= coloring.n(); ++v, ++e) {
      const Color c = coloring.color_at(e);
      ++table(u, c);
      ++table(v, c);
    }
  return table;
}

boost::multiprecision::cpp_int coloring_space_size(int n, int t, bool symmetry_breaking) {
  using boost::multiprecision::cpp_int;
  check_shape(n, t);
  const std::size_t m = pair_count(n);
  if (!symmetry_breaking) return boost::multiprecision::pow(cpp_int(t), static_cast<unsigned>(m));
  // Restricted growth strings: ways[j] = strings so far whose maximum is j.
  std::vector<cpp_int> ways(static_cast<std::size_t>(t) + 1, 0);
  ways[1] = 1;
  for (std::size_t i = 1; i < m; ++i) {
    for (int j = t; j >= 1; --j) {
      ways[j] = ways[j] * j + (j > 1 ? ways[j - 1] : cpp_int(0));
    }
  }
  cpp_int total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

ColoringEnumerator::ColoringEnumerator(int n, int t, bool symmetry_breaking, std::uint64_t budget)
    : n_(n), t_(t), breaking_(symmetry_breaking), length_(pair_count(n)) {
  const auto space = coloring_space_size(n, t, symmetry_breaking);
  if (space > budget)
    throw BudgetExceeded("coloring enumeration of K_" + std::to_string(n) + " with " +
                             std::to_string(t) + " colors exceeds budget " +
                             std::to_string(budget),
                         space.str());
  size_ = static_cast<std::uint64_t>(space);
  if (breaking_) {
    completions_.assign(length_ + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(t) + 1, 0));
    for (int j = 0; j <= t; ++j) completions_[length_][j] = 1;
    for (std::size_t i = length_; i-- > 0;) {
      for (int j = 0; j <= t; ++j) {
        std::uint64_t c = sat_mul(static_cast<std::uint64_t>(j), completions_[i + 1][j]);
        if (j < t) c = sat_add(c, completions_[i + 1][j + 1]);
        completions_[i][j] = c;
      }
    }
  }
  seek(0);
}

void ColoringEnumerator::seek(std::uint64_t rank) {
  rank_ = rank;
  primed_ = false;
  sequence_.assign(length_, 1);
  if (rank >= size_) return;
  if (!breaking_) {
    for (std::size_t i = length_; i-- > 0;) {
      sequence_[i] = static_cast<Color>(rank % static_cast<std::uint64_t>(t_) + 1);
      rank /= static_cast<std::uint64_t>(t_);
    }
    return;
  }
  int prefix_max = 0;
  for (std::size_t i = 0; i < length_; ++i) {
    const int limit = std::min(t_, prefix_max + 1);
    for (int v = 1; v <= limit; ++v) {
      const std::uint64_t count = completions_[i + 1][std::max(prefix_max, v)];
      if (rank < count) {
        sequence_[i] = static_cast<Color>(v);
        prefix_max = std::max(prefix_max, v);
        break;
      }
      rank -= count;
    }
  }
}

bool ColoringEnumerator::next() {
  if (!primed_) {
    primed_ = true;
    return rank_ < size_;
  }
  if (rank_ >= size_) return false;
  ++rank_;
  if (rank_ >= size_) return false;
  return advance();
}

bool ColoringEnumerator::advance() {
  std::vector<int> prefix_max(length_ + 1, 0);
  for (std::size_t i = 0; i < length_; ++i)
    prefix_max[i + 1] = std::max(prefix_max[i], static_cast<int>(sequence_[i]));
  for (std::size_t i = length_; i-- > 0;) {
    const int limit = breaking_ ? std::min(t_, prefix_max[i] + 1) : t_;
    if (sequence_[i] < limit) {
      ++sequence_[i];
      std::fill(sequence_.begin() + static_cast<std::ptrdiff_t>(i) + 1, sequence_.end(), Color{1});
      return true;
    }
  }
  return false;
}

CompleteGraphColoring ColoringEnumerator::coloring() const {
  return CompleteGraphColoring(n_, t_, sequence_);
}

std::vector<Color> ColoringEnumerator::canonicalize(std::span<const Color> sequence) {
  std::array<Color, kMaxPalette + 1> relabel{};
  Color next_label = 1;
  std::vector<Color> out;
  out.reserve(sequence.size());
  for (Color c : sequence) {
    if (relabel[c] == 0) relabel[c] = next_label++;
    out.push_back(relabel[c]);
  }
  return out;
}

void write_coloring(const CompleteGraphColoring& coloring, std::ostream& out) {
  const int n = coloring.n();
  out << n << ' ' << coloring.t() << '\n';
  for (Vertex u = 1; u < n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (v > u + 1) out << ' ';
      out << static_cast<int>(coloring.color(u, v));
    }
    out << '\n';
  }
}

std::string to_text(const CompleteGraphColoring& coloring) {
  std::ostringstream out;
  write_coloring(coloring, out);
  return out.str();
}

CompleteGraphColoring read_coloring(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long t = 0;
  std::size_t expected = 0;
  std::vector<Color> colors;

  auto parse_int = [&](const std::string& token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw ParseError(line_no, "expected an integer, found '" + token + "'");
    }
    if (used != token.size()) throw ParseError(line_no, "expected an integer, found '" + token + "'");
    return value;
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string token;
    if (!have_header) {
      std::vector<long long> fields;
      while (tokens >> token) fields.push_back(parse_int(token));
      if (fields.size() != 2) throw ParseError(line_no, "header must be \"n t\"");
      n = fields[0];
      t = fields[1];
      if (n < 2 || n > 4096) throw ParseError(line_no, "vertex count " + std::to_string(n) + " out of range");
      if (t < 1 || t > kMaxPalette)
        throw ParseError(line_no, "palette size " + std::to_string(t) + " out of range");
      expected = pair_count(static_cast<int>(n));
      colors.reserve(expected);
      have_header = true;
      continue;
    }
    while (tokens >> token) {
      const long long c = parse_int(token);
      if (c < 1) throw ParseError(line_no, "color " + std::to_string(c) + " below 1");
      if (c > t)
        throw ParseError(line_no, "color " + std::to_string(c) + " exceeds palette " + std::to_string(t));
      if (colors.size() == expected)
        throw ParseError(line_no, "more than " + std::to_string(expected) + " edge colors");
      colors.push_back(static_cast<Color>(c));
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (colors.size() != expected)
    throw ParseError(line_no, "expected " + std::to_string(expected) + " edge colors, got " +
                                  std::to_string(colors.size()));
  return CompleteGraphColoring(static_cast<int>(n), static_cast<int>(t), std::move(colors));
}

CompleteGraphColoring parse_coloring(const std::string& text) {
  std::istringstream in(text);
  return read_coloring(in);
}

CompleteGraphColoring load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_coloring(in);
}

void save_coloring(const CompleteGraphColoring& coloring, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_coloring(coloring, out);
}

}  // namespace rainbow
