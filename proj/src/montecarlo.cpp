#include "rainbow/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

void check_config(const TrialConfig& c) {
  if (c.samples < 1) throw DomainError("samples must be at least 1");
  if (c.n < 2) throw DomainError("n must be at least 2");
  if (c.k < 2 || c.k > c.n) throw DomainError("need 2 <= k <= n");
  if (c.t < 1) throw DomainError("t must be at least 1");
  if (c.ell < 0) throw DomainError("ell must be non-negative");
}

// Bitsets N_c(v) = {u : color(u, v) = c}. Counting rainbow stars on S sums,
// over injective color assignments to S, the size of the intersection of the
// matching neighborhoods; members of S drop out because N_c(v) omits v.
class ColorNeighborhoods {
 public:
  explicit ColorNeighborhoods(const CompleteGraphColoring& coloring)
      : n_(coloring.n()), t_(coloring.t()), words_((static_cast<std::size_t>(n_) + 64) / 64),
        bits_(static_cast<std::size_t>((n_ + 1) * t_) * words_, 0) {
    std::size_t e = 0;
    for (Vertex u = 1; u <= n_; ++u)
      for (Vertex v = u + 1; v <= n_; ++v, ++e) {
        const Color c = coloring.color_at(e);
        set(u, c, v);
        set(v, c, u);
      }
  }

  // Rainbow stars on `s`, counted up to `cap`.
  int stars(const std::vector<Vertex>& s, int cap) {
    scratch_.assign((s.size() + 1) * words_, ~std::uint64_t{0});
    int total = 0;
    descend(s, 0, 0, total, cap);
    return total;
  }

 private:
  const std::uint64_t* row(Vertex v, int c) const {
    return bits_.data() + (static_cast<std::size_t>(v * t_ + (c - 1))) * words_;
  }
  void set(Vertex v, Color c, Vertex u) {
    bits_[(static_cast<std::size_t>(v * t_ + (c - 1))) * words_ + static_cast<std::size_t>(u >> 6)] |=
        std::uint64_t{1} << (u & 63);
  }

  // Level d of scratch_ holds the vertices joined to s[0..d) by the colors
  // chosen so far.
  void descend(const std::vector<Vertex>& s, std::size_t depth, std::uint64_t used, int& total, int cap) {
    const std::uint64_t* acc = scratch_.data() + depth * words_;
    if (depth == s.size()) {
      for (std::size_t w = 0; w < words_; ++w) total += std::popcount(acc[w]);
      return;
    }
    std::uint64_t* next = scratch_.data() + (depth + 1) * words_;
    for (int c = 1; c <= t_ && total < cap; ++c) {
      if (used >> c & 1u) continue;
      const std::uint64_t* r = row(s[depth], c);
      std::uint64_t any = 0;
      for (std::size_t w = 0; w < words_; ++w) any |= next[w] = acc[w] & r[w];
      if (any) descend(s, depth + 1, used | (std::uint64_t{1} << c), total, cap);
    }
  }

  int n_;
  int t_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> scratch_;
};

double falling_factorial(int t, int k) {
  double r = 1;
  for (int i = 0; i < k; ++i) r *= t - i;
  return r;
}

void fill_comparators(TrialSummary& s, int n, int k, int ell, int t) {
  if (t != k || ell < 1 || n <= k) return;
  const Rational p = rainbow_star_prob(k);
  s.exact_tail = static_cast<double>(to_real(binomial_tail(n - k, p, ell - 1)));
  if (to_real(p) * (n - k) > ell - 1) s.chernoff = static_cast<double>(chernoff_tail_bound(n, k, ell));
  if (k >= 3 && n >= k + ell) s.union_bound = union_bound_failure(BigInt(n), k, ell).value;
}

// Runs `judge(sample_index)` over all samples split across workers; returns the
// success count and the lowest successful index.
template <class Judge>
std::pair<std::uint64_t, std::uint64_t> run_samples(std::uint64_t samples, int workers, Judge judge) {
  const auto none = std::numeric_limits<std::uint64_t>::max();
  workers = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)), 1, samples));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(workers), 0);
  std::vector<std::uint64_t> firsts(static_cast<std::size_t>(workers), none);
  auto work = [&](int w, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i)
      if (judge(i)) {
        ++counts[static_cast<std::size_t>(w)];
        firsts[static_cast<std::size_t>(w)] = std::min(firsts[static_cast<std::size_t>(w)], i);
      }
  };
  if (workers == 1) {
    work(0, 0, samples);
  } else {
    const std::uint64_t chunk = (samples + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(samples, chunk * static_cast<std::uint64_t>(w));
      pool.emplace_back(work, w, begin, std::min(samples, begin + chunk));
    }
  }
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return {total, *std::min_element(firsts.begin(), firsts.end())};
}

TrialSummary summarize(std::uint64_t successes, std::uint64_t samples) {
  TrialSummary s;
  s.successes = successes;
  s.samples = samples;
  s.point_estimate = static_cast<double>(successes) / static_cast<double>(samples);
  s.wilson = wilson_interval(successes, samples);
  return s;
}

}  // namespace

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t samples, double z) {
  if (samples == 0) return {0.0, 1.0};
  const double n = static_cast<double>(samples);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double center = (phat + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
  // Clamp so lo <= phat <= hi survives rounding at the 0/1 boundaries.
  return {std::min(phat, std::max(0.0, center - half)), std::max(phat, std::min(1.0, center + half))};
}

Real chernoff_tail_bound(int n, int k, int ell) {
  const Rational mu = Rational(n - k) * rainbow_star_prob(k);
  if (!(mu > ell - 1))
    throw DomainError("Chernoff bound needs (n-k)p > ell-1, got (n-k)p=" + to_string(to_real(mu), 8) +
                      " and ell-1=" + std::to_string(ell - 1));
  const Rational delta = (mu - ell + 1) / mu;
  return boost::multiprecision::exp(-to_real(delta * delta * mu / 2));
}

bool star_certificate_pass(const CompleteGraphColoring& coloring, int k, int ell) {
  const int n = coloring.n();
  if (k < 2 || k > n) throw DomainError("need 2 <= k <= n");
  if (ell <= 0) return true;
  const bool use_bits = coloring.t() <= 63 && falling_factorial(coloring.t(), k) <= 4.0 * n;
  std::optional<ColorNeighborhoods> hoods;
  if (use_bits) hoods.emplace(coloring);
  std::vector<Vertex> members(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) members[static_cast<std::size_t>(i)] = i + 1;
  do {
    int stars = 0;
    if (k <= coloring.t()) {
      stars = use_bits ? hoods->stars(members, ell) : rainbow_star_count(VertexSet(members), coloring);
    }
    if (stars >= ell) continue;
    if (stars + internal_tree_packing(VertexSet(members), coloring).size() < ell) return false;
  } while (next_subset(members, n));
  return true;
}

TrialSummary estimate_BS(const TrialConfig& config) {
  check_config(config);
  if (config.t != config.k) throw DomainError("estimate_BS colors with exactly k colors (t must equal k)");
  const VertexSet s = VertexSet::first(config.k);
  const auto [successes, first] = run_samples(config.samples, config.workers, [&](std::uint64_t i) {
    const auto coloring = random_coloring(config.n, config.t, SeededStream{config.seed, i});
    return rainbow_star_count(s, coloring) <= config.ell - 1;
  });
  (void)first;
  TrialSummary summary = summarize(successes, config.samples);
  fill_comparators(summary, config.n, config.k, config.ell, config.t);
  return summary;
}

TrialSummary estimate_AS_all(const TrialConfig& config) {
  check_config(config);
  const auto [successes, first] = run_samples(config.samples, config.workers, [&](std::uint64_t i) {
    const auto coloring = random_coloring(config.n, config.t, SeededStream{config.seed, i});
    if (!config.mode) return star_certificate_pass(coloring, config.k, config.ell);
    VerifyOptions options;
    options.mode = config.mode;
    return verify_coloring(coloring, config.k, config.ell, options).pass;
  });
  TrialSummary summary = summarize(successes, config.samples);
  if (successes > 0) {
    summary.witness_sample = first;
    summary.witness = random_coloring(config.n, config.t, SeededStream{config.seed, first});
  }
  fill_comparators(summary, config.n, config.k, config.ell, config.t);
  return summary;
}

ThresholdResult empirical_threshold(int k, int ell, int t, std::uint64_t samples, double target,
                                    const std::vector<int>& n_values, std::uint64_t seed, int workers) {
  ThresholdResult result;
  for (int n : n_values) {
    TrialConfig config;
    config.n = n;
    config.k = k;
    config.ell = ell;
    config.t = t;
    config.samples = samples;
    config.seed = seed + static_cast<std::uint64_t>(n);
    config.workers = workers;
    TrialSummary summary = estimate_AS_all(config);
    summary.witness.reset();
    if (!result.n && summary.wilson.lo >= target) result.n = n;
    result.table.push_back({n, std::move(summary)});
  }
  return result;
}

}  // namespace rainbow
