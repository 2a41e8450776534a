#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/bounds.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/trees.hpp"

namespace rainbow {

// Sampling setup. `mode` selects how a sampled coloring is judged:
// nullopt is the star certificate (stars T(u) plus exact internal packing),
// otherwise the exact oracle in the given mode.
struct TrialConfig {
  int n = 0;
  int k = 3;
  int ell = 1;
  int t = 3;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  std::optional<OracleMode> mode;
  int workers = 1;
};

struct WilsonInterval {
  double lo;
  double hi;
};

// 95% Wilson score interval.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t samples,
                               double z = 1.959963984540054);

// Comparators refer to a single k-set and p = k!/k^k:
//   exact_tail   Pr[X <= ell-1], X ~ Binomial(n-k, p)
//   chernoff     exp(-delta^2 mu / 2) when mu = (n-k)p > ell-1
//   union_bound  n^(k+ell-1) (1-p)^(n-(k+ell-1)) when n >= k+ell (all k-sets)
struct TrialSummary {
  std::uint64_t successes = 0;
  std::uint64_t samples = 0;
  double point_estimate = 0.0;
  WilsonInterval wilson{0.0, 1.0};
  std::optional<double> exact_tail;
  std::optional<double> chernoff;
  std::optional<double> union_bound;
  // estimate_AS_all: lowest-index successful sample, if any.
  std::optional<std::uint64_t> witness_sample;
  std::optional<CompleteGraphColoring> witness;
};

// Frequency of {fewer than ell rainbow stars on S = {1..k}}; requires t = k.
TrialSummary estimate_BS(const TrialConfig& config);

// Frequency with which a random t-coloring gives every k-set ell trees.
TrialSummary estimate_AS_all(const TrialConfig& config);

// True iff every k-set is covered by its star certificate.
bool star_certificate_pass(const CompleteGraphColoring& coloring, int k, int ell);

struct SweepRow {
  int n;
  TrialSummary summary;
};

struct ThresholdResult {
  std::optional<int> n;  // first n whose Wilson lower bound reaches the target
  std::vector<SweepRow> table;
};

// Row n uses master seed `seed + n`.
ThresholdResult empirical_threshold(int k, int ell, int t, std::uint64_t samples, double target,
                                    const std::vector<int>& n_values, std::uint64_t seed = 0,
                                    int workers = 1);

// exp(-(1/2) ((mu - ell + 1)/mu)^2 mu) with mu = (n-k) k!/k^k; needs mu > ell-1.
Real chernoff_tail_bound(int n, int k, int ell);

}  // namespace rainbow
