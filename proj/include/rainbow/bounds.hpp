#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "rainbow/coloring.hpp"

namespace rainbow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// 50 significant decimal digits; every threshold is evaluated in this type
// before rounding so ceilings near integers come out right.
using Real = boost::multiprecision::cpp_dec_float_50;

Real to_real(const Rational& r);
BigInt ceil_rational(const Rational& r);
BigInt ceil_real(const Real& x);
// Accepts "a/b", an integer, or a plain decimal such as "0.5".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
std::string to_string(const Real& x, int digits = 12);

// p = k!/k^k, the probability that a fixed star T(u) is rainbow under a
// uniform k-coloring.
Rational rainbow_star_prob(int k);

// 1 / (1 - p).
Rational inverse_miss_prob(int k);

// 4 * ceil(((k + ell - 1) / ln(1/(1-p)))^2).
BigInt n1_bound(int k, int ell);

// n^(k+ell-1) (1-p)^(n-(k+ell-1)), the union bound on the probability that
// some k-set lacks ell rainbow stars. Evaluated through logarithms.
struct UnionBound {
  Real log_value;
  double value;
  bool certified;  // value <= 1
};
UnionBound union_bound_failure(const BigInt& n, int k, int ell);

// Pr[X <= max_successes] for X ~ Binomial(trials, p), exactly.
Rational binomial_tail(int trials, const Rational& p, int max_successes);

// Exact tail versus the two closed forms bounding it:
//   middle = C(n-k, ell-1) (1-p)^(n-k-ell+1)
//   right  = n^(ell-1)     (1-p)^(n-k-ell+1)
struct TailChain {
  Rational exact;
  Rational middle;
  Rational right;
  bool exact_within_middle;   // exact <= middle
  bool middle_within_right;   // middle <= right (strict once ell >= 2)
  bool exact_within_right;    // exact <= right
  bool anomaly() const { return !exact_within_middle; }
};
TailChain binomial_upper_vs_union(int n, int k, int ell);

// g(x) = k ln x - (p eps^2 / 2)(x - k); its largest root is theta(eps, k).
Real chernoff_g(const Real& x, const Rational& eps, int k);
Real chernoff_theta(const Rational& eps, int k, const Real& tol = Real("1e-9"));

// ceil(p (theta - k)(1 - eps) + 1)
BigInt ell_min(const Rational& eps, int k);
// ceil((ell - 1) / (p (1 - eps)) + k); requires ell >= ell_min(eps, k).
BigInt n_threshold(const Rational& eps, int k, int ell);

// (sum t_i)! / prod t_i! with t_i = argument - 1; bounds R(arg_1, ..., arg_r).
BigInt multicolor_ramsey_upper(std::span<const int> arguments);

enum class N2Kind { TrivialK, RamseyUpper };
std::string to_string(N2Kind kind);

struct N2Bound {
  N2Kind kind;
  BigInt value;  // k, or the multinomial upper bound on R_{k-1}(k)
};
N2Bound n2_bound(int k, int ell);

struct BoundReport {
  int k = 0;
  int ell = 0;
  Rational p;
  Rational f_k;
  BigInt n1;
  N2Kind n2_kind = N2Kind::TrivialK;
  BigInt n2;
  BigInt combined_n;
  std::optional<Rational> eps;
  std::optional<Real> theta;
  std::optional<BigInt> ell_min;
  std::optional<BigInt> n_threshold;
};

// Without eps: max(N1, N2). With eps: max(N2, n_threshold), and at least 6
// when k = 3.
BoundReport combined_N(int k, int ell, std::optional<Rational> eps = std::nullopt);

// 2(n-1)^2 / (9(n-2)) + 3
Rational averaging_bound(int n);

struct ExpectedXUpper {
  Rational upper;         // 3 + (1/C(n,3)) sum_v d1(v) d2(v) d3(v)
  Rational star_average;  // (1/C(n,3)) sum_S rainbow_star_count(S)
};
// 3-colorings only.
ExpectedXUpper expected_X_upper(const CompleteGraphColoring& coloring);

}  // namespace rainbow
