#include "rainbow/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rainbow/errors.hpp"
#include "rainbow/trees.hpp"

namespace rainbow {

namespace mp = boost::multiprecision;

namespace {

void require_k(int k, int min_k) {
  if (k < min_k) throw DomainError("k must be at least " + std::to_string(min_k) + ", got " + std::to_string(k));
}

void require_eps(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw DomainError("eps must lie strictly between 0 and 1, got " + to_string(eps));
}

BigInt factorial(int m) {
  BigInt r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

Rational rational_pow(const Rational& base, int exp) {
  return Rational(mp::pow(mp::numerator(base), static_cast<unsigned>(exp)),
                  mp::pow(mp::denominator(base), static_cast<unsigned>(exp)));
}

}  // namespace

Real to_real(const Rational& r) { return Real(mp::numerator(r)) / Real(mp::denominator(r)); }

BigInt ceil_rational(const Rational& r) {
  const BigInt num = mp::numerator(r);
  const BigInt den = mp::denominator(r);
  BigInt q = num / den;
  if (q * den < num) ++q;
  return q;
}

BigInt ceil_real(const Real& x) { return static_cast<BigInt>(mp::ceil(x)); }

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return DomainError("not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw bad();
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash != std::string::npos) {
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_int(text));
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.empty()) throw bad();
  for (char c : frac)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
  const bool negative = !whole.empty() && whole[0] == '-';
  const BigInt int_part = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0) : parse_int(whole);
  const BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(frac.size()));
  Rational r = Rational(mp::abs(int_part)) + Rational(BigInt(frac), scale);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  if (mp::denominator(r) == 1) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

std::string to_string(const Real& x, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << x;
  return out.str();
}

Rational rainbow_star_prob(int k) {
  require_k(k, 2);
  return Rational(factorial(k), mp::pow(BigInt(k), static_cast<unsigned>(k)));
}

Rational inverse_miss_prob(int k) { return 1 / (1 - rainbow_star_prob(k)); }

BigInt n1_bound(int k, int ell) {
  require_k(k, 3);
  if (ell < 1) throw DomainError("ell must be at least 1");
  const Real log_f = mp::log(to_real(inverse_miss_prob(k)));
  const Real ratio = Real(k + ell - 1) / log_f;
  return 4 * ceil_real(ratio * ratio);
}

UnionBound union_bound_failure(const BigInt& n, int k, int ell) {
  require_k(k, 3);
  if (ell < 1) throw DomainError("ell must be at least 1");
  if (n < k + ell) throw DomainError("union bound requires n >= k + ell = " + std::to_string(k + ell));
  const int m = k + ell - 1;
  const Real log_miss = mp::log(to_real(1 - rainbow_star_prob(k)));
  const Real log_value = Real(m) * mp::log(Real(n)) + Real(n - m) * log_miss;
  return {log_value, static_cast<double>(mp::exp(log_value)), log_value <= 0};
}

Rational binomial_tail(int trials, const Rational& p, int max_successes) {
  if (trials < 0) throw DomainError("trials must be non-negative");
  if (max_successes < 0) return 0;
  const Rational q = 1 - p;
  Rational sum = 0;
  BigInt choose = 1;
  for (int j = 0; j <= std::min(max_successes, trials); ++j) {
    if (j > 0) choose = choose * (trials - j + 1) / j;
    sum += Rational(choose) * rational_pow(p, j) * rational_pow(q, trials - j);
  }
  return sum;
}

TailChain binomial_upper_vs_union(int n, int k, int ell) {
  require_k(k, 2);
  if (ell < 1 || n - k < ell)
    throw DomainError("need n - k >= ell >= 1, got n=" + std::to_string(n) + " k=" + std::to_string(k) +
                      " ell=" + std::to_string(ell));
  const Rational p = rainbow_star_prob(k);
  const int stars = n - k;
  const Rational miss = rational_pow(1 - p, stars - ell + 1);
  BigInt choose = 1;
  for (int j = 1; j <= ell - 1; ++j) choose = choose * (stars - j + 1) / j;
  TailChain chain;
  chain.exact = binomial_tail(stars, p, ell - 1);
  chain.middle = Rational(choose) * miss;
  chain.right = Rational(mp::pow(BigInt(n), static_cast<unsigned>(ell - 1))) * miss;
  chain.exact_within_middle = chain.exact <= chain.middle;
  chain.middle_within_right = ell >= 2 ? chain.middle < chain.right : chain.middle <= chain.right;
  chain.exact_within_right = chain.exact <= chain.right;
  return chain;
}

Real chernoff_g(const Real& x, const Rational& eps, int k) {
  const Real slope = to_real(rainbow_star_prob(k) * eps * eps / 2);
  return Real(k) * mp::log(x) - slope * (x - k);
}

Real chernoff_theta(const Rational& eps, int k, const Real& tol) {
  require_k(k, 3);
  require_eps(eps);
  if (tol <= 0) throw DomainError("tolerance must be positive");
  // g rises up to x* = 2k / (p eps^2) and falls to -infinity after it.
  const Real peak = to_real(Rational(2 * k) / (rainbow_star_prob(k) * eps * eps));
  Real lo = peak;
  Real hi = 2 * peak;
  while (chernoff_g(hi, eps, k) >= 0) {
    lo = hi;
    hi *= 2;
  }
  Real mid = (lo + hi) / 2;
  for (int iter = 0; iter < 1000; ++iter) {
    mid = (lo + hi) / 2;
    const Real g = chernoff_g(mid, eps, k);
    if (mp::abs(g) <= tol && hi - lo <= tol) break;
    (g > 0 ? lo : hi) = mid;
  }
  return mid;
}

BigInt ell_min(const Rational& eps, int k) {
  const Real theta = chernoff_theta(eps, k);
  const Real p = to_real(rainbow_star_prob(k));
  return ceil_real(p * (theta - k) * to_real(1 - eps) + 1);
}

BigInt n_threshold(const Rational& eps, int k, int ell) {
  require_k(k, 3);
  require_eps(eps);
  const BigInt minimum = ell_min(eps, k);
  if (ell < minimum)
    throw DomainError("ell=" + std::to_string(ell) + " is below the minimum " + minimum.str() +
                      " for eps=" + to_string(eps) + ", k=" + std::to_string(k));
  return ceil_rational(Rational(ell - 1) / (rainbow_star_prob(k) * (1 - eps)) + k);
}

BigInt multicolor_ramsey_upper(std::span<const int> arguments) {
  if (arguments.empty()) throw DomainError("Ramsey query needs at least one argument");
  int total = 0;
  for (int a : arguments) {
    if (a < 2) throw DomainError("Ramsey arguments must be at least 2, got " + std::to_string(a));
    total += a - 1;
  }
  BigInt value = factorial(total);
  for (int a : arguments) value /= factorial(a - 1);
  return value;
}

std::string to_string(N2Kind kind) { return kind == N2Kind::TrivialK ? "TrivialK" : "RamseyUpper"; }

N2Bound n2_bound(int k, int ell) {
  require_k(k, 3);
  if (ell < 1) throw DomainError("ell must be at least 1");
  if (ell > k / 2) return {N2Kind::TrivialK, BigInt(k)};
  const std::vector<int> args(static_cast<std::size_t>(k - 1), k);
  return {N2Kind::RamseyUpper, multicolor_ramsey_upper(args)};
}

BoundReport combined_N(int k, int ell, std::optional<Rational> eps) {
  BoundReport r;
  r.k = k;
  r.ell = ell;
  r.p = rainbow_star_prob(k);
  r.f_k = inverse_miss_prob(k);
  r.n1 = n1_bound(k, ell);
  const N2Bound n2 = n2_bound(k, ell);
  r.n2_kind = n2.kind;
  r.n2 = n2.value;
  if (!eps) {
    r.combined_n = std::max(r.n1, r.n2);
    return r;
  }
  require_eps(*eps);
  r.eps = eps;
  r.theta = chernoff_theta(*eps, k);
  r.ell_min = ell_min(*eps, k);
  r.n_threshold = n_threshold(*eps, k, ell);
  r.combined_n = std::max(r.n2, *r.n_threshold);
  if (k == 3) r.combined_n = std::max(r.combined_n, BigInt(6));
  return r;
}

Rational averaging_bound(int n) {
  if (n < 3) throw DomainError("averaging bound needs n >= 3");
  return Rational(2 * (n - 1) * (n - 1), 9 * (n - 2)) + 3;
}

ExpectedXUpper expected_X_upper(const CompleteGraphColoring& coloring) {
  if (coloring.t() != 3) throw DomainError("expected_X_upper is defined for 3-colorings only");
  const int n = coloring.n();
  if (n < 3) throw DomainError("need n >= 3");
  const auto degrees = color_degrees(coloring);
  BigInt products = 0;
  for (Vertex v = 1; v <= n; ++v) products += BigInt(degrees(v, 1)) * degrees(v, 2) * degrees(v, 3);
  BigInt stars = 0;
  std::vector<Vertex> members{1, 2, 3};
  do {
    stars += rainbow_star_count(VertexSet(members), coloring);
  } while (next_subset(members, n));
  const BigInt triples = subset_count(n, 3);
  return {3 + Rational(products, triples), Rational(stars, triples)};
}

}  // namespace rainbow
