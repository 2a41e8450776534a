#include <doctest.h>

#include <cmath>

#include "rainbow/errors.hpp"
#include "rainbow/montecarlo.hpp"

using namespace rainbow;

namespace {

TrialConfig config(int n, int k, int ell, int t, std::uint64_t samples, std::uint64_t seed = 1) {
  TrialConfig c;
  c.n = n;
  c.k = k;
  c.ell = ell;
  c.t = t;
  c.samples = samples;
  c.seed = seed;
  return c;
}

// Wilson interval by its textbook closed form.
std::pair<double, double> wilson_reference(double x, double n, double z) {
  const double p = x / n;
  const double denom = 1 + z * z / n;
  const double centre = (p + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
  return {centre - half, centre + half};
}

}  // namespace

TEST_CASE("wilson_interval") {
  for (auto [x, n] : {std::pair{0ULL, 10ULL}, {10ULL, 10ULL}, {3ULL, 10ULL}, {36602ULL, 100000ULL}, {1ULL, 1ULL}}) {
    const auto w = wilson_interval(x, n);
    const auto [lo, hi] = wilson_reference(static_cast<double>(x), static_cast<double>(n), 1.959963984540054);
    CHECK(w.lo == doctest::Approx(std::max(lo, 0.0)).epsilon(1e-12));
    CHECK(w.hi == doctest::Approx(std::min(hi, 1.0)).epsilon(1e-12));
    const double est = static_cast<double>(x) / static_cast<double>(n);
    CHECK(w.lo <= est);
    CHECK(est <= w.hi);
  }
  CHECK(wilson_interval(0, 10).lo == 0.0);
  CHECK(wilson_interval(10, 10).hi == 1.0);
}

TEST_CASE("estimate_BS") {
  SUBCASE("n = 7 near (7/9)^4") {
    const auto s = estimate_BS(config(7, 3, 1, 3, 20000, 3));
    REQUIRE(s.exact_tail);
    CHECK(*s.exact_tail == doctest::Approx(2401.0 / 6561.0));
    CHECK(std::abs(s.point_estimate - 2401.0 / 6561.0) < 0.02);
    CHECK(s.wilson.lo <= s.point_estimate);
    CHECK(s.point_estimate <= s.wilson.hi);
  }
  SUBCASE("more stars than external vertices is impossible") {
    const auto s = estimate_BS(config(7, 3, 5, 3, 500));
    CHECK(s.successes == s.samples);
  }
  SUBCASE("n = k has no stars") {
    CHECK(estimate_BS(config(3, 3, 1, 3, 200)).successes == 200);
    CHECK(estimate_BS(config(4, 4, 1, 4, 200)).successes == 200);
  }
  SUBCASE("t must equal k") { CHECK_THROWS_AS(estimate_BS(config(7, 3, 1, 4, 10)), DomainError); }
  SUBCASE("config errors") {
    CHECK_THROWS_AS(estimate_BS(config(7, 3, 1, 3, 0)), DomainError);
    CHECK_THROWS_AS(estimate_BS(config(2, 3, 1, 3, 10)), DomainError);
  }
}

TEST_CASE("estimate_AS_all") {
  SUBCASE("t = 1 never succeeds") {
    auto c = config(6, 3, 1, 1, 100);
    CHECK(estimate_AS_all(c).successes == 0);
    c.mode = OracleMode::full();
    CHECK(estimate_AS_all(c).successes == 0);
  }
  SUBCASE("n = k cannot reach floor(k/2) + 1 trees") {
    for (int k : {3, 4, 5}) {
      auto c = config(k, k, k / 2 + 1, k, 200);
      CHECK(estimate_AS_all(c).successes == 0);
      c.mode = OracleMode::paper();
      CHECK(estimate_AS_all(c).successes == 0);
    }
  }
  SUBCASE("K_6 witnesses re-verify in full mode") {
    const auto s = estimate_AS_all(config(6, 3, 1, 3, 2000, 7));
    CHECK(s.successes > 0);
    REQUIRE(s.witness);
    CHECK(verify_coloring(*s.witness, 3, 1, {OracleMode::full()}).pass);
    CHECK(star_certificate_pass(*s.witness, 3, 1));
    // The witness is the lowest-index success.
    for (std::uint64_t i = 0; i < *s.witness_sample; ++i)
      CHECK_FALSE(star_certificate_pass(random_coloring(6, 3, {7, i}), 3, 1));
  }
  SUBCASE("star certificate never exceeds the exact oracle") {
    auto c = config(7, 3, 2, 3, 300, 11);
    const auto stars = estimate_AS_all(c);
    c.mode = OracleMode::full();
    const auto full = estimate_AS_all(c);
    CHECK(stars.successes <= full.successes);
  }
}

TEST_CASE("star_certificate_pass agrees with verify_coloring in certificate mode") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 5 + static_cast<int>(seed % 6);
    const int t = 3 + static_cast<int>(seed % 2);
    const auto c = random_coloring(n, t, {67, seed});
    for (int k : {3, 4})
      for (int ell : {1, 2, 3}) {
        VerifyOptions certificate;  // mode = nullopt
        CHECK(star_certificate_pass(c, k, ell) == verify_coloring(c, k, ell, certificate).pass);
      }
  }
}

TEST_CASE("reproducible across worker counts") {
  auto bs = config(9, 3, 2, 3, 3000, 5);
  auto as = config(6, 3, 1, 3, 1500, 5);
  const auto bs1 = estimate_BS(bs);
  const auto as1 = estimate_AS_all(as);
  for (int w : {2, 3, 8}) {
    bs.workers = w;
    as.workers = w;
    const auto bsw = estimate_BS(bs);
    const auto asw = estimate_AS_all(as);
    CHECK(bsw.successes == bs1.successes);
    CHECK(asw.successes == as1.successes);
    CHECK(asw.witness_sample == as1.witness_sample);
  }
  CHECK(estimate_BS(bs).successes == estimate_BS(bs).successes);
}

TEST_CASE("calibration: exact tail inside the Wilson interval") {
  int covered = 0;
  const int reps = 20;
  for (int rep = 0; rep < reps; ++rep) {
    const auto s = estimate_BS(config(7, 3, 1, 3, 100000, 1000 + static_cast<std::uint64_t>(rep)));
    covered += s.wilson.lo <= *s.exact_tail && *s.exact_tail <= s.wilson.hi;
  }
  CHECK(covered >= 18);
}

TEST_CASE("chernoff_tail_bound") {
  SUBCASE("precondition names both sides") {
    try {
      chernoff_tail_bound(10, 3, 5);  // (n-k)p = 14/9 < 4
      FAIL("expected DomainError");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("ell-1") != std::string::npos);
    }
  }
  SUBCASE("ell = 1 is exp(-p(n-k)/2)") {
    for (int n : {10, 50, 100})
      CHECK(static_cast<double>(chernoff_tail_bound(n, 3, 1)) == doctest::Approx(std::exp(-(2.0 / 9) * (n - 3) / 2)));
  }
  SUBCASE("sandwich on the admissible grid") {
    const Rational p = rainbow_star_prob(3);
    for (int n = 20; n <= 200; n += 20) {
      const Rational mu = p * (n - 3);
      for (int ell = 1; Rational(ell - 1) < mu; ++ell) {
        const Rational exact = binomial_tail(n - 3, p, ell - 1);
        CHECK(to_real(exact) <= chernoff_tail_bound(n, 3, ell));
        if (n >= 3 + ell) CHECK(binomial_upper_vs_union(n, 3, ell).exact_within_right);
      }
    }
  }
}

TEST_CASE("empirical_threshold") {
  CHECK_FALSE(empirical_threshold(3, 1, 3, 50, 0.5, {}).n);
  const auto r = empirical_threshold(3, 1, 3, 200, 0.9, {6, 14, 30, 50, 70, 90, 110}, 9);
  CHECK(r.table.size() == 7);
  REQUIRE(r.n);
  CHECK(*r.n <= 572);
  for (const auto& row : r.table) {
    CHECK(row.summary.samples == 200);
    if (row.n < *r.n) CHECK(row.summary.wilson.lo < 0.9);
  }
  // Each row is estimate_AS_all at seed + n.
  auto c = config(14, 3, 1, 3, 200, 9 + 14);
  CHECK(estimate_AS_all(c).successes == r.table[1].summary.successes);
}
