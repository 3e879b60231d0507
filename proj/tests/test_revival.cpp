#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/momentum.hpp"
#include "qwalk/revival.hpp"

using namespace qwalk;

namespace {

const double kH = 1.0 / std::numbers::sqrt2;

WalkState random_state(std::mt19937_64& g, long lo, long hi) {
  std::normal_distribution<double> d;
  std::vector<Spinor> a(static_cast<std::size_t>(hi - lo + 1));
  double n = 0.0;
  for (auto& s : a) {
    s = {cplx(d(g), d(g)), cplx(d(g), d(g))};
    n += s.norm_squared();
  }
  for (auto& s : a) {
    s.up /= std::sqrt(n);
    s.down /= std::sqrt(n);
  }
  return WalkState(lo, a);
}

}  // namespace

TEST_CASE("expected revival time and sign") {
  CHECK(expected_revival(1).time == 2);
  CHECK(expected_revival(5).time == 10);
  CHECK(expected_revival(5).sign == -1);
  CHECK(expected_revival(4).time == 4);
  CHECK(expected_revival(4).sign == -1);
  CHECK(expected_revival(6).time == 6);
  CHECK(expected_revival(6).sign == 1);
  CHECK(expected_revival(155).time == 310);
  CHECK_THROWS(expected_revival(0));
}

TEST_CASE("Hadamard deviation for odd m is 2^{-m/2+1}") {
  for (long m : {5L, 7L, 9L, 11L, 13L, 15L}) {
    const RevivalReport r = revival_report(WalkParams::rational(1, m, kH, kH));
    CHECK(r.revival_time == 2 * m);
    CHECK(r.detected_sign == -1);
    CHECK(r.measured_deviation == doctest::Approx(std::pow(2.0, -m / 2.0 + 1.0)).epsilon(1e-6));
  }
}

TEST_CASE("revival deviation never exceeds the dispersion bound") {
  for (TimeRule rule : {TimeRule::rx_field, TimeRule::gauged_sz}) {
    for (long m = 3; m <= 20; ++m) {
      for (const auto& c : {std::pair<cplx, cplx>{kH, kH}, {cplx(0.8, 0.0), cplx(0.0, 0.6)}}) {
        const RevivalReport r = revival_report(WalkParams::rational(1, m, c.first, c.second, rule));
        CHECK(r.measured_deviation <= r.dispersion_bound + 1e-6);
      }
    }
  }
}

TEST_CASE("state-level return is bounded by the operator deviation") {
  std::mt19937_64 g(21);
  for (long m : {7L, 8L, 12L}) {
    const WalkParams p = WalkParams::rational(1, m, kH, kH);
    const ExpectedRevival ex = expected_revival(m);
    const double dev = revival_deviation(p, ex.time, ex.sign);
    for (int i = 0; i < 10; ++i) {
      const WalkState psi = random_state(g, -4, 4);
      const WalkState out = evolve(psi, 1, ex.time, p);
      CHECK(distance(out, psi, static_cast<double>(ex.sign)) <= dev + 1e-9);
    }
  }
}

TEST_CASE("appendix coins") {
  const std::vector<long> ms{3, 4, 5, 7, 8, 9, 12};
  for (const auto& row : appendix_table(ms)) {
    CAPTURE(row.coin);
    CAPTURE(row.m);
    CHECK(row.matches);
  }
  SUBCASE("i sigma_y revives exactly for every m") {
    for (long m = 1; m <= 16; ++m) {
      const ExpectedRevival ex = expected_revival(m);
      CHECK(revival_deviation(WalkParams::rational(1, m, 0.0, 1.0), ex.time, ex.sign) < 1e-10);
    }
  }
  SUBCASE("identity coin, m = 2 mod 4") {
    // W(1) W(2) = S R_x(2 pi) S R_x(pi) = -S^2 for m = 2, at distance 2 from the identity.
    for (long m : {2L, 6L, 10L, 14L}) {
      const ExpectedRevival ex = expected_revival(m);
      CHECK(revival_deviation(WalkParams::rational(1, m, 1.0, 0.0), ex.time, ex.sign) ==
            doctest::Approx(2.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("no-revival coin") {
  const WalkParams p = WalkParams::rational(1, 10, cplx(0.0, kH), kH);
  const RevivalReport r = revival_report(p);
  CHECK(r.alpha_sup == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(revival_deviation(p, 20, -1) > 0.5);
  CHECK(r.detected_deviation > 0.5);
}

TEST_CASE("revival_report reduces the field") {
  const RevivalReport r = revival_report(WalkParams::rational(2, 20, kH, kH));
  CHECK(r.m == 10);
  CHECK(r.revival_time == 10);
  CHECK_THROWS(revival_report(WalkParams::with_field(0.5, kH, kH)));
}

TEST_CASE("irrational bound from a convergent") {
  // x = [0; 3, 1, 2, 100, 7]: n_3/d_3 = 3/11, c_4 = 100.
  const Rational x{BigInt(2110), BigInt(7739)};
  const ContinuedFraction cf = cf_expand(x, 10);
  REQUIRE(cf.depth() == 5);
  CHECK(cf.coefficients[3] == 100);
  const IrrationalBound b = irrational_revival_bound(cf, 3);
  CHECK(b.d == 11);
  CHECK(b.time == 22);
  CHECK(b.sign == -1);
  CHECK(b.bound == doctest::Approx(4.0 * std::numbers::pi / 100.0));
  const WalkParams p = WalkParams::with_field(2.0 * std::numbers::pi * to_double(x), kH, kH);
  const double dev = revival_deviation(p, b.time, b.sign);
  CHECK(dev <= b.bound * (1.0 + 1.0 / 22.0) + 2.0 * std::pow(kH, 11.0));
  CHECK_THROWS_AS(irrational_revival_bound(cf, 5), std::out_of_range);
  CHECK_THROWS_AS(irrational_revival_bound(cf, 0), std::out_of_range);
}

TEST_CASE("both time rules revive at the same times") {
  for (long m : {5L, 9L, 8L, 12L}) {
    const ExpectedRevival ex = expected_revival(m);
    const double rx = revival_deviation(WalkParams::rational(1, m, kH, kH), ex.time, ex.sign);
    const double gz = revival_deviation(
        WalkParams::rational(1, m, kH, kH, TimeRule::gauged_sz), ex.time, ex.sign);
    CHECK(rx < 1.0);
    CHECK(gz < 1.0);
  }
}
