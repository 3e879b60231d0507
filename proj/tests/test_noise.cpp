#include <doctest.h>

#include <omp.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/momentum.hpp"
#include "qwalk/noise.hpp"
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

TEST_CASE("fluctuation streams") {
  NoiseConfig cfg{1e-3, NoiseDistribution::symmetric, 42, 10};
  const auto a = draw_fluctuations(cfg, 3, 1000);
  const auto b = draw_fluctuations(cfg, 3, 1000);
  const auto c = draw_fluctuations(cfg, 4, 1000);
  CHECK(a == b);
  CHECK(a != c);
  double mean = 0.0;
  for (double x : a) {
    CHECK(x >= -1.0);
    CHECK(x < 1.0);
    mean += x / 1000.0;
  }
  CHECK(std::abs(mean) < 0.1);

  cfg.distribution = NoiseDistribution::unit;
  for (double x : draw_fluctuations(cfg, 0, 1000)) {
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(trajectory_seed(1, 0) != trajectory_seed(1, 1));
  CHECK(trajectory_seed(1, 0) != trajectory_seed(2, 0));
  CHECK(trajectory_seed(7, 5) == trajectory_seed(7, 5));
}

TEST_CASE("noise config validation") {
  CHECK_THROWS(NoiseConfig{-1e-3}.validate());
  CHECK_THROWS(NoiseConfig{0.0, NoiseDistribution::symmetric, 1, 0}.validate());
  CHECK_NOTHROW(NoiseConfig{}.validate());
}

TEST_CASE("zero noise is the clean walk") {
  const WalkParams p = WalkParams::rational(1, 13, kH, kH);
  const WalkState init = WalkState::localized(0);
  const WalkState clean = evolve(init, 1, 50, p);
  const WalkState noisy = noisy_evolve(init, 50, p, NoiseConfig{0.0});
  CHECK(distance(clean, noisy) == 0.0);
  const auto xs = draw_fluctuations(NoiseConfig{0.0}, 0, 50);
  CHECK(distance(evolve_with_fluctuations(init, p, xs, 0.0), clean) == 0.0);
}

TEST_CASE("noisy evolution matches its momentum blocks") {
  const WalkParams p = WalkParams::rational(1, 20, kH, kH);
  const NoiseConfig cfg{0.05, NoiseDistribution::symmetric, 9, 1};
  const auto xs = draw_fluctuations(cfg, 0, 30);
  const WalkState s = evolve_with_fluctuations(WalkState::localized(0), p, xs, cfg.epsilon);
  CHECK(distance(s, noisy_evolve(WalkState::localized(0), 30, p, cfg, 0)) == 0.0);
  for (double k : {0.2, 1.1, 4.0}) {
    cplx up{}, dn{};
    for (long x = s.x_min(); x <= s.x_max(); ++x) {
      up += std::polar(1.0, k * x) * s.at(x).up;
      dn += std::polar(1.0, k * x) * s.at(x).down;
    }
    const Mat2 b = noisy_regrouped_block(k, p, xs, cfg.epsilon);
    CHECK(std::abs(b(0, 0) - up) < 1e-12);
    CHECK(std::abs(b(1, 0) - dn) < 1e-12);
  }
}

TEST_CASE("noise bound values") {
  const NoiseBound a = noise_bound(100, 1e-4, kH);
  CHECK(a.time == 100);
  CHECK(a.leading == doctest::Approx(0.505));
  CHECK(noise_bound(100, 1e-3, kH).leading == doctest::Approx(5.05));
  const NoiseBound odd = noise_bound(7, 1e-3, 0.5);
  CHECK(odd.time == 14);
  CHECK(odd.leading == doctest::Approx(7 * 15 * 1e-3));
  CHECK(odd.remainder_scale == doctest::Approx(std::pow(0.5, 7)));
  CHECK(noise_bound(10, 0.0, kH).leading == 0.0);
  CHECK_THROWS(noise_bound(0, 0.1, 0.5));
  CHECK_THROWS(noise_bound(3, 0.1, 1.5));
}

TEST_CASE("worst-case bound holds for sampled realizations") {
  std::mt19937_64 g(17);
  for (long m : {99L, 100L}) {
    const WalkParams p = WalkParams::rational(1, m, kH, kH);
    const ExpectedRevival ex = expected_revival(m);
    const double alpha = sup_alpha_tilde(p);
    for (double eps : {1e-5, 1e-4}) {
      const NoiseBound nb = noise_bound(m, eps, alpha);
      REQUIRE(nb.time == ex.time);
      NoiseConfig cfg{eps, NoiseDistribution::symmetric, 5, 3};
      for (std::uint64_t traj = 0; traj < 3; ++traj) {
        const auto xs = draw_fluctuations(cfg, traj, nb.time);
        for (int i = 0; i < 20; ++i) {
          const WalkState psi = random_state(g, -3, 3);
          const WalkState out = evolve_with_fluctuations(psi, p, xs, eps);
          CHECK(distance(out, psi, static_cast<double>(ex.sign)) <= nb.total() + 1e-6);
        }
      }
    }
  }
}

TEST_CASE("return series") {
  const WalkParams p = WalkParams::rational(1, 20, kH, kH);
  const NoiseConfig cfg{1e-3, NoiseDistribution::symmetric, 11, 8};
  const WalkState init = WalkState::localized(0);
  omp_set_num_threads(4);
  const auto par = return_series(p, cfg, 60, init, Execution::parallel);
  const auto ser = return_series(p, cfg, 60, init, Execution::serial);
  REQUIRE(par.size() == 61);
  CHECK(par[0].mean == 1.0);
  for (std::size_t t = 0; t < par.size(); ++t) {
    CHECK(par[t].mean == ser[t].mean);
    CHECK(par[t].min == ser[t].min);
    CHECK(par[t].max == ser[t].max);
    CHECK(par[t].min <= par[t].mean + 1e-15);
    CHECK(par[t].mean <= par[t].max + 1e-15);
  }
  const WalkState s0 = noisy_evolve(init, 40, p, cfg, 0);
  CHECK(par[40].single == doctest::Approx(return_probability(s0)).epsilon(1e-14));
  // Odd times leave the origin empty.
  CHECK(par[13].max == 0.0);
}
