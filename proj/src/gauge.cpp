#include "qwalk/gauge.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qwalk {

WalkState electric_step(const WalkState& state, double phi, const Unitary2& coin) {
  std::vector<Spinor> out(state.size() + 2);
  const long x0 = state.x_min() - 1;
  if (out.size() >= kernels::kOmpSiteThreshold) {
    kernels::omp::shift_coin_phase(state.amplitudes(), out, coin.matrix(), phi, x0);
  } else {
    kernels::serial::shift_coin_phase(state.amplitudes(), out, coin.matrix(), phi, x0);
  }
  return WalkState(x0, std::move(out));
}

WalkState apply_gauge(const WalkState& state, GaugePhase g) {
  WalkState s = state;
  const double per_site = -g.phi * static_cast<double>(g.t);
  if (s.size() >= kernels::kOmpSiteThreshold) {
    kernels::omp::site_phase(s.amplitudes(), per_site, s.x_min());
  } else {
    kernels::serial::site_phase(s.amplitudes(), per_site, s.x_min());
  }
  return s;
}

WalkState gauged_step(const WalkState& state, long t, double phi, const Unitary2& coin) {
  if (t < 1) throw std::invalid_argument("gauged_step: t must be >= 1");
  const Mat2 u = (coin * phase_z(phi * static_cast<double>(t - 1))).matrix();
  std::vector<Spinor> out(state.size() + 2);
  if (out.size() >= kernels::kOmpSiteThreshold) {
    kernels::omp::shift_then_coin(state.amplitudes(), out, u);
  } else {
    kernels::serial::shift_then_coin(state.amplitudes(), out, u);
  }
  return WalkState(state.x_min() - 1, std::move(out));
}

double verify_gauge_equivalence(double phi, const Unitary2& coin, long t, int trials,
                                std::uint64_t seed, long support) {
  if (t < 1) throw std::invalid_argument("verify_gauge_equivalence: t must be >= 1");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Spinor> amp(static_cast<std::size_t>(2 * support + 1));
    for (auto& v : amp) v = {{normal(gen), normal(gen)}, {normal(gen), normal(gen)}};
    WalkState psi(-support, std::move(amp));
    const double n = psi.norm();
    for (auto& v : psi.amplitudes()) {
      v.up /= n;
      v.down /= n;
    }

    WalkState lhs = psi;
    for (long s = 1; s <= t; ++s) lhs = gauged_step(lhs, s, phi, coin);

    WalkState rhs = apply_gauge(psi, {phi, 0});
    for (long s = 1; s <= t; ++s) rhs = electric_step(rhs, phi, coin);
    rhs = apply_gauge(rhs, {phi, t});

    worst = std::max(worst, distance(lhs, rhs));
  }
  return worst;
}

}  // namespace qwalk
