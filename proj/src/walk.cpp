#include "qwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

WalkParams::WalkParams(double field, std::optional<RationalField> rational, cplx a, cplx b,
                       TimeRule rule)
    : field_(field), rational_(rational), a_(a), b_(b), coin_(make_coin(a, b)), rule_(rule) {
  if (!std::isfinite(field)) throw std::invalid_argument("field must be finite");
}

WalkParams WalkParams::with_field(double field, cplx a, cplx b, TimeRule rule) {
  return WalkParams(field, std::nullopt, a, b, rule);
}

WalkParams WalkParams::rational(long n, long m, cplx a, cplx b, TimeRule rule) {
  if (m <= 0) throw std::invalid_argument("rational field needs a positive denominator");
  return WalkParams(2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(m),
                    RationalField{n, m}, a, b, rule);
}

WalkParams WalkParams::with_rule(TimeRule rule) const {
  WalkParams p = *this;
  p.rule_ = rule;
  return p;
}

double WalkParams::angle(long t) const {
  if (rational_) {
    const long m = rational_->den;
    long r = ((t % m) * (rational_->num % m)) % m;
    if (r < 0) r += m;
    return 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
  }
  return static_cast<double>(t) * field_;
}

Unitary2 WalkParams::prefactor(long t, double field_offset) const {
  if (rule_ == TimeRule::rx_field) {
    return rotation_x(angle(t) + static_cast<double>(t) * field_offset);
  }
  return phase_z(angle(t - 1) + static_cast<double>(t - 1) * field_offset);
}

Unitary2 WalkParams::local_unitary(long t, double field_offset) const {
  if (rule_ == TimeRule::rx_field) return prefactor(t, field_offset) * coin_;
  return coin_ * prefactor(t, field_offset);
}

WalkState::WalkState(long x_min, std::vector<Spinor> amplitudes)
    : x_min_(x_min), amp_(std::move(amplitudes)) {}

WalkState WalkState::localized(long x, Spinor spin) { return WalkState(x, {spin}); }

Spinor WalkState::at(long x) const {
  if (x < x_min_ || x > x_max()) return {};
  return amp_[static_cast<std::size_t>(x - x_min_)];
}

cplx WalkState::at(long x, SpinComponent s) const {
  const Spinor v = at(x);
  return s == SpinComponent::up ? v.up : v.down;
}

double WalkState::norm_squared() const {
  return amp_.size() >= kernels::kOmpSiteThreshold ? kernels::omp::norm_squared(amp_)
                                                   : kernels::serial::norm_squared(amp_);
}

double WalkState::norm() const { return std::sqrt(norm_squared()); }

cplx inner_product(const WalkState& a, const WalkState& b) {
  const long lo = std::max(a.x_min(), b.x_min());
  const long hi = std::min(a.x_max(), b.x_max());
  cplx s{};
  for (long x = lo; x <= hi; ++x) {
    const Spinor u = a.at(x);
    const Spinor v = b.at(x);
    s += std::conj(u.up) * v.up + std::conj(u.down) * v.down;
  }
  return s;
}

double distance(const WalkState& a, const WalkState& b, cplx phase) {
  if (a.empty() && b.empty()) return 0.0;
  long lo = a.empty() ? b.x_min() : a.x_min();
  long hi = a.empty() ? b.x_max() : a.x_max();
  if (!b.empty()) {
    lo = std::min(lo, b.x_min());
    hi = std::max(hi, b.x_max());
  }
  double s = 0.0;
  for (long x = lo; x <= hi; ++x) {
    const Spinor u = a.at(x);
    const Spinor v = b.at(x);
    s += std::norm(u.up - phase * v.up) + std::norm(u.down - phase * v.down);
  }
  return std::sqrt(s);
}

WalkState step(const WalkState& state, long t, const WalkParams& params) {
  const Execution exec = state.size() >= kernels::kOmpSiteThreshold ? Execution::parallel
                                                                      : Execution::serial;
  return step(state, t, params, exec);
}

WalkState step(const WalkState& state, long t, const WalkParams& params, Execution exec,
               double field_offset) {
  const Mat2 u = params.local_unitary(t, field_offset).matrix();
  std::vector<Spinor> out(state.size() + 2);
  const auto in = state.amplitudes();
  const bool par = exec == Execution::parallel;
  if (params.time_rule() == TimeRule::rx_field) {
    par ? kernels::omp::coin_then_shift(in, out, u) : kernels::serial::coin_then_shift(in, out, u);
  } else {
    par ? kernels::omp::shift_then_coin(in, out, u) : kernels::serial::shift_then_coin(in, out, u);
  }
  return WalkState(state.x_min() - 1, std::move(out));
}

WalkState evolve(const WalkState& state, long t_from, long t_to, const WalkParams& params) {
  if (t_to < t_from - 1) throw std::invalid_argument("evolve: t_to < t_from - 1");
  WalkState s = state;
  for (long t = t_from; t <= t_to; ++t) s = step(s, t, params);
  return s;
}

double PositionDistribution::operator()(long x) const {
  if (x < x_min || x >= x_min + static_cast<long>(prob.size())) return 0.0;
  return prob[static_cast<std::size_t>(x - x_min)];
}

double PositionDistribution::total() const {
  double s = 0.0;
  for (double p : prob) s += p;
  return s;
}

long PositionDistribution::support_radius(double threshold) const {
  long r = -1;
  for (std::size_t j = 0; j < prob.size(); ++j) {
    if (prob[j] >= threshold) r = std::max(r, std::abs(x_min + static_cast<long>(j)));
  }
  return r;
}

PositionDistribution position_distribution(const WalkState& state) {
  PositionDistribution d{state.x_min(), {}};
  d.prob.reserve(state.size());
  for (const auto& v : state.amplitudes()) d.prob.push_back(v.norm_squared());
  return d;
}

double return_probability(const WalkState& state) { return state.at(0).norm_squared(); }

double fidelity(const WalkState& initial, const WalkState& state) {
  return std::norm(inner_product(initial, state));
}

std::array<double, 3> bloch_vector(const WalkState& state, long x) {
  const Spinor v = state.at(x);
  const cplx c = std::conj(v.up) * v.down;
  return {2.0 * c.real(), 2.0 * c.imag(), std::norm(v.up) - std::norm(v.down)};
}

}  // namespace qwalk
