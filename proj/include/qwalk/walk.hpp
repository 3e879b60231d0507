#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qwalk/kernels.hpp"
#include "qwalk/unitary2.hpp"

namespace qwalk {

/// Internal spin label s; +1 moves right under the shift, -1 moves left.
enum class SpinComponent : int { up = +1, down = -1 };

/// How the time dependence enters the step operator W(t).
enum class TimeRule {
  /// W(t) = S R_x(t Phi) C
  rx_field,
  /// W(t) = C exp(-i Phi (t-1) sigma_z) S, the gauge image of the electric walk
  gauged_sz,
};

/// Phi / (2 pi) = num / den, kept as integers so that rational periodicity is exact.
struct RationalField {
  long num = 0;
  long den = 1;
};

/// Field, coin and time rule defining W(t).
class WalkParams {
public:
  /// Field given in radians.
  static WalkParams with_field(double field, cplx a, cplx b, TimeRule rule = TimeRule::rx_field);
  /// Phi = 2 pi n / m with exact reduction of t*n mod m.
  static WalkParams rational(long n, long m, cplx a, cplx b, TimeRule rule = TimeRule::rx_field);

  double field() const { return field_; }
  const std::optional<RationalField>& rational_field() const { return rational_; }
  cplx coin_a() const { return a_; }
  cplx coin_b() const { return b_; }
  const Unitary2& coin() const { return coin_; }
  TimeRule time_rule() const { return rule_; }

  WalkParams with_rule(TimeRule rule) const;

  /// t * Phi; for rational fields 2 pi ((t n) mod m) / m.
  double angle(long t) const;

  /// Time-dependent spin operator of step t: R_x(t Phi) or exp(-i Phi (t-1) sigma_z).
  /// `field_offset` perturbs the field of this single step (noise).
  Unitary2 prefactor(long t, double field_offset = 0.0) const;

  /// The local spin unitary of step t: R_x(t Phi) C for rx_field,
  /// C exp(-i Phi (t-1) sigma_z) for gauged_sz.
  Unitary2 local_unitary(long t, double field_offset = 0.0) const;

private:
  WalkParams(double field, std::optional<RationalField> rational, cplx a, cplx b, TimeRule rule);

  double field_;
  std::optional<RationalField> rational_;
  cplx a_;
  cplx b_;
  Unitary2 coin_;
  TimeRule rule_;
};

/// Spinor field psi(x, s) on the inclusive window [x_min, x_max].
/// Amplitudes outside the window are zero.
class WalkState {
public:
  WalkState() = default;
  WalkState(long x_min, std::vector<Spinor> amplitudes);

  static WalkState localized(long x, Spinor spin = {1.0, 0.0});

  long x_min() const { return x_min_; }
  long x_max() const { return x_min_ + static_cast<long>(amp_.size()) - 1; }
  std::size_t size() const { return amp_.size(); }
  bool empty() const { return amp_.empty(); }

  /// Zero spinor outside the window.
  Spinor at(long x) const;
  cplx at(long x, SpinComponent s) const;

  std::span<const Spinor> amplitudes() const { return amp_; }
  std::span<Spinor> amplitudes() { return amp_; }

  double norm_squared() const;
  double norm() const;

private:
  long x_min_ = 0;
  std::vector<Spinor> amp_;
};

cplx inner_product(const WalkState& a, const WalkState& b);

/// || a - phase * b || over the union of both windows.
double distance(const WalkState& a, const WalkState& b, cplx phase = 1.0);

/// Applies W(t).
WalkState step(const WalkState& state, long t, const WalkParams& params);
WalkState step(const WalkState& state, long t, const WalkParams& params, Execution exec,
               double field_offset = 0.0);

/// W(t_to) ... W(t_from) applied to `state`; t_to == t_from - 1 is the empty product.
WalkState evolve(const WalkState& state, long t_from, long t_to, const WalkParams& params);

/// p(x) = sum_s |psi(x,s)|^2 on the state's window.
struct PositionDistribution {
  long x_min = 0;
  std::vector<double> prob;

  double operator()(long x) const;
  double total() const;
  /// Largest |x| with p(x) >= threshold; -1 if none.
  long support_radius(double threshold) const;
};

PositionDistribution position_distribution(const WalkState& state);

/// Probability at the origin, sum_s |psi(0,s)|^2.
double return_probability(const WalkState& state);

/// |<initial|state>|^2.
double fidelity(const WalkState& initial, const WalkState& state);

/// (<sigma_x>, <sigma_y>, <sigma_z>) of the unnormalized spinor psi(x, .); its
/// length equals |psi(x,.)|^2.
std::array<double, 3> bloch_vector(const WalkState& state, long x);

}  // namespace qwalk
