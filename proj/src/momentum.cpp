#include "qwalk/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qwalk/ksup.hpp"

namespace qwalk {

namespace {

constexpr double kPeriodTol = 1e-10;
constexpr double kClampTol = 1e-9;

cplx ipow(cplx z, long n) {
  cplx r = 1.0;
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

Unitary2 base_rotation(const WalkParams& params) {
  return params.time_rule() == TimeRule::rx_field ? rotation_x(params.angle(1))
                                                  : phase_z(params.angle(1));
}

}  // namespace

Unitary2 shift_momentum(double k) {
  return unchecked_unitary(Mat2::diagonal(std::polar(1.0, k), std::polar(1.0, -k)));
}

Unitary2 step_block(double k, const WalkParams& params, long t, double field_offset) {
  const Unitary2 u = params.local_unitary(t, field_offset);
  if (params.time_rule() == TimeRule::rx_field) return shift_momentum(k) * u;
  return u * shift_momentum(k);
}

Unitary2 regrouped_block(double k, const WalkParams& params, long steps) {
  Unitary2 p;
  for (long t = 1; t <= steps; ++t) p = step_block(k, params, t) * p;
  return p;
}

MomentumBlock momentum_block(double k, const WalkParams& params, long steps) {
  return {k, regrouped_block(k, params, steps)};
}

Mat2 hadamard_basis() {
  const double h = 1.0 / std::numbers::sqrt2;
  return {h, h, h, -h};
}

Mat2 eigenbasis(const Mat2& r) {
  // Eigenvalues of a 2x2 matrix from trace and determinant.
  const cplx tr = r.trace();
  const cplx disc = std::sqrt(tr * tr - 4.0 * r.det());
  const cplx l1 = 0.5 * (tr + disc);
  const cplx l2 = 0.5 * (tr - disc);
  auto eigvec = [&](cplx l) -> std::pair<cplx, cplx> {
    const cplx p = r(0, 0), q = r(0, 1), s = r(1, 0), u = r(1, 1);
    std::pair<cplx, cplx> v;
    if (std::abs(q) >= std::abs(s)) {
      v = {q, l - p};
    } else {
      v = {l - u, s};
    }
    const double n = std::sqrt(std::norm(v.first) + std::norm(v.second));
    return {v.first / n, v.second / n};
  };
  if (std::abs(r(0, 1)) < 1e-14 && std::abs(r(1, 0)) < 1e-14) return Mat2::identity();
  if (std::abs(l1 - l2) < 1e-14) return Mat2::identity();
  const auto v1 = eigvec(l1);
  const auto v2 = eigvec(l2);
  // Rows of B are the conjugated eigenvectors.
  return {std::conj(v1.first), std::conj(v1.second), std::conj(v2.first), std::conj(v2.second)};
}

TildePair tilde_pair(const Mat2& m, const Mat2& basis) {
  const Mat2 t = basis * m * basis.adjoint();
  return {t(0, 0), t(1, 1)};
}

TildePair tilde_pair_polar(cplx a, cplx b, double k) {
  const double ka = std::arg(a);
  const double kb = std::arg(b);
  const cplx alpha{std::abs(a) * std::cos(ka + k), std::abs(b) * std::sin(kb - k)};
  return {alpha, std::conj(alpha)};
}

cplx trace_formula(const Mat2& m, const Mat2& r, long period) {
  if (period < 1) throw PreconditionError("trace formula: period must be >= 1");
  if (std::abs(r.det() - 1.0) > kPeriodTol) throw PreconditionError("trace formula: det R != 1");
  Mat2 rp = Mat2::identity();
  for (long j = 1; j < period; ++j) {
    rp = rp * r;
    if (max_abs_diff(rp, Mat2::identity()) <= kPeriodTol) {
      throw PreconditionError("trace formula: R^j = 1 for some 0 < j < m");
    }
  }
  rp = rp * r;
  if (max_abs_diff(rp, Mat2::identity()) > kPeriodTol) {
    throw PreconditionError("trace formula: R^m != 1");
  }

  const TildePair tp = tilde_pair(m, eigenbasis(r));
  if (period % 2 == 1) return ipow(tp.alpha, period) + ipow(tp.delta, period);
  const long h = period / 2;
  const double sign = (h % 2 == 0) ? 1.0 : -1.0;
  return -(ipow(tp.alpha, period) + ipow(tp.delta, period)) +
         2.0 * sign * (ipow(tp.alpha * tp.delta, h) - ipow(m.det(), h));
}

std::pair<Mat2, Mat2> trace_formula_inputs(double k, const WalkParams& params) {
  const Mat2 s = shift_momentum(k).matrix();
  const Mat2& c = params.coin().matrix();
  const Mat2 m = params.time_rule() == TimeRule::rx_field ? c * s : s * c;
  return {m, base_rotation(params).adjoint().matrix()};
}

TildePair walk_tilde_pair(double k, const WalkParams& params) {
  const auto [m, r] = trace_formula_inputs(k, params);
  (void)r;
  return params.time_rule() == TimeRule::rx_field ? tilde_pair(m, hadamard_basis())
                                                  : tilde_pair(m, Mat2::identity());
}

double sup_alpha_tilde(const WalkParams& params) {
  return sup_over_k([&](double k) { return std::abs(walk_tilde_pair(k, params).alpha); },
                    Execution::serial, 4096)
      .value;
}

Dispersion dispersion(double k, const WalkParams& params, long m) {
  // Validates the rotation's period; the value itself is not needed.
  const auto [mm, r] = trace_formula_inputs(k, params);
  (void)trace_formula(mm, r, m);

  const cplx a = walk_tilde_pair(k, params).alpha;
  const double mag_m = std::pow(std::abs(a), static_cast<double>(m));
  // |a|^m cos(m theta) = Re(a^m); zero when |a| = 0.
  const double re_am = std::abs(a) == 0.0 ? 0.0 : ipow(a, m).real();
  double c;
  if (m % 2 == 1) {
    c = re_am;
  } else {
    const double sign = ((m / 2 + 1) % 2 == 0) ? 1.0 : -1.0;
    c = -re_am + sign * (1.0 - mag_m);
  }
  if (std::abs(c) > 1.0 + kClampTol) {
    throw std::logic_error("dispersion: |cos omega| exceeds 1 beyond tolerance");
  }
  c = std::clamp(c, -1.0, 1.0);
  const double w = std::acos(c);
  return {w, -w, c};
}

}  // namespace qwalk
