#pragma once

#include <stdexcept>
#include <utility>

#include "qwalk/unitary2.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Momentum convention: psi_hat(k) = sum_x e^{ikx} psi(x), so the shift acts on
// the block at quasi-momentum k as diag(e^{ik}, e^{-ik}).

struct MomentumBlock {
  double k = 0.0;
  Unitary2 block;
};

/// (B M B^dagger)_{11} and (B M B^dagger)_{22}.
struct TildePair {
  cplx alpha;
  cplx delta;
};

/// Raised when the trace formula's conditions on R are not met.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// S(k) = diag(e^{ik}, e^{-ik}).
Unitary2 shift_momentum(double k);

/// Momentum block of the single step W(t).
Unitary2 step_block(double k, const WalkParams& params, long t, double field_offset = 0.0);

/// W(steps)(k) ... W(1)(k), composed in the same order as the real-space evolution.
Unitary2 regrouped_block(double k, const WalkParams& params, long steps);

MomentumBlock momentum_block(double k, const WalkParams& params, long steps);

/// (1/sqrt 2) [[1, 1], [1, -1]], the basis diagonalizing R_x.
Mat2 hadamard_basis();

/// Unitary B with B R B^dagger diagonal. Identity for scalar R.
Mat2 eigenbasis(const Mat2& r);

TildePair tilde_pair(const Mat2& m, const Mat2& basis = hadamard_basis());

/// Closed form of tilde_pair(C S(k)) in the R_x basis:
/// alpha = |a| cos(k_a + k) + i |b| sin(k_b - k), delta = conj(alpha).
TildePair tilde_pair_polar(cplx a, cplx b, double k);

/// tr(M R^0 M R^1 ... M R^{m-1}) via the closed form in R's eigenbasis.
///
/// Requires det R = 1, R^m = 1 and R^j != 1 for 0 < j < m (tolerance 1e-10);
/// throws PreconditionError otherwise. M is an arbitrary 2x2 matrix.
cplx trace_formula(const Mat2& m, const Mat2& r, long period);

/// M and R such that tr W^{[m,1]}(k) = trace_formula(M, R, m) for a walk with
/// rational field: M = C S(k) for rx_field, S(k) C for gauged_sz; R is the
/// inverse single-step rotation.
std::pair<Mat2, Mat2> trace_formula_inputs(double k, const WalkParams& params);

/// The walk's (alpha~, delta~) at quasi-momentum k.
TildePair walk_tilde_pair(double k, const WalkParams& params);

/// sup_k |alpha~(k)| over a 4096-point grid plus local refinement.
double sup_alpha_tilde(const WalkParams& params);

struct Dispersion {
  double omega_plus = 0.0;
  double omega_minus = 0.0;
  double cos_omega = 0.0;
};

/// Eigenphases of W^{[m,1]}(k) for a rational field with denominator m:
///   cos w = |a~|^m cos(m theta)                                 (m odd)
///   cos w = -|a~|^m cos(m theta) + (-1)^{m/2+1} (1 - |a~|^m)      (m even)
/// with a~ = |a~| e^{i theta}. Overshoot beyond [-1, 1] up to 1e-9 is clamped;
/// larger overshoot throws std::logic_error.
Dispersion dispersion(double k, const WalkParams& params, long m);

}  // namespace qwalk
