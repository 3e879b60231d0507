#pragma once

#include <cstdint>

#include "qwalk/walk.hpp"

namespace qwalk {

/// G_t = e^{-i phi t x} 1, acting diagonally in position.
struct GaugePhase {
  double phi = 0.0;
  long t = 0;
};

/// Electric walk W^E = e^{i phi x} C S: shift, then coin, then the site phase.
WalkState electric_step(const WalkState& state, double phi, const Unitary2& coin);

/// psi(x) -> e^{-i phi t x} psi(x).
WalkState apply_gauge(const WalkState& state, GaugePhase g);

/// Translation-invariant gauge image W(t) = C e^{-i phi (t-1) sigma_z} S.
WalkState gauged_step(const WalkState& state, long t, double phi, const Unitary2& coin);

/// max over `trials` random unit states supported on [-support, support] of
/// || W(t)...W(1) psi - G_t (W^E)^t G_0 psi ||.
double verify_gauge_equivalence(double phi, const Unitary2& coin, long t, int trials,
                                std::uint64_t seed = 1, long support = 5);

}  // namespace qwalk
