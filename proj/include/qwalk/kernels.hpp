#pragma once

// Data-parallel inner loops of the walk. Every kernel has a serial reference
// implementation and an OpenMP implementation with identical results; the
// serial one is the ground truth for tests and the baseline for benchmarks.

#include <cmath>
#include <cstddef>
#include <span>

#include "qwalk/unitary2.hpp"

namespace qwalk {

enum class Execution { serial, parallel };

namespace kernels {

/// Lattice size below which `parallel` falls back to the serial kernel.
inline constexpr std::size_t kOmpSiteThreshold = 4096;

/// Components smaller than this are written as zero. Exponentially decaying
/// tails would otherwise run into subnormal arithmetic, which is ~50x slower;
/// the discarded probability per site is below 1e-300.
inline constexpr double kUnderflowCutoff = 1e-150;

inline double flush_tiny(double v) { return std::abs(v) < kUnderflowCutoff ? 0.0 : v; }
inline cplx flush_tiny(cplx z) { return {flush_tiny(z.real()), flush_tiny(z.imag())}; }
inline Spinor flush_tiny(Spinor s) { return {flush_tiny(s.up), flush_tiny(s.down)}; }

// Output windows are one site wider on each side: out.size() == in.size() + 2,
// and out[j] sits at x = x_min(in) - 1 + j. Spin up moves right, spin down left.

namespace serial {

/// out = S U in (local unitary first, then shift).
void coin_then_shift(std::span<const Spinor> in, std::span<Spinor> out, const Mat2& u);

/// out = U S in (shift first, then local unitary).
void shift_then_coin(std::span<const Spinor> in, std::span<Spinor> out, const Mat2& u);

/// out = e^{i phi x} U S in with x = x0 + j for out[j].
void shift_coin_phase(std::span<const Spinor> in, std::span<Spinor> out, const Mat2& u,
                      double phi, long x0);

/// In place: amp[j] *= e^{i phase_per_site * (x0 + j)}.
void site_phase(std::span<Spinor> amp, double phase_per_site, long x0);

double norm_squared(std::span<const Spinor> amp);

}  // namespace serial

namespace omp {

void coin_then_shift(std::span<const Spinor> in, std::span<Spinor> out, const Mat2& u);
void shift_then_coin(std::span<const Spinor> in, std::span<Spinor> out, const Mat2& u);
void shift_coin_phase(std::span<const Spinor> in, std::span<Spinor> out, const Mat2& u,
                      double phi, long x0);
void site_phase(std::span<Spinor> amp, double phase_per_site, long x0);
double norm_squared(std::span<const Spinor> amp);

}  // namespace omp

/// Evaluates f(points[i]) into out[i].
template <class F>
void evaluate_grid(std::span<const double> points, std::span<double> out, F&& f,
                   Execution exec) {
  const long n = static_cast<long>(points.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) out[i] = f(points[i]);
  } else {
    for (long i = 0; i < n; ++i) out[i] = f(points[i]);
  }
}

}  // namespace kernels
}  // namespace qwalk
