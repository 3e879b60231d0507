#include <cmath>

#include "qwalk/kernels.hpp"

namespace qwalk::kernels::omp {

void coin_then_shift(std::span<const Spinor> in, std::span<Spinor> out, const Mat2& u) {
  const long n = static_cast<long>(in.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n + 2; ++j) {
    Spinor s{};
    if (j >= 2) {
      const Spinor& v = in[j - 2];
      s.up = u.e[0] * v.up + u.e[1] * v.down;
    }
    if (j < n) {
      const Spinor& v = in[j];
      s.down = u.e[2] * v.up + u.e[3] * v.down;
    }
    out[j] = flush_tiny(s);
  }
}

void shift_then_coin(std::span<const Spinor> in, std::span<Spinor> out, const Mat2& u) {
  const long n = static_cast<long>(in.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n + 2; ++j) {
    const cplx up = j >= 2 ? in[j - 2].up : cplx{};
    const cplx down = j < n ? in[j].down : cplx{};
    out[j] = flush_tiny(Spinor{u.e[0] * up + u.e[1] * down, u.e[2] * up + u.e[3] * down});
  }
}

void shift_coin_phase(std::span<const Spinor> in, std::span<Spinor> out, const Mat2& u,
                      double phi, long x0) {
  const long n = static_cast<long>(in.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n + 2; ++j) {
    const cplx up = j >= 2 ? in[j - 2].up : cplx{};
    const cplx down = j < n ? in[j].down : cplx{};
    const cplx ph = std::polar(1.0, phi * static_cast<double>(x0 + j));
    out[j] = flush_tiny(Spinor{ph * (u.e[0] * up + u.e[1] * down), ph * (u.e[2] * up + u.e[3] * down)});
  }
}

void site_phase(std::span<Spinor> amp, double phase_per_site, long x0) {
  const long n = static_cast<long>(amp.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n; ++j) {
    const cplx ph = std::polar(1.0, phase_per_site * static_cast<double>(x0 + j));
    amp[j].up *= ph;
    amp[j].down *= ph;
  }
}

// Reduction order differs from the serial sum; results agree to rounding.
double norm_squared(std::span<const Spinor> amp) {
  const long n = static_cast<long>(amp.size());
  double s = 0.0;
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (long j = 0; j < n; ++j) s += amp[j].norm_squared();
  return s;
}

}  // namespace qwalk::kernels::omp
