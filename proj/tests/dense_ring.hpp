#pragma once
// Dense position-space oracle on a ring of N sites, basis index 2 * x + s with
// s = 0 (up) and s = 1 (down). Built from S and the local spin operators
// separately, without the lattice kernels.

#include <Eigen/Dense>

#include "qwalk/walk.hpp"

namespace ring {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix shift(int n) {
  Matrix s = Matrix::Zero(2 * n, 2 * n);
  for (int x = 0; x < n; ++x) {
    s(2 * ((x + 1) % n), 2 * x) = 1.0;
    s(2 * ((x - 1 + n) % n) + 1, 2 * x + 1) = 1.0;
  }
  return s;
}

inline Matrix local(int n, const qwalk::Mat2& u) {
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  for (int x = 0; x < n; ++x) {
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) m(2 * x + r, 2 * x + c) = u(r, c);
    }
  }
  return m;
}

/// Site x in [-n/2, n/2) is stored at (x mod n).
inline int site(int n, long x) { return static_cast<int>(((x % n) + n) % n); }

/// W(t) for either time rule.
inline Matrix step_matrix(int n, const qwalk::WalkParams& p, long t) {
  const qwalk::Mat2 pre = p.prefactor(t).matrix();
  const qwalk::Mat2 coin = p.coin().matrix();
  if (p.time_rule() == qwalk::TimeRule::rx_field) return shift(n) * local(n, pre * coin);
  return local(n, coin * pre) * shift(n);
}

inline Vector embed(int n, const qwalk::WalkState& s) {
  Vector v = Vector::Zero(2 * n);
  for (long x = s.x_min(); x <= s.x_max(); ++x) {
    const auto a = s.at(x);
    v(2 * site(n, x)) += a.up;
    v(2 * site(n, x) + 1) += a.down;
  }
  return v;
}

}  // namespace ring
