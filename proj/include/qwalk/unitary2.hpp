#pragma once

#include <array>
#include <complex>

namespace qwalk {

using cplx = std::complex<double>;

/// Two-component spinor; `up` carries s=+1, `down` carries s=-1.
struct Spinor {
  cplx up{};
  cplx down{};

  double norm_squared() const { return std::norm(up) + std::norm(down); }
};

/// General complex 2x2 matrix, row-major.
struct Mat2 {
  std::array<cplx, 4> e{};

  constexpr Mat2() = default;
  constexpr Mat2(cplx a11, cplx a12, cplx a21, cplx a22) : e{a11, a12, a21, a22} {}

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 diagonal(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }

  cplx operator()(int row, int col) const { return e[2 * row + col]; }
  cplx& operator()(int row, int col) { return e[2 * row + col]; }

  cplx trace() const { return e[0] + e[3]; }
  cplx det() const { return e[0] * e[3] - e[1] * e[2]; }
  Mat2 adjoint() const {
    return {std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])};
  }

  Spinor apply(const Spinor& v) const {
    return {e[0] * v.up + e[1] * v.down, e[2] * v.up + e[3] * v.down};
  }

  Mat2& operator+=(const Mat2& o);
  Mat2& operator-=(const Mat2& o);
  Mat2& operator*=(cplx s);
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator+(Mat2 a, const Mat2& b);
Mat2 operator-(Mat2 a, const Mat2& b);
Mat2 operator*(cplx s, Mat2 a);

double frobenius_norm(const Mat2& m);

/// Largest singular value (spectral norm), closed form for 2x2.
double operator_norm(const Mat2& m);

/// Entrywise max |a_ij - b_ij|.
double max_abs_diff(const Mat2& a, const Mat2& b);

Mat2 power(const Mat2& m, unsigned n);

/// A 2x2 matrix known to be unitary.
///
/// Construction through `checked` validates U U^dagger = 1 and |det U| = 1;
/// products of unitaries stay unitary and skip the check.
class Unitary2 {
public:
  static constexpr double kTolerance = 1e-12;

  Unitary2() : m_(Mat2::identity()) {}

  /// Throws std::invalid_argument if `m` is not unitary within `tol`.
  static Unitary2 checked(const Mat2& m, double tol = kTolerance);

  const Mat2& matrix() const { return m_; }
  operator const Mat2&() const { return m_; }
  cplx operator()(int row, int col) const { return m_(row, col); }

  Unitary2 adjoint() const { return Unitary2(m_.adjoint()); }
  Spinor apply(const Spinor& v) const { return m_.apply(v); }

  friend Unitary2 operator*(const Unitary2& a, const Unitary2& b) {
    return Unitary2(a.m_ * b.m_);
  }

private:
  explicit Unitary2(const Mat2& m) : m_(m) {}
  friend Unitary2 unchecked_unitary(const Mat2& m);

  Mat2 m_;
};

/// Wraps a matrix that is unitary by construction (closed-form rotations).
Unitary2 unchecked_unitary(const Mat2& m);

bool is_unitary(const Mat2& m, double tol = Unitary2::kTolerance);

/// exp(i angle sigma_x) = [[cos, i sin], [i sin, cos]].
///
/// Full-angle convention: R_x(2 pi n / m)^m is exactly the identity.
Unitary2 rotation_x(double angle);

/// exp(i angle sigma_y) = [[cos, sin], [-sin, cos]]; coin with a=cos, b=sin.
Unitary2 rotation_y(double angle);

/// exp(-i angle sigma_z) = diag(e^{-i angle}, e^{i angle}).
Unitary2 phase_z(double angle);

/// [[a, b], [-b*, a*]]; requires |a|^2 + |b|^2 = 1 within `tol`.
Unitary2 make_coin(cplx a, cplx b, double tol = 1e-10);

/// Pauli matrices.
Mat2 sigma_x();
Mat2 sigma_y();
Mat2 sigma_z();

}  // namespace qwalk
