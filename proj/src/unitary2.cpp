#include "qwalk/unitary2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

Mat2& Mat2::operator+=(const Mat2& o) {
  for (int i = 0; i < 4; ++i) e[i] += o.e[i];
  return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
  for (int i = 0; i < 4; ++i) e[i] -= o.e[i];
  return *this;
}

Mat2& Mat2::operator*=(cplx s) {
  for (auto& x : e) x *= s;
  return *this;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
          a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]};
}

Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
Mat2 operator*(cplx s, Mat2 a) { return a *= s; }

double frobenius_norm(const Mat2& m) {
  double s = 0.0;
  for (const auto& x : m.e) s += std::norm(x);
  return std::sqrt(s);
}

double operator_norm(const Mat2& m) {
  // sigma_max^2 = (F^2 + sqrt(F^4 - 4|det|^2)) / 2
  double f2 = 0.0;
  for (const auto& x : m.e) f2 += std::norm(x);
  const double d = std::abs(m.det());
  const double disc = std::max(0.0, f2 * f2 - 4.0 * d * d);
  return std::sqrt(0.5 * (f2 + std::sqrt(disc)));
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(a.e[i] - b.e[i]));
  return r;
}

Mat2 power(const Mat2& m, unsigned n) {
  Mat2 result = Mat2::identity();
  Mat2 base = m;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

bool is_unitary(const Mat2& m, double tol) {
  const Mat2 p = m * m.adjoint();
  return max_abs_diff(p, Mat2::identity()) <= tol && std::abs(std::abs(m.det()) - 1.0) <= tol;
}

Unitary2 Unitary2::checked(const Mat2& m, double tol) {
  if (!is_unitary(m, tol)) throw std::invalid_argument("matrix is not unitary");
  return Unitary2(m);
}

Unitary2 unchecked_unitary(const Mat2& m) { return Unitary2(m); }

Unitary2 rotation_x(double angle) {
  const double c = std::cos(angle);
  const cplx is{0.0, std::sin(angle)};
  return unchecked_unitary({c, is, is, c});
}

Unitary2 rotation_y(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return unchecked_unitary({c, s, -s, c});
}

Unitary2 phase_z(double angle) {
  return unchecked_unitary(Mat2::diagonal(std::polar(1.0, -angle), std::polar(1.0, angle)));
}

Unitary2 make_coin(cplx a, cplx b, double tol) {
  const double n = std::norm(a) + std::norm(b);
  if (!(std::abs(n - 1.0) <= tol)) {
    throw std::invalid_argument("coin entries not normalized: |a|^2+|b|^2 = " + std::to_string(n));
  }
  return unchecked_unitary({a, b, -std::conj(b), std::conj(a)});
}

Mat2 sigma_x() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 sigma_y() { return {0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}; }
Mat2 sigma_z() { return Mat2::diagonal(1.0, -1.0); }

}  // namespace qwalk
