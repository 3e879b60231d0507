#include "qwalk/continued_fraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace qwalk {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt abs_big(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

BigInt isqrt(const BigInt& d) { return boost::multiprecision::sqrt(d); }

// Appends c and the next convergent from the previous two.
void push_coefficient(ContinuedFraction& cf, const BigInt& c) {
  const std::size_t k = cf.convergents.size();
  const BigInt n1 = k >= 1 ? cf.convergents[k - 1].n : BigInt(0);
  const BigInt d1 = k >= 1 ? cf.convergents[k - 1].d : BigInt(1);
  const BigInt n2 = k >= 2 ? cf.convergents[k - 2].n : (k == 1 ? BigInt(0) : BigInt(1));
  const BigInt d2 = k >= 2 ? cf.convergents[k - 2].d : (k == 1 ? BigInt(1) : BigInt(0));
  cf.coefficients.push_back(c);
  cf.convergents.push_back({c * n1 + n2, c * d1 + d2});
}

// |p/q - n/d| < num/den  <=>  |p d - n q| * den < num * q * d   (q, d > 0)
bool rational_error_below(const Rational& x, const Convergent& c, const BigInt& num,
                          const BigInt& den) {
  return abs_big(x.num * c.d - c.n * x.den) * den < num * x.den * c.d;
}

// u + w sqrt(D) < r, with w >= 0.
bool surd_less(const BigInt& u, const BigInt& w, const BigInt& d, const BigInt& r) {
  const BigInt rhs = r - u;
  if (rhs <= 0) return false;
  return w * w * d < rhs * rhs;
}

// u + w sqrt(D) > r, with w >= 0.
bool surd_greater(const BigInt& u, const BigInt& w, const BigInt& d, const BigInt& r) {
  const BigInt rhs = r - u;
  if (rhs < 0) return true;
  return w * w * d > rhs * rhs;
}

Rational reduce_frac(const Rational& x) {
  if (x.den <= 0) throw std::invalid_argument("rational with non-positive denominator");
  BigInt p = x.num % x.den;
  if (p < 0) p += x.den;
  const BigInt g = boost::multiprecision::gcd(p, x.den);
  return g == 0 ? Rational{0, 1} : Rational{p / g, x.den / g};
}

// Normalizes so that q | (d - p^2) and subtracts the integer part.
QuadraticSurd reduce_frac(const QuadraticSurd& x) {
  if (x.q == 0) throw std::invalid_argument("quadratic surd with zero denominator");
  if (x.d <= 0) throw std::invalid_argument("quadratic surd needs a positive radicand");
  const BigInt s = isqrt(x.d);
  if (s * s == x.d) throw std::invalid_argument("radicand is a perfect square; use a rational");
  QuadraticSurd r = x;
  if ((r.d - r.p * r.p) % r.q != 0) {
    const BigInt aq = abs_big(r.q);
    r.p *= aq;
    r.d *= aq * aq;
    r.q *= aq;
  }
  const BigInt sr = isqrt(r.d);
  const BigInt a0 = r.q > 0 ? floor_div(r.p + sr, r.q) : BigInt(-(floor_div(r.p + sr, -r.q) + 1));
  r.p -= a0 * r.q;
  return r;
}

}  // namespace

QuadraticSurd golden_ratio_surd() { return {BigInt(-1), BigInt(5), BigInt(2)}; }

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  int e = 0;
  const double m = std::frexp(x, &e);
  const auto mant = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  Rational r{BigInt(mant), BigInt(1)};
  if (e >= 0) {
    r.num <<= e;
  } else {
    r.den <<= -e;
  }
  const BigInt g = boost::multiprecision::gcd(abs_big(r.num), r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

double to_double(const Rational& r) {
  using boost::multiprecision::cpp_bin_float_double_extended;
  return static_cast<double>(cpp_bin_float_double_extended(r.num) /
                             cpp_bin_float_double_extended(r.den));
}

double to_double(const QuadraticSurd& s) {
  using F = boost::multiprecision::cpp_bin_float_quad;
  return static_cast<double>((F(s.p) + boost::multiprecision::sqrt(F(s.d))) / F(s.q));
}

ContinuedFraction cf_expand(const Rational& x, std::size_t depth) {
  const Rational f = reduce_frac(x);
  ContinuedFraction cf;
  cf.source = f;
  cf.x = to_double(f);
  BigInt p = f.num;
  BigInt q = f.den;
  while (true) {
    if (p == 0) {
      cf.termination = Termination::rational;
      break;
    }
    if (cf.depth() >= depth) break;
    const BigInt c = q / p;
    push_coefficient(cf, c);
    const BigInt r = q - c * p;
    q = p;
    p = r;
  }
  return cf;
}

ContinuedFraction cf_expand(double x, std::size_t depth) {
  const double frac = x - std::floor(x);
  const Rational f = reduce_frac(to_rational(frac));
  ContinuedFraction cf;
  cf.source = frac;
  cf.x = frac;
  BigInt p = f.num;
  BigInt q = f.den;
  const BigInt tol_den = BigInt(100000000000000LL);  // 1e14
  while (true) {
    if (p == 0) {
      cf.termination = Termination::rational;
      break;
    }
    if (!cf.convergents.empty() &&
        rational_error_below(f, cf.convergents.back(), BigInt(1), tol_den)) {
      cf.termination = Termination::rational;
      break;
    }
    if (cf.depth() >= depth) break;
    const BigInt c = q / p;
    push_coefficient(cf, c);
    const BigInt r = q - c * p;
    q = p;
    p = r;
  }
  return cf;
}

ContinuedFraction cf_expand(const QuadraticSurd& x, std::size_t depth) {
  QuadraticSurd s = reduce_frac(x);
  ContinuedFraction cf;
  cf.source = s;
  cf.x = to_double(s);
  const BigInt sr = isqrt(s.d);
  // s = (p + sqrt d)/q in (0,1); the complete quotient 1/s = (p' + sqrt d)/q'
  // with p' = -p, q' = (d - p^2)/q.
  BigInt p = s.p;
  BigInt q = s.q;
  while (cf.depth() < depth) {
    const BigInt np = -p;
    const BigInt nq = (s.d - p * p) / q;
    p = np;
    q = nq;
    const BigInt c = q > 0 ? floor_div(p + sr, q) : BigInt(-(floor_div(p + sr, -q) + 1));
    push_coefficient(cf, c);
    p -= c * q;
  }
  return cf;
}

std::vector<bool> approximation_check(const ContinuedFraction& cf) {
  std::vector<bool> out;
  for (std::size_t i = 0; i + 1 < cf.depth(); ++i) {
    const Convergent& conv = cf.convergents[i];
    const BigInt& c_next = cf.coefficients[i + 1];
    bool ok = false;
    if (const auto* surd = std::get_if<QuadraticSurd>(&cf.source)) {
      // |(p + sqrt D) d - n q| * c d < |q|
      const BigInt kk = c_next * conv.d;
      const BigInt u = kk * (surd->p * conv.d - conv.n * surd->q);
      const BigInt w = kk * conv.d;
      const BigInt r = abs_big(surd->q);
      ok = surd_less(u, w, surd->d, r) && surd_greater(u, w, surd->d, BigInt(-r));
    } else {
      const Rational r = std::holds_alternative<Rational>(cf.source)
                             ? std::get<Rational>(cf.source)
                             : reduce_frac(to_rational(std::get<double>(cf.source)));
      ok = rational_error_below(r, conv, BigInt(1), c_next * conv.d * conv.d);
    }
    out.push_back(ok);
  }
  return out;
}

FieldClassification classify_field(const ContinuedFraction& cf) {
  const std::size_t n = cf.depth();
  if (cf.termination == Termination::rational) return {FieldClass::rational, n};
  if (n < 2) return {FieldClass::bounded_coefficients, n};
  const std::size_t half = n / 2;
  const auto first = std::max_element(cf.coefficients.begin(), cf.coefficients.begin() + half);
  const auto second = std::max_element(cf.coefficients.begin() + half, cf.coefficients.end());
  return {*second > *first ? FieldClass::unbounded_coefficients : FieldClass::bounded_coefficients,
          n};
}

std::string to_string(FieldClass c) {
  switch (c) {
    case FieldClass::bounded_coefficients: return "bounded-coefficients";
    case FieldClass::unbounded_coefficients: return "unbounded-coefficients";
    case FieldClass::rational: return "rational";
  }
  return "?";
}

}  // namespace qwalk
