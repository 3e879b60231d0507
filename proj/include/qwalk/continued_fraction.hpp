#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qwalk {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational num / den, den > 0.
struct Rational {
  BigInt num;
  BigInt den{1};
};

/// Exact quadratic irrational (p + sqrt(d)) / q; d > 0 not a perfect square, q != 0.
struct QuadraticSurd {
  BigInt p;
  BigInt d;
  BigInt q{1};
};

/// (sqrt 5 - 1) / 2.
QuadraticSurd golden_ratio_surd();

/// Exact value of a double.
Rational to_rational(double x);

double to_double(const Rational& r);
double to_double(const QuadraticSurd& s);

struct Convergent {
  BigInt n;
  BigInt d;
};

enum class Termination {
  /// Requested depth reached; the expansion may continue.
  depth_reached,
  /// The input is rational (exactly, or within 1e-14 for float input); the
  /// expansion is complete.
  rational,
};

/// Continued fraction of the fractional part of a number:
/// frac(x) = [0; c_1, c_2, ...] with convergents n_k / d_k, k >= 1.
struct ContinuedFraction {
  std::variant<double, Rational, QuadraticSurd> source;
  /// frac(x) as a double, for display.
  double x = 0.0;
  std::vector<BigInt> coefficients;     // c_1, c_2, ...
  std::vector<Convergent> convergents;  // n_k / d_k, same length
  Termination termination = Termination::depth_reached;

  std::size_t depth() const { return coefficients.size(); }
};

/// Float input: expands the exact value of `x` and stops once
/// |x - n_k/d_k| < 1e-14, flagging the result as rational.
ContinuedFraction cf_expand(double x, std::size_t depth);
ContinuedFraction cf_expand(const Rational& x, std::size_t depth);
ContinuedFraction cf_expand(const QuadraticSurd& x, std::size_t depth);

/// Per k with c_{k+1} available: |x - n_k/d_k| < 1 / (c_{k+1} d_k^2), evaluated
/// exactly against the source value. Entry i refers to k = i + 1.
std::vector<bool> approximation_check(const ContinuedFraction& cf);

enum class FieldClass { bounded_coefficients, unbounded_coefficients, rational };

struct FieldClassification {
  FieldClass kind;
  std::size_t depth;
};

/// Heuristic at the computed depth: rational if the expansion terminated;
/// unbounded if the largest coefficient in the second half of the expansion
/// exceeds the largest in the first half; bounded otherwise.
FieldClassification classify_field(const ContinuedFraction& cf);

std::string to_string(FieldClass c);

}  // namespace qwalk
