#pragma once

#include <span>
#include <string>
#include <vector>

#include "qwalk/continued_fraction.hpp"
#include "qwalk/kernels.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class Parity { odd, even };

Parity parity_of(long m);
std::string to_string(Parity p);

/// sup_k || W^{[steps,1]}(k) - target_sign * 1 ||, the operator-norm distance of
/// the translation-invariant evolution from +-identity. Valid for any field.
double revival_deviation(const WalkParams& params, long steps, int target_sign,
                         Execution exec = Execution::parallel);

/// Deviation for both signs and the one that fits best.
struct SignedDeviation {
  double plus = 0.0;
  double minus = 0.0;
  int best_sign = 1;
  double best() const { return best_sign > 0 ? plus : minus; }
};

SignedDeviation measure_revival(const WalkParams& params, long steps,
                                Execution exec = Execution::parallel);

/// Revival time and phase for a rational field with reduced denominator m:
/// W^{[2m,1]} ~ -1 for m odd, W^{[m,1]} ~ -(-1)^{m/2} 1 for m even.
struct ExpectedRevival {
  long time;
  int sign;
};

ExpectedRevival expected_revival(long m);

struct RevivalReport {
  long m = 0;
  Parity parity = Parity::odd;
  long revival_time = 0;
  /// Expected phase of the revival, -1 or +1.
  int sign = -1;
  /// Deviation from sign * 1 at revival_time.
  double measured_deviation = 0.0;
  /// Auto-detected sign and its deviation (equal to the above when the
  /// conventions agree).
  int detected_sign = -1;
  double detected_deviation = 0.0;
  double alpha_sup = 0.0;
  /// 2 sup|a~|^m, the exponential scale quoted for revivals.
  double predicted_scale = 0.0;
  /// Rigorous bound from the dispersion relation: 2 sup|a~|^m for m odd,
  /// 2 sup|a~|^{m/2} for m even.
  double dispersion_bound = 0.0;
};

/// Requires a rational field; m is its reduced denominator.
RevivalReport revival_report(const WalkParams& params, Execution exec = Execution::parallel);

struct AppendixRow {
  std::string coin;  // "identity" or "i-sigma-y"
  long m = 0;
  Parity parity = Parity::odd;
  long steps = 0;
  int target_sign = -1;
  double deviation = 0.0;
  /// Value asserted for this case: 2 for the identity coin with m odd, 0 otherwise.
  double expected = 0.0;
  bool matches = false;
};

/// C = 1 and C = i sigma_y at Phi = 2 pi / m for each m, measured at the
/// revival time against the expected sign.
std::vector<AppendixRow> appendix_table(std::span<const long> ms, double tol = 1e-10);

struct IrrationalBound {
  std::size_t k = 0;
  BigInt n;
  BigInt d;
  BigInt c_next;
  /// 2 d_k for d_k odd, d_k for d_k even.
  long time = 0;
  int sign = -1;
  /// 4 pi / c_{k+1} (d_k odd) or pi / c_{k+1} (d_k even).
  double bound = 0.0;
};

/// Revival prediction from the k-th convergent (1-based); needs c_{k+1}.
IrrationalBound irrational_revival_bound(const ContinuedFraction& cf, std::size_t k);

}  // namespace qwalk
