#include "qwalk/revival.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qwalk/ksup.hpp"
#include "qwalk/momentum.hpp"

namespace qwalk {

Parity parity_of(long m) { return m % 2 == 0 ? Parity::even : Parity::odd; }

std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

double revival_deviation(const WalkParams& params, long steps, int target_sign, Execution exec) {
  const Mat2 target = static_cast<double>(target_sign) * Mat2::identity();
  return sup_over_k(
             [&](double k) { return operator_norm(regrouped_block(k, params, steps).matrix() - target); },
             exec)
      .value;
}

SignedDeviation measure_revival(const WalkParams& params, long steps, Execution exec) {
  SignedDeviation r;
  r.plus = revival_deviation(params, steps, +1, exec);
  r.minus = revival_deviation(params, steps, -1, exec);
  r.best_sign = r.plus <= r.minus ? +1 : -1;
  return r;
}

ExpectedRevival expected_revival(long m) {
  if (m <= 0) throw std::invalid_argument("expected_revival: m must be positive");
  if (m % 2 == 1) return {2 * m, -1};
  return {m, (m / 2) % 2 == 0 ? -1 : +1};
}

RevivalReport revival_report(const WalkParams& params, Execution exec) {
  const auto& rf = params.rational_field();
  if (!rf) throw std::invalid_argument("revival_report needs a rational field");
  const long g = std::gcd(rf->num, rf->den);
  const long m = rf->den / (g == 0 ? 1 : g);

  RevivalReport rep;
  rep.m = m;
  rep.parity = parity_of(m);
  const ExpectedRevival ex = expected_revival(m);
  rep.revival_time = ex.time;
  rep.sign = ex.sign;
  const SignedDeviation sd = measure_revival(params, ex.time, exec);
  rep.measured_deviation = ex.sign > 0 ? sd.plus : sd.minus;
  rep.detected_sign = sd.best_sign;
  rep.detected_deviation = sd.best();
  rep.alpha_sup = sup_alpha_tilde(params);
  rep.predicted_scale = 2.0 * std::pow(rep.alpha_sup, static_cast<double>(m));
  rep.dispersion_bound =
      2.0 * std::pow(rep.alpha_sup, m % 2 == 1 ? static_cast<double>(m) : 0.5 * static_cast<double>(m));
  return rep;
}

std::vector<AppendixRow> appendix_table(std::span<const long> ms, double tol) {
  struct CoinCase {
    const char* name;
    cplx a;
    cplx b;
  };
  const CoinCase coins[] = {{"identity", 1.0, 0.0}, {"i-sigma-y", 0.0, 1.0}};
  std::vector<AppendixRow> rows;
  for (const auto& c : coins) {
    for (long m : ms) {
      const WalkParams p = WalkParams::rational(1, m, c.a, c.b);
      const ExpectedRevival ex = expected_revival(m);
      AppendixRow row;
      row.coin = c.name;
      row.m = m;
      row.parity = parity_of(m);
      row.steps = ex.time;
      row.target_sign = ex.sign;
      row.deviation = revival_deviation(p, ex.time, ex.sign);
      row.expected = (row.coin == "identity" && m % 2 == 1) ? 2.0 : 0.0;
      row.matches = std::abs(row.deviation - row.expected) <= tol;
      rows.push_back(row);
    }
  }
  return rows;
}

IrrationalBound irrational_revival_bound(const ContinuedFraction& cf, std::size_t k) {
  if (k < 1 || k + 1 > cf.depth()) {
    throw std::out_of_range("irrational_revival_bound: k outside the computed expansion");
  }
  IrrationalBound b;
  b.k = k;
  b.n = cf.convergents[k - 1].n;
  b.d = cf.convergents[k - 1].d;
  b.c_next = cf.coefficients[k];
  if (b.d > BigInt(std::numeric_limits<long>::max() / 2)) {
    throw std::out_of_range("irrational_revival_bound: d_k too large for a step count");
  }
  const long d = static_cast<long>(b.d);
  const double c = static_cast<double>(b.c_next);
  if (d % 2 == 1) {
    b.time = 2 * d;
    b.sign = -1;
    b.bound = 4.0 * std::numbers::pi / c;
  } else {
    b.time = d;
    b.sign = (d / 2) % 2 == 0 ? -1 : +1;
    b.bound = std::numbers::pi / c;
  }
  return b;
}

}  // namespace qwalk
