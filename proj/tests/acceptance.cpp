// Acceptance suite: one [PASS]/[FAIL] line per criterion.
//
//   acceptance          run all criteria
//   acceptance 3 7      run the listed criteria
//
// Exit status is the number of failed criteria (capped at 100).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qwalk/continued_fraction.hpp"
#include "qwalk/experiments.hpp"
#include "qwalk/gauge.hpp"
#include "qwalk/momentum.hpp"
#include "qwalk/noise.hpp"
#include "qwalk/revival.hpp"

using namespace qwalk;

namespace {

const double kH = 1.0 / std::numbers::sqrt2;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Mat2 random_matrix(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat2 m;
  for (auto& e : m.e) e = cplx(u(g), u(g));
  return m;
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome trace_formula_oracle() {
  std::mt19937_64 g(1);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const long m = 2 + static_cast<long>(g() % 11);
    long n;
    do {
      n = 1 + static_cast<long>(g() % static_cast<unsigned long>(m - 1));
    } while (std::gcd(n, m) != 1);
    const Mat2 mm = random_matrix(g);
    const Mat2 r = rotation_x(kTwoPi * n / m).matrix();
    Mat2 prod = Mat2::identity(), rj = Mat2::identity();
    for (long j = 0; j < m; ++j) {
      prod = prod * mm * rj;
      rj = rj * r;
    }
    worst = std::max(worst, std::abs(trace_formula(mm, r, m) - prod.trace()));
  }
  return {worst <= 1e-9, "200 instances, max residual " + fmt("%.2e", worst) + " (tol 1e-9)"};
}

Outcome hadamard_scaling() {
  std::vector<double> xs, ys;
  bool within = true;
  std::ostringstream d;
  for (long m : {6L, 8L, 10L, 12L, 14L, 16L}) {
    const ExpectedRevival ex = expected_revival(m);
    const double dev = revival_deviation(WalkParams::rational(1, m, kH, kH), ex.time, ex.sign);
    const double pred = std::pow(2.0, -m / 2.0 + 1.0);
    const double ratio = dev / pred;
    within = within && ratio >= 0.5 && ratio <= 2.0;
    xs.push_back(static_cast<double>(m));
    ys.push_back(std::log(dev));
    d << "m=" << m << ":" << fmt("%.4g", dev) << "/" << fmt("%.4g", pred) << " ";
  }
  const double s = slope(xs, ys);
  const double ref = -std::log(2.0) / 2.0;
  const bool slope_ok = std::abs(s - ref) <= 0.05 * std::abs(ref);
  d << "| slope " << fmt("%.4f", s) << " vs " << fmt("%.4f", ref);

  // Odd m at t = 2m, for comparison.
  std::vector<double> xo, yo;
  for (long m : {5L, 7L, 9L, 11L, 13L, 15L}) {
    const double dev = revival_deviation(WalkParams::rational(1, m, kH, kH), 2 * m, -1);
    xo.push_back(static_cast<double>(m));
    yo.push_back(std::log(dev));
  }
  d << " | odd m slope " << fmt("%.4f", slope(xo, yo));
  return {within && slope_ok, d.str()};
}

Outcome appendix_exactness() {
  std::ostringstream d;
  bool ok = true;
  std::vector<long> bad;
  for (long m = 2; m <= 16; ++m) {
    const ExpectedRevival ex = expected_revival(m);
    const double id = revival_deviation(WalkParams::rational(1, m, 1.0, 0.0), ex.time, ex.sign);
    const double iy = revival_deviation(WalkParams::rational(1, m, 0.0, 1.0), ex.time, ex.sign);
    const double want = m % 2 == 1 ? 2.0 : 0.0;
    if (std::abs(id - want) > 1e-10) {
      ok = false;
      bad.push_back(m);
    }
    if (iy > 1e-10) {
      ok = false;
      d << "i-sigma-y m=" << m << " dev " << fmt("%.2e", iy) << "; ";
    }
  }
  d << "m=2..16; identity-coin mismatches at m=";
  for (std::size_t i = 0; i < bad.size(); ++i) d << (i ? "," : "") << bad[i];
  if (bad.empty()) d << "none";
  return {ok, d.str()};
}

Outcome fig1() {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::evolve;
  apply_setting(cfg, "field", "1/155");
  apply_setting(cfg, "coin", "hadamard");
  apply_setting(cfg, "tmax", "310");
  const ExperimentResult res = run_evolve(cfg);
  const double p0 = std::stod(res.record.meta("p_origin_tmax"));
  const std::size_t want_rows = 311u * 311u;
  const bool grid = res.record.rows.size() == want_rows && !to_csv(res.record).empty();
  return {p0 >= 0.999 && grid, "p(0,310) = " + fmt("%.15f", p0) + ", grid rows " +
                                   std::to_string(res.record.rows.size())};
}

Outcome no_revival_coin() {
  const WalkParams p = WalkParams::rational(1, 10, cplx(0.0, kH), kH);
  const double sup = sup_alpha_tilde(p);
  const SignedDeviation sd = measure_revival(p, 20);
  const double dev = std::min(sd.plus, sd.minus);
  const bool ok = std::abs(sup - 1.0) <= 1e-9 && dev >= 0.5;
  return {ok, "sup|a~| = " + fmt("%.12f", sup) + ", deviation at t=20 from +1: " +
                  fmt("%.4f", sd.plus) + ", from -1: " + fmt("%.4f", sd.minus) + " (O(1): >= 0.5)"};
}

Outcome gauge_equivalence() {
  double worst = 0.0;
  const Unitary2 c = make_coin(kH, kH);
  for (double phi : {kTwoPi / 10.0, kTwoPi * kGolden}) {
    for (long t = 1; t <= 50; ++t) {
      worst = std::max(worst, verify_gauge_equivalence(phi, c, t, 20, static_cast<std::uint64_t>(t)));
    }
  }
  return {worst <= 1e-10, "t=1..50, 20 states, rational and golden: max deviation " +
                              fmt("%.2e", worst) + " (tol 1e-10)"};
}

Outcome noise_thresholds() {
  const WalkParams p = WalkParams::rational(1, 100, kH, kH);
  const WalkState init = WalkState::localized(0);
  auto mean_p100 = [&](double eps) {
    return return_series(p, NoiseConfig{eps, NoiseDistribution::symmetric, 1, 100}, 100, init)
        .back()
        .mean;
  };
  const double lo = mean_p100(1e-4);
  const double hi = mean_p100(1e-3);
  return {lo >= 0.9 && hi <= 0.5, "mean p(100): eps=1e-4 " + fmt("%.4f", lo) +
                                      " (>= 0.9), eps=1e-3 " + fmt("%.4f", hi) + " (<= 0.5)"};
}

Outcome golden_localization() {
  const WalkParams p = WalkParams::with_field(kTwoPi * kGolden, kH, kH);
  WalkState s = WalkState::localized(0);
  double pmin = 1.0;
  long tmin = 0;
  long radius_max = 0;
  for (long t = 1; t <= 1000; ++t) {
    s = step(s, t, p);
    if (t % 2 == 0) {
      const double pt = return_probability(s);
      if (pt < pmin) {
        pmin = pt;
        tmin = t;
      }
    }
    radius_max = std::max(radius_max, position_distribution(s).support_radius(1e-6));
  }
  const long radius = position_distribution(s).support_radius(1e-6);
  const double noisy =
      return_series(p, NoiseConfig{1e-3, NoiseDistribution::symmetric, 1, 100}, 1000, WalkState::localized(0))
          .back()
          .mean;
  const bool ok = pmin >= 0.05 && radius <= 20 && noisy < 0.5 * pmin;
  return {ok, "clean: min p over even t<=1000 = " + fmt("%.4f", pmin) + " at t=" +
                  std::to_string(tmin) + ", support radius (p>=1e-6) at t=1000 " + std::to_string(radius) +
                  " (max over t " + std::to_string(radius_max) + ")" +
                  "; eps=1e-3: mean p(1000) = " + fmt("%.4f", noisy)};
}

Outcome lipschitz() {
  std::mt19937_64 g(3);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  std::uniform_real_distribution<double> du(-0.05, 0.05);
  long checks = 0, violations = 0;
  double worst_ratio = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double phi = u(g);
    const double phi2 = phi + du(g);
    const long t = 1 + static_cast<long>(g() % 50);
    const WalkParams a = WalkParams::with_field(phi, kH, kH);
    const WalkParams b = WalkParams::with_field(phi2, kH, kH);
    const double bound = 0.5 * t * (t + 1) * std::abs(phi - phi2);
    for (int j = 0; j < 32; ++j) {
      const double k = kTwoPi * j / 32.0;
      const double diff = operator_norm(regrouped_block(k, a, t).matrix() - regrouped_block(k, b, t).matrix());
      ++checks;
      if (diff > bound + 1e-12) ++violations;
      if (bound > 0) worst_ratio = std::max(worst_ratio, diff / bound);
    }
  }
  return {violations == 0, std::to_string(checks) + " checks, " + std::to_string(violations) +
                               " violations, max diff/bound " + fmt("%.3f", worst_ratio)};
}

Outcome continued_fractions() {
  const ContinuedFraction cf = cf_expand(golden_ratio_surd(), 40);
  bool fib = cf.depth() == 40;
  BigInt f0 = 0, f1 = 1;
  for (std::size_t k = 0; k < cf.depth(); ++k) {
    fib = fib && cf.convergents[k].n == f1 && cf.convergents[k].d == f0 + f1;
    const BigInt f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
  }
  std::mt19937_64 g(10);
  int tested = 0, all_true = 0;
  while (tested < 20) {
    const long d = 2 + static_cast<long>(g() % 1000);
    const long r = static_cast<long>(std::sqrt(static_cast<double>(d)));
    if (r * r == d) continue;
    const long p = static_cast<long>(g() % 41) - 20;
    const long q = 1 + static_cast<long>(g() % 30);
    const auto checks = approximation_check(cf_expand(QuadraticSurd{p, d, q}, 16));
    ++tested;
    if (checks.size() == 15 && std::all_of(checks.begin(), checks.end(), [](bool b) { return b; })) ++all_true;
  }
  return {fib && all_true == 20, std::string("Fibonacci to depth 40: ") + (fib ? "yes" : "no") +
                                     ", approximation check all-true for " + std::to_string(all_true) +
                                     "/20 quadratic irrationals to depth 15"};
}

Outcome unitarity_reproducibility() {
  const long T = 10000;
  double worst = 0.0;
  const WalkParams rx = WalkParams::with_field(kTwoPi * kGolden, kH, kH);
  const WalkParams gz = WalkParams::rational(1, 155, cplx(0.6, 0.0), cplx(0.0, 0.8), TimeRule::gauged_sz);
  WalkState a = WalkState::localized(0, {kH, cplx(0.0, kH)});
  WalkState b = a;
  WalkState e = a;
  FluctuationStream noise(1, 0, NoiseDistribution::symmetric);
  WalkState n = a;
  const Unitary2 coin = make_coin(kH, kH);
  for (long t = 1; t <= T; ++t) {
    a = step(a, t, rx);
    b = step(b, t, gz);
    e = electric_step(e, kTwoPi * kGolden, coin);
    n = step(n, t, rx, Execution::parallel, 1e-3 * noise.next());
    if (t % 500 == 0) {
      for (const WalkState* s : {&a, &b, &e, &n}) worst = std::max(worst, std::abs(s->norm_squared() - 1.0));
    }
  }

  bool same = true;
  for (Experiment ex : all_experiments()) {
    ExperimentConfig cfg;
    cfg.experiment = ex;
    for (const auto& [k, v] : std::vector<std::pair<const char*, const char*>>{
             {"tmax", "40"}, {"trials", "5"}, {"ensemble", "8"}, {"epsilon", "1e-3"}, {"m-list", "3,4,5"},
             {"seed", "99"}}) {
      apply_setting(cfg, k, v);
    }
    for (OutputFormat f : {OutputFormat::csv, OutputFormat::json}) {
      same = same && render(run_experiment(cfg).record, f) == render(run_experiment(cfg).record, f);
    }
  }
  return {worst <= 1e-9 && same, "max |norm^2 - 1| up to t=1e4 over 4 models " + fmt("%.2e", worst) +
                                     "; byte-identical reruns: " + (same ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "trace-formula oracle", 1.0, trace_formula_oracle},
      {2, "Hadamard revival scaling", 10.0, hadamard_scaling},
      {3, "appendix exactness", 5.0, appendix_exactness},
      {4, "Fig. 1 reproduction", 30.0, fig1},
      {5, "no-revival coin", 5.0, no_revival_coin},
      {6, "gauge equivalence", 10.0, gauge_equivalence},
      {7, "noise thresholds", 60.0, noise_thresholds},
      {8, "golden-ratio localization", 60.0, golden_localization},
      {9, "Lipschitz property", 5.0, lipschitz},
      {10, "continued fractions", 1.0, continued_fractions},
      {11, "unitarity and reproducibility", 30.0, unitarity_reproducibility},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %2d %s: %s | %.2f s (limit %g s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.limit_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  return std::min(failed, 100);
}
