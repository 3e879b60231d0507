#include "qwalk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "qwalk/continued_fraction.hpp"
#include "qwalk/gauge.hpp"
#include "qwalk/momentum.hpp"
#include "qwalk/noise.hpp"
#include "qwalk/revival.hpp"

namespace qwalk {

namespace {

using I64 = std::int64_t;

ExperimentRecord start_record(const ExperimentConfig& cfg) {
  ExperimentRecord rec;
  rec.experiment = to_string(cfg.experiment);
  rec.add_meta("version", std::string(kVersion));
  for (auto& [k, v] : cfg.echo()) rec.add_meta("config." + k, v);
  return rec;
}

Spinor initial_spinor(SpinComponent s) {
  return s == SpinComponent::up ? Spinor{1.0, 0.0} : Spinor{0.0, 1.0};
}

WalkParams make_params(const ExperimentConfig& cfg) {
  return cfg.field.params(cfg.coin.a, cfg.coin.b, cfg.rule);
}

// Least-squares slope of log(y) against x, skipping y <= 0.
double log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(y[i] > 0.0)) continue;
    const double ly = std::log(y[i]);
    sx += x[i];
    sy += ly;
    sxx += x[i] * x[i];
    sxy += x[i] * ly;
    ++n;
  }
  if (n < 2) return std::nan("");
  const double den = n * sxx - sx * sx;
  return den == 0.0 ? std::nan("") : (n * sxy - sx * sy) / den;
}

double unit_double(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

std::string big(const BigInt& v) { return v.str(); }

std::string short_tag(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

ExperimentResult run_evolve(const ExperimentConfig& cfg) {
  ExperimentRecord rec = start_record(cfg);
  const WalkParams params = make_params(cfg);
  const long tmax = cfg.effective_tmax();
  rec.columns = {"t", "x", "p"};

  WalkState state = WalkState::localized(0, initial_spinor(cfg.spin));
  double max_norm_err = 0.0;
  for (long t = 0;; ++t) {
    if (t % cfg.stride == 0 || t == tmax) {
      const PositionDistribution pd = position_distribution(state);
      for (long x = -t; x <= t; ++x) rec.add_row({I64{t}, I64{x}, pd(x)});
    }
    max_norm_err = std::max(max_norm_err, std::abs(state.norm_squared() - 1.0));
    if (t == tmax) break;
    state = step(state, t + 1, params);
  }
  const PositionDistribution pd = position_distribution(state);
  rec.add_meta("p_origin_tmax", return_probability(state));
  rec.add_meta("max_norm_error", max_norm_err);
  rec.add_meta("support_radius_1e-6", I64{pd.support_radius(1e-6)});
  return {std::move(rec), true};
}

ExperimentResult run_revival_scan(const ExperimentConfig& cfg) {
  ExperimentRecord rec = start_record(cfg);
  const bool by_m = !cfg.m_list.empty();
  if (by_m || cfg.field.kind == FieldSpec::Kind::rational) {
    rec.add_meta("mode", std::string(by_m ? "m-list" : "rational"));
    rec.columns = {"m",         "parity",         "revival_time",    "sign",
                   "deviation", "detected_sign",  "detected_deviation", "alpha_sup",
                   "predicted_scale", "dispersion_bound"};
    std::vector<std::pair<long, long>> fields;
    if (by_m) {
      for (long m : cfg.m_list) fields.emplace_back(1, m);
    } else {
      fields.emplace_back(cfg.field.num, cfg.field.den);
    }
    std::vector<double> xe, ye, xo, yo;
    for (const auto& [n, m] : fields) {
      const WalkParams p = WalkParams::rational(n, m, cfg.coin.a, cfg.coin.b, cfg.rule);
      const RevivalReport r = revival_report(p);
      rec.add_row({I64{r.m}, to_string(r.parity), I64{r.revival_time}, I64{r.sign},
                   r.measured_deviation, I64{r.detected_sign}, r.detected_deviation, r.alpha_sup,
                   r.predicted_scale, r.dispersion_bound});
      auto& xs = r.parity == Parity::even ? xe : xo;
      auto& ys = r.parity == Parity::even ? ye : yo;
      xs.push_back(static_cast<double>(r.m));
      ys.push_back(r.measured_deviation);
    }
    rec.add_meta("log_slope_even", log_slope(xe, ye));
    rec.add_meta("log_slope_odd", log_slope(xo, yo));
    rec.add_meta("reference_slope", -std::log(2.0) / 2.0);
    return {std::move(rec), true};
  }

  rec.add_meta("mode", std::string("convergents"));
  const WalkParams params = make_params(cfg);
  const ContinuedFraction cf = cfg.field.kind == FieldSpec::Kind::golden
                                   ? cf_expand(golden_ratio_surd(), cfg.depth + 1)
                                   : cf_expand(cfg.field.value, cfg.depth + 1);
  const double alpha = sup_alpha_tilde(params);
  rec.add_meta("alpha_sup", alpha);
  rec.columns = {"k", "n_k", "d_k", "c_next", "revival_time", "sign", "deviation", "bound",
                 "alpha_scale"};
  const long tmax = cfg.effective_tmax();
  for (std::size_t k = 1; k + 1 <= cf.depth() && k <= cfg.depth; ++k) {
    if (cf.convergents[k - 1].d > BigInt(tmax)) break;
    const IrrationalBound b = irrational_revival_bound(cf, k);
    if (b.time > tmax) break;
    const double dev = revival_deviation(params, b.time, b.sign);
    const double d = static_cast<double>(b.d);
    rec.add_row({I64{static_cast<I64>(k)}, big(b.n), big(b.d), big(b.c_next), I64{b.time},
                 I64{b.sign}, dev, b.bound, 2.0 * std::pow(alpha, d)});
  }
  return {std::move(rec), true};
}

ExperimentResult run_trace_check(const ExperimentConfig& cfg) {
  ExperimentRecord rec = start_record(cfg);
  rec.columns = {"trial", "m", "n", "formula_re", "formula_im", "direct_re", "direct_im",
                 "residual"};
  std::mt19937_64 g(cfg.seed);
  const double tol = 1e-9;
  double worst = 0.0;
  const int trials = cfg.effective_trials();
  for (int i = 0; i < trials; ++i) {
    const long m = 2 + static_cast<long>(g() % 11);
    long n = 1;
    do {
      n = 1 + static_cast<long>(g() % static_cast<std::uint64_t>(m - 1));
    } while (std::gcd(n, m) != 1);
    Mat2 mm;
    for (auto& e : mm.e) e = cplx(2.0 * unit_double(g) - 1.0, 2.0 * unit_double(g) - 1.0);
    const Mat2 r = rotation_x(2.0 * std::numbers::pi * static_cast<double>(n) /
                              static_cast<double>(m))
                       .matrix();
    const cplx f = trace_formula(mm, r, m);
    Mat2 prod = Mat2::identity();
    Mat2 rj = Mat2::identity();
    for (long j = 0; j < m; ++j) {
      prod = prod * mm * rj;
      rj = rj * r;
    }
    const cplx d = prod.trace();
    const double res = std::abs(f - d);
    worst = std::max(worst, res);
    rec.add_row({I64{i}, I64{m}, I64{n}, f.real(), f.imag(), d.real(), d.imag(), res});
  }
  const bool ok = worst < tol;
  rec.add_meta("max_residual", worst);
  rec.add_meta("tolerance", tol);
  rec.add_meta("pass", std::string(ok ? "true" : "false"));
  return {std::move(rec), ok};
}

ExperimentResult run_cf(const ExperimentConfig& cfg) {
  using F = boost::multiprecision::cpp_bin_float_50;
  ExperimentRecord rec = start_record(cfg);
  ContinuedFraction cf;
  F exact;
  switch (cfg.field.kind) {
    case FieldSpec::Kind::golden: {
      cf = cf_expand(golden_ratio_surd(), cfg.depth);
      const QuadraticSurd s = golden_ratio_surd();
      exact = (F(s.p) + boost::multiprecision::sqrt(F(s.d))) / F(s.q);
      break;
    }
    case FieldSpec::Kind::rational: {
      cf = cf_expand(Rational{BigInt(cfg.field.num), BigInt(cfg.field.den)}, cfg.depth);
      exact = F(BigInt(cfg.field.num)) / F(BigInt(cfg.field.den));
      break;
    }
    case FieldSpec::Kind::real: {
      cf = cf_expand(cfg.field.value, cfg.depth);
      exact = F(cfg.field.value);
      break;
    }
  }
  exact -= boost::multiprecision::floor(exact);
  const auto checks = approximation_check(cf);
  rec.columns = {"k", "c_k", "n_k", "d_k", "abs_error", "bound", "check"};
  bool all = true;
  for (std::size_t i = 0; i < cf.depth(); ++i) {
    const Convergent& c = cf.convergents[i];
    const F err = boost::multiprecision::abs(exact - F(c.n) / F(c.d));
    std::string check = "n/a";
    double bound = std::nan("");
    if (i < checks.size()) {
      check = checks[i] ? "true" : "false";
      all = all && checks[i];
      bound = static_cast<double>(F(1) / (F(cf.coefficients[i + 1]) * F(c.d) * F(c.d)));
    }
    rec.add_row({I64{static_cast<I64>(i + 1)}, big(cf.coefficients[i]), big(c.n), big(c.d),
                 static_cast<double>(err), bound, check});
  }
  const FieldClassification cls = classify_field(cf);
  rec.add_meta("x", cf.x);
  rec.add_meta("termination",
               std::string(cf.termination == Termination::rational ? "rational" : "depth-reached"));
  rec.add_meta("classification", to_string(cls.kind));
  rec.add_meta("all_checks", std::string(all ? "true" : "false"));
  return {std::move(rec), all};
}

ExperimentResult run_noise_series(const ExperimentConfig& cfg) {
  ExperimentRecord rec = start_record(cfg);
  const WalkParams params = make_params(cfg);
  const long tmax = cfg.effective_tmax();
  const WalkState init = WalkState::localized(0, initial_spinor(cfg.spin));
  rec.columns = {"epsilon", "t", "mean", "min", "max", "single"};

  double alpha = std::nan("");
  long m = 0;
  if (cfg.field.kind == FieldSpec::Kind::rational) {
    m = cfg.field.den / std::gcd(cfg.field.num, cfg.field.den);
    alpha = sup_alpha_tilde(params);
  }
  for (double eps : cfg.epsilons) {
    NoiseConfig noise{eps, cfg.distribution, cfg.seed, cfg.ensemble};
    noise.validate();
    const auto series = return_series(params, noise, tmax, init);
    for (const auto& s : series) {
      if (s.t % cfg.stride != 0 && s.t != tmax) continue;
      rec.add_row({eps, I64{s.t}, s.mean, s.min, s.max, s.single});
    }
    const std::string tag = short_tag(eps);
    rec.add_meta("mean_p_tmax[eps=" + tag + "]", series.back().mean);
    if (m > 0) {
      const NoiseBound nb = noise_bound(m, eps, alpha);
      rec.add_meta("bound_time[eps=" + tag + "]", I64{nb.time});
      rec.add_meta("bound_leading[eps=" + tag + "]", nb.leading);
    }
  }
  return {std::move(rec), true};
}

ExperimentResult run_gauge_check(const ExperimentConfig& cfg) {
  ExperimentRecord rec = start_record(cfg);
  const double phi = cfg.field.radians();
  const Unitary2 coin = make_coin(cfg.coin.a, cfg.coin.b);
  const long tmax = cfg.effective_tmax();
  const double tol = 1e-10;
  rec.columns = {"t", "max_deviation"};
  double worst = 0.0;
  for (long t = 1; t <= tmax; ++t) {
    if (t % cfg.stride != 0 && t != tmax) continue;
    const double d = verify_gauge_equivalence(phi, coin, t, cfg.effective_trials(), cfg.seed);
    worst = std::max(worst, d);
    rec.add_row({I64{t}, d});
  }
  const bool ok = worst <= tol;
  rec.add_meta("max_deviation", worst);
  rec.add_meta("tolerance", tol);
  rec.add_meta("pass", std::string(ok ? "true" : "false"));
  return {std::move(rec), ok};
}

ExperimentResult run_appendix_table(const ExperimentConfig& cfg) {
  ExperimentRecord rec = start_record(cfg);
  std::vector<long> ms = cfg.m_list;
  if (ms.empty()) ms = {2, 3, 4, 5, 6, 7, 8, 9};
  const double tol = 1e-10;
  const auto rows = appendix_table(ms, tol);
  rec.columns = {"coin", "m", "parity", "steps", "target_sign", "deviation", "expected",
                 "matches"};
  bool ok = true;
  long mismatches = 0;
  for (const auto& r : rows) {
    rec.add_row({r.coin, I64{r.m}, to_string(r.parity), I64{r.steps}, I64{r.target_sign},
                 r.deviation, r.expected, std::string(r.matches ? "true" : "false")});
    if (!r.matches) {
      ok = false;
      ++mismatches;
    }
  }
  rec.add_meta("tolerance", tol);
  rec.add_meta("mismatches", I64{mismatches});
  rec.add_meta("pass", std::string(ok ? "true" : "false"));
  return {std::move(rec), ok};
}

ExperimentResult run_bloch_trace(const ExperimentConfig& cfg) {
  ExperimentRecord rec = start_record(cfg);
  const WalkParams params = make_params(cfg);
  const long tmax = cfg.effective_tmax();
  rec.columns = {"t", "sx", "sy", "sz", "r", "dist0"};
  WalkState state = WalkState::localized(0, initial_spinor(cfg.spin));
  const auto b0 = bloch_vector(state, 0);
  auto dist = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
  };
  std::string nearest;
  double window_min = std::numeric_limits<double>::infinity();
  long window_start = 1;
  double successive = 0.0;
  long successive_n = 0;
  std::array<double, 3> prev{};
  bool have_prev = false;
  for (long t = 0;; ++t) {
    const auto b = bloch_vector(state, 0);
    const double r = std::hypot(b[0], b[1], b[2]);
    const double d0 = dist(b, b0);
    if (t % cfg.stride == 0 || t == tmax) rec.add_row({I64{t}, b[0], b[1], b[2], r, d0});
    // Odd times carry no amplitude at the origin; compare even samples only.
    if (t > 0 && t % 2 == 0) {
      window_min = std::min(window_min, d0);
      if (have_prev) {
        successive += dist(b, prev);
        ++successive_n;
      }
      prev = b;
      have_prev = true;
    }
    if (t > 0 && (t % cfg.window == 0 || t == tmax)) {
      if (!nearest.empty()) nearest += ';';
      nearest += std::to_string(window_start) + "-" + std::to_string(t) + ":" +
                 format_double(window_min);
      window_min = std::numeric_limits<double>::infinity();
      window_start = t + 1;
    }
    if (t == tmax) break;
    state = step(state, t + 1, params);
  }
  rec.add_meta("nearest_return", nearest);
  rec.add_meta("mean_successive_distance",
               successive_n ? successive / static_cast<double>(successive_n) : 0.0);
  return {std::move(rec), true};
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::evolve: return run_evolve(cfg);
    case Experiment::revival_scan: return run_revival_scan(cfg);
    case Experiment::trace_check: return run_trace_check(cfg);
    case Experiment::cf: return run_cf(cfg);
    case Experiment::noise_series: return run_noise_series(cfg);
    case Experiment::gauge_check: return run_gauge_check(cfg);
    case Experiment::appendix_table: return run_appendix_table(cfg);
    case Experiment::bloch_trace: return run_bloch_trace(cfg);
  }
  throw ConfigError("unknown experiment");
}

void write_record(const ExperimentRecord& rec, const ExperimentConfig& cfg) {
  const std::string text = render(rec, cfg.format);
  if (cfg.output_path.empty() || cfg.output_path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot write '" + cfg.output_path + "'");
  f << text;
  if (!f) throw ConfigError("write failed for '" + cfg.output_path + "'");
}

}  // namespace qwalk
