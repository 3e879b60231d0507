#include "qwalk/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qwalk/momentum.hpp"

namespace qwalk {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Execution auto_exec(const WalkState& s) {
  return s.size() >= kernels::kOmpSiteThreshold ? Execution::parallel : Execution::serial;
}

}  // namespace

void NoiseConfig::validate() const {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("noise: epsilon must be >= 0");
  if (ensemble_size < 1) throw std::invalid_argument("noise: ensemble size must be >= 1");
}

std::uint64_t trajectory_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + 0x9E3779B97F4A7C15ULL * (index + 1));
}

FluctuationStream::FluctuationStream(std::uint64_t master_seed, std::uint64_t trajectory,
                                     NoiseDistribution dist)
    : gen_(trajectory_seed(master_seed, trajectory)), dist_(dist) {}

double FluctuationStream::next() {
  const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  return dist_ == NoiseDistribution::symmetric ? 2.0 * u - 1.0 : u;
}

std::vector<double> draw_fluctuations(const NoiseConfig& noise, std::uint64_t trajectory, long t) {
  FluctuationStream stream(noise.seed, trajectory, noise.distribution);
  std::vector<double> xs(static_cast<std::size_t>(std::max(0L, t)));
  for (auto& x : xs) x = stream.next();
  return xs;
}

WalkState evolve_with_fluctuations(const WalkState& state, const WalkParams& params,
                                   std::span<const double> xs, double epsilon, Execution exec) {
  WalkState s = state;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s = step(s, static_cast<long>(i) + 1, params, exec, epsilon * xs[i]);
  }
  return s;
}

WalkState noisy_evolve(const WalkState& state, long t, const WalkParams& params,
                       const NoiseConfig& noise, std::uint64_t trajectory) {
  noise.validate();
  FluctuationStream stream(noise.seed, trajectory, noise.distribution);
  WalkState s = state;
  for (long i = 1; i <= t; ++i) {
    s = step(s, i, params, auto_exec(s), noise.epsilon * stream.next());
  }
  return s;
}

Mat2 noisy_regrouped_block(double k, const WalkParams& params, std::span<const double> xs,
                           double epsilon) {
  Unitary2 p;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    p = step_block(k, params, static_cast<long>(i) + 1, epsilon * xs[i]) * p;
  }
  return p.matrix();
}

NoiseBound noise_bound(long m, double epsilon, double alpha_tilde_sup) {
  if (m < 1) throw std::invalid_argument("noise_bound: m must be >= 1");
  if (epsilon < 0.0) throw std::invalid_argument("noise_bound: epsilon must be >= 0");
  if (alpha_tilde_sup < 0.0 || alpha_tilde_sup > 1.0) {
    throw std::invalid_argument("noise_bound: alpha_tilde_sup must lie in [0, 1]");
  }
  NoiseBound b;
  const auto md = static_cast<double>(m);
  if (m % 2 == 1) {
    b.time = 2 * m;
    b.leading = md * (2.0 * md + 1.0) * epsilon;
  } else {
    b.time = m;
    b.leading = 0.5 * md * (md + 1.0) * epsilon;
  }
  b.remainder_scale = std::pow(alpha_tilde_sup, md);
  return b;
}

std::vector<ReturnStats> return_series(const WalkParams& params, const NoiseConfig& noise,
                                       long t_max, const WalkState& initial, Execution exec) {
  noise.validate();
  if (t_max < 0) throw std::invalid_argument("return_series: t_max must be >= 0");
  const long n_traj = noise.ensemble_size;
  const auto len = static_cast<std::size_t>(t_max + 1);
  std::vector<std::vector<double>> series(static_cast<std::size_t>(n_traj));

  auto run = [&](long j) {
    FluctuationStream stream(noise.seed, static_cast<std::uint64_t>(j), noise.distribution);
    std::vector<double> p(len);
    WalkState s = initial;
    p[0] = return_probability(s);
    for (long t = 1; t <= t_max; ++t) {
      s = step(s, t, params, Execution::serial, noise.epsilon * stream.next());
      p[static_cast<std::size_t>(t)] = return_probability(s);
    }
    series[static_cast<std::size_t>(j)] = std::move(p);
  };

  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < n_traj; ++j) run(j);
  } else {
    for (long j = 0; j < n_traj; ++j) run(j);
  }

  std::vector<ReturnStats> out(len);
  for (std::size_t t = 0; t < len; ++t) {
    ReturnStats& r = out[t];
    r.t = static_cast<long>(t);
    r.single = series[0][t];
    r.min = r.max = series[0][t];
    double sum = 0.0;
    for (const auto& sr : series) {
      sum += sr[t];
      r.min = std::min(r.min, sr[t]);
      r.max = std::max(r.max, sr[t]);
    }
    r.mean = sum / static_cast<double>(n_traj);
  }
  return out;
}

}  // namespace qwalk
