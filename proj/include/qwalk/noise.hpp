#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qwalk/kernels.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Support of the per-step fluctuation x_t.
enum class NoiseDistribution {
  symmetric,  // uniform on [-1, 1]
  unit,       // uniform on [0, 1]
};

/// Field fluctuations Phi_eps(x_t) = Phi + eps x_t, x_t drawn fresh each step.
struct NoiseConfig {
  double epsilon = 0.0;
  NoiseDistribution distribution = NoiseDistribution::symmetric;
  std::uint64_t seed = 1;
  int ensemble_size = 100;

  /// Throws std::invalid_argument on epsilon < 0 or ensemble_size < 1.
  void validate() const;
};

/// Seed of trajectory `index`: splitmix64(master + 0x9E3779B97F4A7C15 * (index + 1)).
std::uint64_t trajectory_seed(std::uint64_t master, std::uint64_t index);

/// Reproducible stream of x_t for one trajectory. Uses mt19937_64 and maps the
/// top 53 bits to [0, 1) explicitly, so values do not depend on the standard
/// library's distribution implementation.
class FluctuationStream {
public:
  FluctuationStream(std::uint64_t master_seed, std::uint64_t trajectory, NoiseDistribution dist);
  double next();

private:
  std::mt19937_64 gen_;
  NoiseDistribution dist_;
};

/// x_1 ... x_t of one trajectory.
std::vector<double> draw_fluctuations(const NoiseConfig& noise, std::uint64_t trajectory, long t);

/// Steps 1..xs.size(), step s using field Phi + epsilon * xs[s-1].
WalkState evolve_with_fluctuations(const WalkState& state, const WalkParams& params,
                                   std::span<const double> xs, double epsilon,
                                   Execution exec = Execution::serial);

/// Steps 1..t of trajectory `trajectory` of the ensemble described by `noise`.
WalkState noisy_evolve(const WalkState& state, long t, const WalkParams& params,
                       const NoiseConfig& noise, std::uint64_t trajectory = 0);

/// Momentum block of a noisy realization, W'(n)(k) ... W'(1)(k).
Mat2 noisy_regrouped_block(double k, const WalkParams& params, std::span<const double> xs,
                           double epsilon);

/// Worst-case revival bound under fluctuations for Phi = 2 pi n / m:
/// m (2m + 1) eps at time 2m (m odd), (m/2)(m + 1) eps at time m (m even),
/// plus the clean remainder scale alpha_sup^m.
struct NoiseBound {
  long time = 0;
  double leading = 0.0;
  double remainder_scale = 0.0;
  double total() const { return leading + remainder_scale; }
};

NoiseBound noise_bound(long m, double epsilon, double alpha_tilde_sup);

struct ReturnStats {
  long t = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  /// Trajectory 0 alone.
  double single = 0.0;
};

/// Return probability p(t), t = 0..t_max, over the ensemble. Trajectories run
/// in parallel with `Execution::parallel`; the reduction is ordered, so both
/// modes give identical results.
std::vector<ReturnStats> return_series(const WalkParams& params, const NoiseConfig& noise,
                                       long t_max, const WalkState& initial,
                                       Execution exec = Execution::parallel);

}  // namespace qwalk
