#pragma once

#include <string>

#include "qwalk/config.hpp"
#include "qwalk/record.hpp"

namespace qwalk {

struct ExperimentResult {
  ExperimentRecord record;
  /// False when a *-check experiment (trace-check, gauge-check, appendix-table)
  /// found a residual above its tolerance.
  bool checks_passed = true;
};

/// Position distribution p(x, t) on the dense grid x in [-t, t] for every
/// stride-th t up to tmax, starting from |0, spin>.
ExperimentResult run_evolve(const ExperimentConfig& cfg);

/// Revival deviation against the predicted time and sign. With an m-list the
/// field is 1/m per row; otherwise a rational field gives one row and an
/// irrational field is scanned along its convergents d_k <= tmax / 2.
ExperimentResult run_revival_scan(const ExperimentConfig& cfg);

/// Closed-form trace against the direct product for random M and R = R_x(2 pi n/m), m <= 12.
ExperimentResult run_trace_check(const ExperimentConfig& cfg);

/// Continued fraction of the field with convergents and the approximation check.
ExperimentResult run_cf(const ExperimentConfig& cfg);

/// Ensemble return probability per epsilon.
ExperimentResult run_noise_series(const ExperimentConfig& cfg);

/// Gauge-equivalence residual for t = 1..tmax.
ExperimentResult run_gauge_check(const ExperimentConfig& cfg);

/// Identity and i sigma_y coins at Phi = 2 pi / m for each m in the m-list.
ExperimentResult run_appendix_table(const ExperimentConfig& cfg);

/// Bloch vector of psi(0, .) for t = 0..tmax.
ExperimentResult run_bloch_trace(const ExperimentConfig& cfg);

ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Writes the rendered record to cfg.output_path, or stdout if it is empty or "-".
/// Throws ConfigError if the file cannot be written.
void write_record(const ExperimentRecord& rec, const ExperimentConfig& cfg);

}  // namespace qwalk
