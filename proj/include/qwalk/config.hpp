#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/noise.hpp"
#include "qwalk/record.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Invalid experiment configuration; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Experiment {
  evolve,
  revival_scan,
  trace_check,
  cf,
  noise_series,
  gauge_check,
  appendix_table,
  bloch_trace,
};

std::string to_string(Experiment e);
Experiment parse_experiment(const std::string& name);
const std::vector<Experiment>& all_experiments();

/// Phi / (2 pi): "n/m" (exact), an integer, a decimal literal, or "golden" = (sqrt 5 - 1)/2.
struct FieldSpec {
  enum class Kind { rational, real, golden };
  Kind kind = Kind::rational;
  long num = 1;
  long den = 155;
  double value = 1.0 / 155.0;
  std::string text = "1/155";

  double fraction() const { return value; }
  double radians() const;
  WalkParams params(cplx a, cplx b, TimeRule rule = TimeRule::rx_field) const;
};

FieldSpec parse_field(const std::string& text);

/// hadamard | identity | i-sigma-y | no-revival | ry:<theta> | <a>,<b> with complex
/// literals such as 0.6,0.8i or 0.5+0.5i,-0.5+0.5i.
struct CoinSpec {
  std::string text = "hadamard";
  cplx a{1.0 / std::numbers::sqrt2, 0.0};
  cplx b{1.0 / std::numbers::sqrt2, 0.0};
};

CoinSpec parse_coin(const std::string& text);

/// "1.5", "-2i", "0.3+0.4i", "i", "-i".
cplx parse_complex(const std::string& text);

struct ExperimentConfig {
  Experiment experiment = Experiment::evolve;
  FieldSpec field;
  CoinSpec coin;
  TimeRule rule = TimeRule::rx_field;
  /// Unset means the experiment default (default_tmax).
  std::optional<long> t_max;
  std::uint64_t seed = 1;
  std::string output_path;  // empty or "-" means stdout
  OutputFormat format = OutputFormat::csv;
  std::vector<double> epsilons{0.0};
  int ensemble = 100;
  NoiseDistribution distribution = NoiseDistribution::symmetric;
  std::vector<long> m_list;
  SpinComponent spin = SpinComponent::up;
  std::size_t depth = 20;
  /// Unset means 200 for trace-check and 20 otherwise.
  std::optional<int> trials;
  long window = 100;
  long stride = 1;

  long effective_tmax() const;
  int effective_trials() const;
  /// Ordered key/value echo of every setting, in config-file syntax.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

long default_tmax(Experiment e);

/// Parses `key = value` lines; '#' starts a comment; blank lines are ignored.
/// Keys are returned in file order; duplicates keep the last value.
std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text);
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

/// Applies one setting by its key (the long flag name without dashes).
/// Throws ConfigError on unknown keys or malformed values.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Keys understood by apply_setting.
const std::vector<std::string>& config_keys();

}  // namespace qwalk
