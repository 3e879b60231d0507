// qwalk: command-line runner for the walk experiments.
//
//   qwalk <experiment> [--field F] [--coin C] [--tmax T] ... [--out FILE] [--format csv|json]
//   qwalk run --config FILE [overrides...]
//
// Exit codes: 0 success, 2 configuration error, 3 check failure.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwalk/config.hpp"
#include "qwalk/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitCheck = 3;

struct FlagSet {
  std::map<std::string, std::string> values;
  std::string config_path;
};

void add_flags(CLI::App* cmd, FlagSet& flags) {
  const std::vector<std::pair<std::string, std::string>> opts = {
      {"field", "Phi/(2 pi): n/m, a real literal or 'golden'"},
      {"coin", "hadamard | identity | i-sigma-y | no-revival | ry:<theta> | a,b"},
      {"rule", "rx (W = S R_x(t Phi) C) or gauged (W = C e^{-i Phi (t-1) sz} S)"},
      {"tmax", "last time step"},
      {"epsilon", "noise strength; comma-separated list for noise-series"},
      {"seed", "master RNG seed"},
      {"ensemble", "number of noise trajectories"},
      {"out", "output file ('-' for stdout)"},
      {"format", "csv or json"},
      {"m-list", "denominators, e.g. 6,8,10 or 2..9"},
      {"spin", "initial spin at the origin: up or down"},
      {"distribution", "noise support: symmetric [-1,1] or unit [0,1]"},
      {"depth", "continued-fraction depth"},
      {"trials", "random instances (trace-check, gauge-check)"},
      {"window", "window length for bloch-trace return statistics"},
      {"stride", "emit every stride-th time step"},
  };
  for (const auto& [key, help] : opts) {
    cmd->add_option_function<std::string>(
        "--" + key, [&flags, key = key](const std::string& v) { flags.values[key] = v; }, help);
  }
  cmd->add_option("--config", flags.config_path, "key = value config file; flags override it");
}

int run(const std::string& experiment, const FlagSet& flags) {
  qwalk::ExperimentConfig cfg;
  bool have_experiment = !experiment.empty();
  if (have_experiment) cfg.experiment = qwalk::parse_experiment(experiment);
  if (!flags.config_path.empty()) {
    for (const auto& [k, v] : qwalk::read_config_file(flags.config_path)) {
      if (k == "experiment" && have_experiment) {
        if (qwalk::parse_experiment(v) != cfg.experiment) {
          throw qwalk::ConfigError("config file is for experiment '" + v + "', not '" +
                                   experiment + "'");
        }
        continue;
      }
      if (k == "experiment") have_experiment = true;
      qwalk::apply_setting(cfg, k, v);
    }
  }
  if (!have_experiment) throw qwalk::ConfigError("no experiment given (set 'experiment' in the config)");
  for (const auto& [k, v] : flags.values) qwalk::apply_setting(cfg, k, v);

  const qwalk::ExperimentResult res = qwalk::run_experiment(cfg);
  qwalk::write_record(res.record, cfg);
  if (!res.checks_passed) {
    std::cerr << "qwalk: " << qwalk::to_string(cfg.experiment) << " check failed\n";
    return kExitCheck;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-periodically driven quantum walk experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qwalk::kVersion));

  std::map<std::string, FlagSet> flags;
  std::map<CLI::App*, std::string> names;
  for (auto e : qwalk::all_experiments()) {
    const std::string name = qwalk::to_string(e);
    auto* cmd = app.add_subcommand(name, "run the " + name + " experiment");
    add_flags(cmd, flags[name]);
    names[cmd] = name;
  }
  auto* run_cmd = app.add_subcommand("run", "run the experiment named in --config");
  add_flags(run_cmd, flags["run"]);
  names[run_cmd] = "";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  for (const auto& [cmd, name] : names) {
    if (!cmd->parsed()) continue;
    const FlagSet& f = flags[name.empty() ? "run" : name];
    try {
      return run(name, f);
    } catch (const qwalk::ConfigError& e) {
      std::cerr << "qwalk: " << e.what() << "\n";
      return kExitConfig;
    } catch (const std::invalid_argument& e) {
      std::cerr << "qwalk: invalid configuration: " << e.what() << "\n";
      return kExitConfig;
    }
  }
  return kExitConfig;
}
