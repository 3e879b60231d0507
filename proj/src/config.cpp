#include "qwalk/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qwalk/record.hpp"

namespace qwalk {

namespace {

const std::vector<std::pair<Experiment, std::string>>& experiment_names() {
  static const std::vector<std::pair<Experiment, std::string>> names = {
      {Experiment::evolve, "evolve"},
      {Experiment::revival_scan, "revival-scan"},
      {Experiment::trace_check, "trace-check"},
      {Experiment::cf, "cf"},
      {Experiment::noise_series, "noise-series"},
      {Experiment::gauge_check, "gauge-check"},
      {Experiment::appendix_table, "appendix-table"},
      {Experiment::bloch_trace, "bloch-trace"},
  };
  return names;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

double parse_real(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  if (t.empty()) throw ConfigError(what + ": empty value");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError(what + ": not a finite number: '" + t + "'");
  }
  return v;
}

long parse_long(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  if (t.empty()) throw ConfigError(what + ": empty value");
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (end != t.c_str() + t.size() || errno == ERANGE) {
    throw ConfigError(what + ": not an integer: '" + t + "'");
  }
  return v;
}

std::string join_longs(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_doubles(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_double(v[i]);
  }
  return out;
}

}  // namespace

std::string to_string(Experiment e) {
  for (const auto& [k, name] : experiment_names()) {
    if (k == e) return name;
  }
  return "?";
}

Experiment parse_experiment(const std::string& name) {
  for (const auto& [k, n] : experiment_names()) {
    if (n == trim(name)) return k;
  }
  throw ConfigError("unknown experiment '" + name + "'");
}

const std::vector<Experiment>& all_experiments() {
  static const std::vector<Experiment> all = [] {
    std::vector<Experiment> v;
    for (const auto& [k, n] : experiment_names()) v.push_back(k);
    return v;
  }();
  return all;
}

double FieldSpec::radians() const { return 2.0 * std::numbers::pi * value; }

WalkParams FieldSpec::params(cplx a, cplx b, TimeRule rule) const {
  if (kind == Kind::rational) return WalkParams::rational(num, den, a, b, rule);
  return WalkParams::with_field(radians(), a, b, rule);
}

FieldSpec parse_field(const std::string& text) {
  const std::string t = trim(text);
  FieldSpec f;
  f.text = t;
  if (t == "golden") {
    f.kind = FieldSpec::Kind::golden;
    f.num = 0;
    f.den = 0;
    f.value = (std::sqrt(5.0) - 1.0) / 2.0;
    return f;
  }
  if (const auto slash = t.find('/'); slash != std::string::npos) {
    const long n = parse_long(t.substr(0, slash), "field numerator");
    const long m = parse_long(t.substr(slash + 1), "field denominator");
    if (m <= 0) throw ConfigError("field: denominator must be positive");
    f.kind = FieldSpec::Kind::rational;
    f.num = n;
    f.den = m;
    f.value = static_cast<double>(n) / static_cast<double>(m);
    return f;
  }
  if (t.find_first_of(".eE") == std::string::npos) {
    f.kind = FieldSpec::Kind::rational;
    f.num = parse_long(t, "field");
    f.den = 1;
    f.value = static_cast<double>(f.num);
    return f;
  }
  f.kind = FieldSpec::Kind::real;
  f.num = 0;
  f.den = 0;
  f.value = parse_real(t, "field");
  return f;
}

cplx parse_complex(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ' && c != '\t') t += c;
  }
  if (t.empty()) throw ConfigError("empty complex literal");
  if (t.back() != 'i' && t.back() != 'j') return {parse_real(t, "complex literal"), 0.0};
  // Imaginary part starts at the last sign that is not part of an exponent.
  std::size_t split_at = 0;
  for (std::size_t i = t.size() - 1; i > 0; --i) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const std::string re = t.substr(0, split_at);
  std::string im = t.substr(split_at, t.size() - split_at - 1);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re, "complex literal"), parse_real(im, "complex literal")};
}

CoinSpec parse_coin(const std::string& text) {
  const std::string t = trim(text);
  const double r = 1.0 / std::numbers::sqrt2;
  CoinSpec c;
  c.text = t;
  if (t == "hadamard") {
    c.a = r;
    c.b = r;
  } else if (t == "identity") {
    c.a = 1.0;
    c.b = 0.0;
  } else if (t == "i-sigma-y") {
    c.a = 0.0;
    c.b = 1.0;
  } else if (t == "no-revival") {
    c.a = cplx(0.0, r);
    c.b = r;
  } else if (t.rfind("ry:", 0) == 0) {
    const double th = parse_real(t.substr(3), "coin angle");
    c.a = std::cos(th);
    c.b = std::sin(th);
  } else {
    const auto parts = split(t, ',');
    if (parts.size() != 2) throw ConfigError("coin: expected a name, ry:<theta> or a,b; got '" + t + "'");
    c.a = parse_complex(parts[0]);
    c.b = parse_complex(parts[1]);
  }
  if (std::abs(std::norm(c.a) + std::norm(c.b) - 1.0) > 1e-10) {
    throw ConfigError("coin: |a|^2 + |b|^2 must be 1");
  }
  return c;
}

long default_tmax(Experiment e) {
  switch (e) {
    case Experiment::evolve: return 310;
    case Experiment::revival_scan: return 2000;
    case Experiment::trace_check: return 0;
    case Experiment::cf: return 0;
    case Experiment::noise_series: return 100;
    case Experiment::gauge_check: return 50;
    case Experiment::appendix_table: return 0;
    case Experiment::bloch_trace: return 1000;
  }
  return 0;
}

long ExperimentConfig::effective_tmax() const { return t_max ? *t_max : default_tmax(experiment); }

int ExperimentConfig::effective_trials() const {
  if (trials) return *trials;
  return experiment == Experiment::trace_check ? 200 : 20;
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::echo() const {
  return {
      {"experiment", to_string(experiment)},
      {"field", field.text},
      {"coin", coin.text},
      {"rule", rule == TimeRule::rx_field ? "rx" : "gauged"},
      {"tmax", std::to_string(effective_tmax())},
      {"seed", std::to_string(seed)},
      {"epsilon", join_doubles(epsilons)},
      {"ensemble", std::to_string(ensemble)},
      {"distribution", distribution == NoiseDistribution::symmetric ? "symmetric" : "unit"},
      {"m-list", join_longs(m_list)},
      {"spin", spin == SpinComponent::up ? "up" : "down"},
      {"depth", std::to_string(depth)},
      {"trials", std::to_string(effective_trials())},
      {"window", std::to_string(window)},
      {"stride", std::to_string(stride)},
      {"format", format == OutputFormat::csv ? "csv" : "json"},
  };
}

std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    const auto it = std::find_if(out.begin(), out.end(), [&](const auto& kv) { return kv.first == key; });
    if (it != out.end()) {
      it->second = value;
    } else {
      out.emplace_back(std::move(key), std::move(value));
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "experiment", "field", "coin",  "rule",   "tmax",  "seed",   "out",    "format",
      "epsilon",    "ensemble", "distribution", "m-list", "spin", "depth", "trials", "window",
      "stride"};
  return keys;
}

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "experiment") {
    cfg.experiment = parse_experiment(v);
  } else if (key == "field") {
    cfg.field = parse_field(v);
  } else if (key == "coin") {
    cfg.coin = parse_coin(v);
  } else if (key == "rule") {
    if (v == "rx") {
      cfg.rule = TimeRule::rx_field;
    } else if (v == "gauged") {
      cfg.rule = TimeRule::gauged_sz;
    } else {
      throw ConfigError("rule: expected rx or gauged");
    }
  } else if (key == "tmax") {
    const long t = parse_long(v, "tmax");
    if (t < 0) throw ConfigError("tmax must be nonnegative");
    cfg.t_max = t;
  } else if (key == "seed") {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
      throw ConfigError("seed must be a nonnegative integer");
    }
    errno = 0;
    const unsigned long long s = std::strtoull(v.c_str(), nullptr, 10);
    if (errno == ERANGE) throw ConfigError("seed out of range");
    cfg.seed = s;
  } else if (key == "out") {
    cfg.output_path = v;
  } else if (key == "format") {
    if (v == "csv") {
      cfg.format = OutputFormat::csv;
    } else if (v == "json") {
      cfg.format = OutputFormat::json;
    } else {
      throw ConfigError("format: expected csv or json");
    }
  } else if (key == "epsilon") {
    std::vector<double> eps;
    for (const auto& p : split(v, ',')) {
      const double e = parse_real(p, "epsilon");
      if (e < 0.0) throw ConfigError("epsilon must be nonnegative");
      eps.push_back(e);
    }
    if (eps.empty()) throw ConfigError("epsilon: empty list");
    cfg.epsilons = eps;
  } else if (key == "ensemble") {
    const long n = parse_long(v, "ensemble");
    if (n < 1 || n > 1000000) throw ConfigError("ensemble must be in [1, 1e6]");
    cfg.ensemble = static_cast<int>(n);
  } else if (key == "distribution") {
    if (v == "symmetric") {
      cfg.distribution = NoiseDistribution::symmetric;
    } else if (v == "unit") {
      cfg.distribution = NoiseDistribution::unit;
    } else {
      throw ConfigError("distribution: expected symmetric or unit");
    }
  } else if (key == "m-list") {
    std::vector<long> ms;
    for (const auto& p : split(v, ',')) {
      if (const auto dots = p.find(".."); dots != std::string::npos) {
        const long lo = parse_long(p.substr(0, dots), "m-list");
        const long hi = parse_long(p.substr(dots + 2), "m-list");
        if (hi < lo || hi - lo > 100000) throw ConfigError("m-list: bad range '" + p + "'");
        for (long m = lo; m <= hi; ++m) ms.push_back(m);
      } else {
        ms.push_back(parse_long(p, "m-list"));
      }
    }
    for (long m : ms) {
      if (m < 1) throw ConfigError("m-list entries must be positive");
    }
    cfg.m_list = ms;
  } else if (key == "spin") {
    if (v == "up") {
      cfg.spin = SpinComponent::up;
    } else if (v == "down") {
      cfg.spin = SpinComponent::down;
    } else {
      throw ConfigError("spin: expected up or down");
    }
  } else if (key == "depth") {
    const long d = parse_long(v, "depth");
    if (d < 1 || d > 10000) throw ConfigError("depth must be in [1, 10000]");
    cfg.depth = static_cast<std::size_t>(d);
  } else if (key == "trials") {
    const long n = parse_long(v, "trials");
    if (n < 1 || n > 1000000) throw ConfigError("trials must be in [1, 1e6]");
    cfg.trials = static_cast<int>(n);
  } else if (key == "window") {
    const long w = parse_long(v, "window");
    if (w < 1) throw ConfigError("window must be positive");
    cfg.window = w;
  } else if (key == "stride") {
    const long s = parse_long(v, "stride");
    if (s < 1) throw ConfigError("stride must be positive");
    cfg.stride = s;
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

}  // namespace qwalk
