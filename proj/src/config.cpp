// Copyright 2026 The dtcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dtc/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace dtc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string join_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

// Reads fields from one JSON object and rejects keys that were never asked for.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_, "expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key) && !j_.at(key).is_null(); }

  void skip(const std::string& key) { seen_.insert(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    return j_.at(key);
  }

  std::string where(const std::string& key) const { return join_path(path_, key); }

  double number(const std::string& key, std::optional<double> fallback = std::nullopt) {
    seen_.insert(key);
    if (!has(key)) return required(key, fallback);
    const json& v = j_.at(key);
    if (!v.is_number()) throw ConfigError(where(key), "expected a number");
    return v.get<double>();
  }

  int integer(const std::string& key, std::optional<int> fallback = std::nullopt) {
    seen_.insert(key);
    if (!has(key)) return required(key, fallback);
    const json& v = j_.at(key);
    if (!v.is_number_integer()) throw ConfigError(where(key), "expected an integer");
    return v.get<int>();
  }

  bool boolean(const std::string& key, std::optional<bool> fallback = std::nullopt) {
    seen_.insert(key);
    if (!has(key)) return required(key, fallback);
    const json& v = j_.at(key);
    if (!v.is_boolean()) throw ConfigError(where(key), "expected true or false");
    return v.get<bool>();
  }

  std::string string(const std::string& key, std::optional<std::string> fallback = std::nullopt) {
    seen_.insert(key);
    if (!has(key)) return required(key, fallback);
    const json& v = j_.at(key);
    if (!v.is_string()) throw ConfigError(where(key), "expected a string");
    return v.get<std::string>();
  }

  std::vector<double> numbers(const std::string& key,
                              std::optional<std::vector<double>> fallback = std::nullopt) {
    seen_.insert(key);
    if (!has(key)) return required(key, fallback);
    const json& v = j_.at(key);
    if (!v.is_array()) throw ConfigError(where(key), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) {
        throw ConfigError(where(key) + "[" + std::to_string(i) + "]", "expected a number");
      }
      out.push_back(v[i].get<double>());
    }
    return out;
  }

  std::vector<std::string> strings(const std::string& key,
                                   std::optional<std::vector<std::string>> fallback) {
    seen_.insert(key);
    if (!has(key)) return required(key, fallback);
    const json& v = j_.at(key);
    if (!v.is_array()) throw ConfigError(where(key), "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) {
        throw ConfigError(where(key) + "[" + std::to_string(i) + "]", "expected a string");
      }
      out.push_back(v[i].get<std::string>());
    }
    return out;
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.contains(key)) throw ConfigError(where(key), "unknown field");
    }
  }

 private:
  template <typename T>
  T required(const std::string& key, const std::optional<T>& fallback) const {
    if (!fallback) throw ConfigError(where(key), "missing required field");
    return *fallback;
  }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

template <typename E>
E parse_enum(const std::string& text, const std::string& field, E (*parser)(const std::string&)) {
  try {
    return parser(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, e.what());
  }
}

ModelKind parse_model(const std::string& s) {
  if (s == "cold_atom") return ModelKind::cold_atom;
  if (s == "circuit") return ModelKind::circuit;
  throw std::invalid_argument("unknown model '" + s + "' (expected cold_atom or circuit)");
}

OutputKind parse_output(const std::string& s) {
  if (s == "magnetization") return OutputKind::magnetization;
  if (s == "overlap") return OutputKind::overlap;
  if (s == "spectrum") return OutputKind::spectrum;
  if (s == "peaks") return OutputKind::peaks;
  throw std::invalid_argument("unknown output '" + s +
                              "' (expected magnetization, overlap, spectrum or peaks)");
}

ordered_json kappa_to_json(double kappa) {
  if (std::isinf(kappa)) return "inf";
  return kappa;
}

double kappa_from_json(const json& v, const std::string& field) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "Infinity") return kInfinity;
    throw ConfigError(field, "expected a number or \"inf\"");
  }
  if (!v.is_number()) throw ConfigError(field, "expected a number or \"inf\"");
  return v.get<double>();
}

void require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) throw ConfigError(field, message);
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

std::string to_string(ModelKind kind) {
  return kind == ModelKind::cold_atom ? "cold_atom" : "circuit";
}

std::string to_string(OutputKind kind) {
  switch (kind) {
    case OutputKind::magnetization:
      return "magnetization";
    case OutputKind::overlap:
      return "overlap";
    case OutputKind::spectrum:
      return "spectrum";
    case OutputKind::peaks:
      return "peaks";
  }
  return "?";
}

// --- RunConfig --------------------------------------------------------------

int RunConfig::n_sites() const {
  if (model == ModelKind::cold_atom && cold_atom) return cold_atom->n_sites;
  if (model == ModelKind::circuit && circuit) return static_cast<int>(circuit->omega_ghz.size());
  return 0;
}

bool RunConfig::wants(OutputKind kind) const {
  return std::find(outputs.begin(), outputs.end(), kind) != outputs.end();
}

CircuitParams RunConfig::circuit_params() const {
  if (!circuit) throw ConfigError("circuit", "circuit section missing");
  CircuitParams p;
  for (double x : circuit->omega_ghz) p.omega_q.push_back(ghz_to_angular(x));
  for (double x : circuit->jz_mhz) p.jz.push_back(mhz_to_angular(x));
  for (double x : circuit->omega_uncertainty_ghz) p.uncertainty.omega_q.push_back(ghz_to_angular(x));
  for (double x : circuit->jz_uncertainty_mhz) p.uncertainty.jz.push_back(mhz_to_angular(x));
  p.amplitude = circuit->amplitude;
  p.epsilon = schedule.epsilon;
  p.zeta = noise.zeta;
  p.symmetric = circuit->symmetric;
  return p;
}

void RunConfig::validate() const {
  require(!name.empty(), "name", "must not be empty");
  for (char c : name) {
    require(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.',
            "name", "may only contain letters, digits, '-', '_' and '.'");
  }
  if (model == ModelKind::cold_atom) {
    require(cold_atom.has_value(), "cold_atom", "section required for model cold_atom");
    require(!circuit.has_value(), "circuit", "must be absent for model cold_atom");
    const ColdAtomParams& p = *cold_atom;
    require(p.n_sites >= 1 && p.n_sites <= 12, "cold_atom.n_sites", "must be in 1..12");
    require(p.g > 0.0 && std::isfinite(p.g), "cold_atom.g", "must be positive and finite");
    require(p.kappa > 0.0, "cold_atom.kappa", "must be positive or \"inf\"");
    require(static_cast<int>(p.alpha.size()) == p.n_sites - 1, "cold_atom.alpha",
            "must have n_sites - 1 entries");
    require(all_finite(p.alpha), "cold_atom.alpha", "entries must be finite");
  } else {
    require(circuit.has_value(), "circuit", "section required for model circuit");
    require(!cold_atom.has_value(), "cold_atom", "must be absent for model circuit");
    const CircuitConfig& c = *circuit;
    require(!c.omega_ghz.empty() && c.omega_ghz.size() <= 12, "circuit.omega_ghz",
            "must have 1..12 entries");
    require(all_finite(c.omega_ghz), "circuit.omega_ghz", "entries must be finite");
    require(c.jz_mhz.size() + 1 == c.omega_ghz.size(), "circuit.jz_mhz",
            "must have one entry fewer than omega_ghz");
    require(all_finite(c.jz_mhz), "circuit.jz_mhz", "entries must be finite");
    require(std::isfinite(c.amplitude) && c.amplitude >= 0.0, "circuit.amplitude",
            "must be finite and non-negative");
    if (c.symmetric) {
      const auto& w = c.omega_ghz;
      const auto& j = c.jz_mhz;
      require(std::equal(w.begin(), w.end(), w.rbegin()), "circuit.omega_ghz",
              "not mirror symmetric while circuit.symmetric is true");
      require(std::equal(j.begin(), j.end(), j.rbegin()), "circuit.jz_mhz",
              "not mirror symmetric while circuit.symmetric is true");
    }
  }

  const ScheduleConfig& s = schedule;
  const int n = n_sites();
  require(s.period > 0.0 && std::isfinite(s.period), "schedule.period", "must be positive");
  require(s.n_periods >= 1, "schedule.n_periods", "must be at least 1");
  if (wants(OutputKind::spectrum) || wants(OutputKind::peaks)) {
    require(s.n_periods >= 8, "schedule.n_periods", "must be at least 8 for spectral outputs");
  }
  require(s.samples_per_period >= 2 && s.samples_per_period <= 4096,
          "schedule.samples_per_period", "must be in 2..4096");
  require(s.epsilon >= 0.0 && s.epsilon < kPi, "schedule.epsilon", "must lie in [0, pi)");
  require(std::isfinite(s.delta), "schedule.delta", "must be finite");
  for (double x : inhomogeneous_scale(n, s.delta)) {
    require(x > 0.0, "schedule.delta", "gives a non-positive pulse scale");
  }
  if (s.pulse != PulseKind::instantaneous) {
    require(model == ModelKind::circuit, "schedule.pulse",
            "finite pulses need the circuit model (drive amplitude and qubit frequencies)");
    require(circuit->amplitude > 0.0, "circuit.amplitude", "must be positive for finite pulses");
    require((kPi - s.epsilon) / circuit->amplitude < s.period, "schedule.pulse",
            "pulse duration (pi - epsilon)/A does not fit in the period");
  }

  require(std::isfinite(noise.zeta) && noise.zeta >= 0.0, "noise.zeta",
          "must be finite and non-negative");
  require(!noise.channels.empty(), "noise.channels", "must not be empty");
  {
    std::set<NoiseChannel> unique(noise.channels.begin(), noise.channels.end());
    require(unique.size() == noise.channels.size(), "noise.channels", "duplicate channel");
  }

  if (!initial_state.empty()) {
    std::vector<Spin> pattern;
    try {
      pattern = parse_spin_pattern(initial_state);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("initial_state", e.what());
    }
    require(static_cast<int>(pattern.size()) == n, "initial_state",
            "length must equal the number of sites");
  }

  require(!outputs.empty(), "outputs", "must list at least one output");
  {
    std::set<OutputKind> unique(outputs.begin(), outputs.end());
    require(unique.size() == outputs.size(), "outputs", "duplicate entry");
  }
}

ordered_json to_json(const RunConfig& c) {
  ordered_json j;
  j["name"] = c.name;
  j["model"] = to_string(c.model);
  if (c.cold_atom) {
    const ColdAtomParams& p = *c.cold_atom;
    j["cold_atom"] = {{"n_sites", p.n_sites},
                      {"g", p.g},
                      {"kappa", kappa_to_json(p.kappa)},
                      {"alpha", p.alpha}};
  }
  if (c.circuit) {
    const CircuitConfig& p = *c.circuit;
    ordered_json cj = {{"omega_ghz", p.omega_ghz},
                       {"jz_mhz", p.jz_mhz},
                       {"amplitude", p.amplitude},
                       {"symmetric", p.symmetric}};
    if (!p.omega_uncertainty_ghz.empty()) cj["omega_uncertainty_ghz"] = p.omega_uncertainty_ghz;
    if (!p.jz_uncertainty_mhz.empty()) cj["jz_uncertainty_mhz"] = p.jz_uncertainty_mhz;
    j["circuit"] = cj;
  }
  j["schedule"] = {{"period", c.schedule.period},
                   {"n_periods", c.schedule.n_periods},
                   {"pulse", to_string(c.schedule.pulse)},
                   {"epsilon", c.schedule.epsilon},
                   {"delta", c.schedule.delta},
                   {"samples_per_period", c.schedule.samples_per_period}};
  std::vector<std::string> channels;
  for (NoiseChannel ch : c.noise.channels) channels.push_back(to_string(ch));
  j["noise"] = {{"zeta", c.noise.zeta}, {"channels", channels}, {"per_site", c.noise.per_site}};
  j["initial_state"] = c.initial_state;
  std::vector<std::string> outputs;
  for (OutputKind o : c.outputs) outputs.push_back(to_string(o));
  j["outputs"] = outputs;
  j["seed"] = c.seed;
  if (!c.output_dir.empty()) j["output_dir"] = c.output_dir;
  return j;
}

RunConfig run_config_from_json(const json& j) {
  ObjectReader r(j, "");
  RunConfig c;
  c.name = r.string("name", std::string("run"));
  c.model = parse_enum<ModelKind>(r.string("model"), "model", parse_model);

  if (r.has("cold_atom")) {
    ObjectReader a(r.raw("cold_atom"), "cold_atom");
    ColdAtomParams p;
    p.n_sites = a.integer("n_sites", 5);
    p.g = a.number("g");
    a.skip("kappa");
    p.kappa = a.has("kappa") ? kappa_from_json(a.raw("kappa"), "cold_atom.kappa") : kInfinity;
    if (a.has("alpha")) {
      p.alpha = a.numbers("alpha");
    } else {
      a.numbers("alpha", std::vector<double>{});
      try {
        p.alpha = harmonic_trap_alpha(p.n_sites);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("cold_atom.alpha", e.what());
      }
    }
    a.finish();
    c.cold_atom = p;
  } else {
    r.skip("cold_atom");
  }

  r.skip("circuit");
  if (r.has("circuit")) {
    ObjectReader a(r.raw("circuit"), "circuit");
    CircuitConfig p;
    p.omega_ghz = a.numbers("omega_ghz");
    p.jz_mhz = a.numbers("jz_mhz");
    p.amplitude = a.number("amplitude");
    p.symmetric = a.boolean("symmetric", true);
    p.omega_uncertainty_ghz = a.numbers("omega_uncertainty_ghz", std::vector<double>{});
    p.jz_uncertainty_mhz = a.numbers("jz_uncertainty_mhz", std::vector<double>{});
    a.finish();
    c.circuit = p;
  }

  r.skip("schedule");
  if (r.has("schedule")) {
    ObjectReader s(r.raw("schedule"), "schedule");
    c.schedule.period = s.number("period", 1.0);
    c.schedule.n_periods = s.integer("n_periods", 64);
    c.schedule.pulse = parse_enum<PulseKind>(s.string("pulse", std::string("instantaneous")),
                                             "schedule.pulse", parse_pulse_kind);
    c.schedule.epsilon = s.number("epsilon", 0.0);
    c.schedule.delta = s.number("delta", 0.0);
    c.schedule.samples_per_period = s.integer("samples_per_period", 32);
    s.finish();
  }

  r.skip("noise");
  if (r.has("noise")) {
    ObjectReader n(r.raw("noise"), "noise");
    c.noise.zeta = n.number("zeta", 0.0);
    c.noise.channels.clear();
    for (const std::string& ch : n.strings("channels", std::vector<std::string>{"relaxation"})) {
      c.noise.channels.push_back(
          parse_enum<NoiseChannel>(ch, "noise.channels", parse_noise_channel));
    }
    c.noise.per_site = n.boolean("per_site", true);
    n.finish();
  }

  c.initial_state = r.string("initial_state", std::string());
  r.skip("outputs");
  if (r.has("outputs")) {
    c.outputs.clear();
    for (const std::string& o : r.strings("outputs", std::nullopt)) {
      c.outputs.push_back(parse_enum<OutputKind>(o, "outputs", parse_output));
    }
  }
  r.skip("seed");
  if (r.has("seed")) {
    const json& v = r.raw("seed");
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      throw ConfigError("seed", "expected a non-negative integer");
    }
    c.seed = v.get<std::uint64_t>();
  }
  c.output_dir = r.string("output_dir", std::string());
  r.finish();
  c.validate();
  return c;
}

// --- JSON text helpers ------------------------------------------------------

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Locate the byte offset reported by the parser as line:column.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError("", origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                              ": invalid JSON: " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

void apply_override(json& j, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("", "override '" + assignment + "' is not of the form key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;

  json* node = &j;
  std::size_t begin = 0;
  while (true) {
    const auto dot = key.find('.', begin);
    const std::string part = key.substr(begin, dot == std::string::npos ? std::string::npos
                                                                         : dot - begin);
    if (part.empty()) throw ConfigError(key, "empty path component in override");
    if (!node->is_object()) throw ConfigError(key, "override path crosses a non-object");
    if (dot == std::string::npos) {
      (*node)[part] = value;
      return;
    }
    node = &(*node)[part];
    if (node->is_null()) *node = json::object();
    begin = dot + 1;
  }
}

// --- sweeps -----------------------------------------------------------------

const std::vector<std::string>& sweep_metric_names() {
  static const std::vector<std::string> names = {
      "subharmonic_weight", "peak_frequency", "peak_height", "split_detected",
      "split_separation"};
  return names;
}

std::size_t SweepConfig::grid_size() const {
  std::size_t n = 1;
  for (const SweepAxis& a : axes) n *= a.values.size();
  return n;
}

RunConfig with_axis_value(const RunConfig& base, const std::string& axis, double value) {
  RunConfig c = base;
  if (axis == "g" || axis == "kappa") {
    if (!c.cold_atom) throw ConfigError("axes", "axis '" + axis + "' needs the cold_atom model");
    (axis == "g" ? c.cold_atom->g : c.cold_atom->kappa) = value;
  } else if (axis == "epsilon") {
    c.schedule.epsilon = value;
  } else if (axis == "zeta") {
    c.noise.zeta = value;
  } else if (axis == "delta") {
    c.schedule.delta = value;
  } else {
    throw ConfigError("axes", "unknown axis '" + axis +
                                  "' (expected g, kappa, epsilon, zeta or delta)");
  }
  return c;
}

void SweepConfig::validate() const {
  base.validate();
  require(base.schedule.n_periods >= 8, "base.schedule.n_periods",
          "must be at least 8 so every point has a spectrum");
  require(!axes.empty() && axes.size() <= 2, "axes", "must have one or two entries");
  std::set<std::string> names;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const std::string field = "axes[" + std::to_string(i) + "]";
    require(names.insert(axes[i].name).second, field + ".name", "duplicate axis");
    require(!axes[i].values.empty(), field + ".values", "must not be empty");
    require(all_finite(axes[i].values) || axes[i].name == "kappa", field + ".values",
            "must be finite");
    for (double v : axes[i].values) {
      // Validates the axis name and the resulting configuration.
      RunConfig probe = with_axis_value(base, axes[i].name, v);
      try {
        probe.validate();
      } catch (const ConfigError& e) {
        throw ConfigError(field + ".values", "value " + std::to_string(v) + " invalid: " +
                                                 e.what());
      }
    }
  }
  require(grid_size() <= kMaxSweepPoints, "axes",
          "grid has " + std::to_string(grid_size()) + " points; the limit is 10000");
  require(!reduce.empty(), "reduce", "must list at least one metric");
  for (const std::string& m : reduce) {
    const auto& known = sweep_metric_names();
    require(std::find(known.begin(), known.end(), m) != known.end(), "reduce",
            "unknown metric '" + m + "'");
  }
  require(threads >= 0, "threads", "must be non-negative");
}

SweepConfig sweep_config_from_json(const json& j) {
  ObjectReader r(j, "");
  SweepConfig s;
  if (r.has("base") && r.has("base_preset")) {
    throw ConfigError("base", "give either base or base_preset, not both");
  }
  if (r.has("base_preset")) {
    s.base = find_preset(r.string("base_preset")).config;
    r.skip("base");
  } else {
    s.base = run_config_from_json(r.raw("base"));
    r.skip("base_preset");
  }
  const json& axes = r.raw("axes");
  if (!axes.is_array()) throw ConfigError("axes", "expected an array");
  for (std::size_t i = 0; i < axes.size(); ++i) {
    ObjectReader a(axes[i], "axes[" + std::to_string(i) + "]");
    SweepAxis axis;
    axis.name = a.string("name");
    if (axis.name == "kappa") {
      const json& vals = a.raw("values");
      if (!vals.is_array()) throw ConfigError(a.where("values"), "expected an array");
      for (std::size_t k = 0; k < vals.size(); ++k) {
        axis.values.push_back(
            kappa_from_json(vals[k], a.where("values") + "[" + std::to_string(k) + "]"));
      }
    } else {
      axis.values = a.numbers("values");
    }
    a.finish();
    s.axes.push_back(axis);
  }
  s.reduce = r.strings("reduce", sweep_metric_names());
  s.threads = r.integer("threads", 0);
  r.finish();
  s.validate();
  return s;
}

ordered_json to_json(const SweepConfig& s) {
  ordered_json j;
  j["base"] = to_json(s.base);
  ordered_json axes = ordered_json::array();
  for (const SweepAxis& a : s.axes) {
    ordered_json values = ordered_json::array();
    for (double v : a.values) {
      if (a.name == "kappa") {
        values.push_back(kappa_to_json(v));
      } else {
        values.push_back(v);
      }
    }
    axes.push_back({{"name", a.name}, {"values", values}});
  }
  j["axes"] = axes;
  j["reduce"] = s.reduce;
  j["threads"] = s.threads;
  return j;
}

// --- presets ----------------------------------------------------------------

namespace {

RunConfig cold_atom_preset(const std::string& name, double kappa, double epsilon) {
  RunConfig c;
  c.name = name;
  c.model = ModelKind::cold_atom;
  c.cold_atom = ColdAtomParams{5, 10.0, kappa, harmonic_trap_alpha(5)};
  c.schedule = ScheduleConfig{1.0, 64, PulseKind::instantaneous, epsilon, 0.0, 32};
  return c;
}

RunConfig circuit_preset(const std::string& name, bool interacting, bool inhomogeneous,
                         bool noisy) {
  const CircuitParams table = reference_circuit(true);
  RunConfig c;
  c.name = name;
  c.model = ModelKind::circuit;
  CircuitConfig cc;
  cc.omega_ghz = mirror_complete({17.0, 35.6, 43.361}, 5);
  cc.jz_mhz = interacting ? mirror_complete({168.9, -29.07}, 4) : std::vector<double>(4, 0.0);
  cc.amplitude = table.amplitude;
  cc.symmetric = true;
  cc.omega_uncertainty_ghz = mirror_complete({0.048, 0.21, 0.048}, 5);
  cc.jz_uncertainty_mhz = mirror_complete({1.1, 0.18}, 4);
  c.circuit = cc;
  c.schedule =
      ScheduleConfig{10.0, 64, PulseKind::finite_rwa, 0.1 * kPi, inhomogeneous ? 0.1 : 0.0, 32};
  c.noise = NoiseSpec{noisy ? 0.05 : 0.0, {NoiseChannel::relaxation}, true};
  return c;
}

std::vector<Preset> build_presets() {
  std::vector<Preset> out;
  out.push_back({"fig2-perfect", "Fig. 2 a-c",
                 "cold atoms, fermionic limit (kappa=inf), g=10, perfect pi pulses",
                 cold_atom_preset("fig2-perfect", kInfinity, 0.0)});
  out.push_back({"fig2-fermion-imperfect", "Fig. 2 d-f",
                 "cold atoms, fermionic limit (kappa=inf), g=10, epsilon=0.1 pi",
                 cold_atom_preset("fig2-fermion-imperfect", kInfinity, 0.1 * kPi)});
  out.push_back({"fig2-boson-imperfect", "Fig. 2 g-i",
                 "cold atoms, bosons with kappa=0.1, g=10, epsilon=0.1 pi",
                 cold_atom_preset("fig2-boson-imperfect", 0.1, 0.1 * kPi)});
  for (bool interacting : {false, true}) {
    for (bool inhomogeneous : {false, true}) {
      for (bool noisy : {false, true}) {
        const std::string name = std::string("fig4-") +
                                 (interacting ? "interacting" : "noninteracting") + "-" +
                                 (inhomogeneous ? "inhomogeneous" : "ideal") + "-" +
                                 (noisy ? "noisy" : "lossless");
        const char panel = interacting ? (inhomogeneous ? 'h' : 'g') : (inhomogeneous ? 'e' : 'd');
        const std::string figure = std::string("Fig. 4 ") + panel + ", " +
                                   (noisy ? "coloured curve" : "grey curve");
        const std::string description =
            std::string("5-qubit circuit, ") +
            (interacting ? "tabulated Ising couplings" : "J=0") +
            ", finite RWA pulses, epsilon=0.1 pi" +
            (inhomogeneous ? ", drive gradient delta=0.1" : "") +
            (noisy ? ", relaxation zeta=0.05/ns" : ", no losses");
        out.push_back({name, figure, description,
                       circuit_preset(name, interacting, inhomogeneous, noisy)});
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> registry = build_presets();
  return registry;
}

const std::vector<std::pair<std::string, std::string>>& preset_aliases() {
  static const std::vector<std::pair<std::string, std::string>> aliases = {
      {"fig2-fermion", "fig2-fermion-imperfect"},
      {"fig2-boson", "fig2-boson-imperfect"},
      {"fig4-noninteracting", "fig4-noninteracting-ideal-lossless"},
      {"fig4-noninteracting-noisy", "fig4-noninteracting-ideal-noisy"},
      {"fig4-interacting", "fig4-interacting-ideal-lossless"},
      {"fig4-interacting-noisy", "fig4-interacting-ideal-noisy"},
  };
  return aliases;
}

const Preset& find_preset(const std::string& name) {
  std::string target = name;
  for (const auto& [alias, real] : preset_aliases()) {
    if (alias == name) target = real;
  }
  for (const Preset& p : presets()) {
    if (p.name == target) return p;
  }
  throw ConfigError("preset", "unknown preset '" + name + "' (see list-presets)");
}

}  // namespace dtc
