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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dtc/drive.hpp"
#include "dtc/evolver.hpp"
#include "dtc/models.hpp"

namespace dtc {

/// Invalid configuration. `field()` is the dotted path of the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class ModelKind { cold_atom, circuit };
enum class OutputKind { magnetization, overlap, spectrum, peaks };

std::string to_string(ModelKind kind);
std::string to_string(OutputKind kind);

/// Circuit section in table units: qubit frequencies in GHz, Ising couplings
/// in MHz (both divided by 2 pi), drive amplitude in rad/ns.
struct CircuitConfig {
  std::vector<double> omega_ghz;
  std::vector<double> jz_mhz;
  double amplitude = 0.0;
  bool symmetric = true;
  std::vector<double> omega_uncertainty_ghz;
  std::vector<double> jz_uncertainty_mhz;

  bool operator==(const CircuitConfig&) const = default;
};

struct ScheduleConfig {
  double period = 1.0;
  int n_periods = 64;
  PulseKind pulse = PulseKind::instantaneous;
  double epsilon = 0.0;
  double delta = 0.0;  ///< inhomogeneous-driving gradient
  int samples_per_period = 32;

  bool operator==(const ScheduleConfig&) const = default;
};

struct RunConfig {
  std::string name = "run";
  ModelKind model = ModelKind::cold_atom;
  std::optional<ColdAtomParams> cold_atom;
  std::optional<CircuitConfig> circuit;
  ScheduleConfig schedule;
  NoiseSpec noise{0.0, {NoiseChannel::relaxation}, true};
  std::string initial_state;  ///< spin pattern; empty means Neel
  std::vector<OutputKind> outputs{OutputKind::magnetization, OutputKind::overlap,
                                  OutputKind::spectrum, OutputKind::peaks};
  std::uint64_t seed = 0;  ///< reserved; the dynamics are deterministic
  std::string output_dir;  ///< empty means the CLI default

  int n_sites() const;
  bool wants(OutputKind kind) const;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;

  /// Physical circuit parameters in rad/ns (epsilon and zeta filled in).
  CircuitParams circuit_params() const;

  bool operator==(const RunConfig&) const = default;
};

nlohmann::ordered_json to_json(const RunConfig& config);
/// Strict parse: unknown keys and wrong types raise ConfigError.
RunConfig run_config_from_json(const nlohmann::json& j);

/// Reads a JSON file; parse errors carry line and column.
nlohmann::json read_json_file(const std::string& path);
nlohmann::json parse_json_text(const std::string& text, const std::string& origin);

/// Applies `key=value` with a dotted key path. The value is parsed as JSON
/// when possible and taken as a string otherwise.
void apply_override(nlohmann::json& j, const std::string& assignment);

struct SweepAxis {
  std::string name;  ///< g, kappa, epsilon, zeta or delta
  std::vector<double> values;

  bool operator==(const SweepAxis&) const = default;
};

struct SweepConfig {
  RunConfig base;
  std::vector<SweepAxis> axes;
  std::vector<std::string> reduce{"subharmonic_weight"};
  int threads = 0;  ///< 0 = hardware concurrency

  std::size_t grid_size() const;
  void validate() const;
};

inline constexpr std::size_t kMaxSweepPoints = 10'000;

/// Metric names accepted in SweepConfig::reduce.
const std::vector<std::string>& sweep_metric_names();

SweepConfig sweep_config_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const SweepConfig& config);

/// Sets one sweep axis on a copy of `base`.
RunConfig with_axis_value(const RunConfig& base, const std::string& axis, double value);

struct Preset {
  std::string name;
  std::string figure;
  std::string description;
  RunConfig config;
};

const std::vector<Preset>& presets();
/// Alternative names accepted by find_preset, mapped to registry names.
const std::vector<std::pair<std::string, std::string>>& preset_aliases();
/// Resolves names and aliases; throws ConfigError for unknown names.
const Preset& find_preset(const std::string& name);

}  // namespace dtc
