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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dtc/config.hpp"
#include "dtc/observables.hpp"

namespace dtc {

/// Everything a run computes, independent of what gets written.
struct RunResult {
  std::vector<double> times;
  std::vector<double> magnetization;      ///< 1/2 <sum sigma^z>
  std::vector<double> raw_magnetization;  ///< <sum sigma^z>
  std::vector<double> overlap;            ///< overlap with the initial state
  std::vector<double> traces;             ///< Tr rho per sample; all ones for pure runs
  std::vector<std::size_t> stroboscopic_indices;
  std::optional<Spectrum> spectrum;
  std::optional<PeakReport> peaks;
  std::vector<std::string> warnings;
};

/// Builds the Hamiltonian, schedule and initial state and evolves them.
RunResult simulate(const RunConfig& config);

/// Stroboscopic samples m(n T_D) for n = 0 .. n_periods.
std::vector<double> stroboscopic_magnetization(const RunResult& result);

/// `%.17g`, with "nan" and "inf" spelled out.
std::string format_double(double x);

nlohmann::ordered_json peaks_to_json(const PeakReport& peaks);
nlohmann::ordered_json metadata_json(const RunConfig& config, const RunResult& result);

/// Writes timeseries.csv, spectrum.csv, peaks.json and metadata.json, each
/// only when the matching output is requested (metadata always).
/// Throws std::runtime_error when the directory cannot be written.
void write_outputs(const RunConfig& config, const RunResult& result,
                   const std::filesystem::path& out_dir);

RunResult run(const RunConfig& config, const std::filesystem::path& out_dir);

struct SweepRow {
  std::vector<double> axis_values;
  std::vector<double> metrics;  ///< ordered as SweepConfig::reduce
};

/// Value of a named scalar metric; NaN for a missing split separation.
double metric_value(const PeakReport& peaks, const std::string& name);

/// Row-major over the axes as listed (last axis fastest). Points run on
/// `threads` workers but rows come back in grid order.
std::vector<SweepRow> sweep(const SweepConfig& config);

void write_sweep_csv(const SweepConfig& config, const std::vector<SweepRow>& rows,
                     const std::filesystem::path& file);

}  // namespace dtc
