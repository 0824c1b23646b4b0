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

#include <optional>
#include <vector>

#include "dtc/evolver.hpp"
#include "dtc/spin_algebra.hpp"

namespace dtc {

/// m = 1/2 <sum_i sigma_i^z>, so the five-site Neel state reads +0.5.
double magnetization(const StateVector& psi);
double magnetization(const DensityMatrix& rho);

/// <sum_i sigma_i^z> without the 1/2.
double raw_magnetization(const StateVector& psi);
double raw_magnetization(const DensityMatrix& rho);

/// F = |<psi0|psi>|^2, or <psi0|rho|psi0> for mixed states.
double overlap(const StateVector& psi0, const StateVector& psi);
double overlap(const StateVector& psi0, const DensityMatrix& rho);

struct TimeSeries {
  std::vector<double> times;
  std::vector<double> values;
  double driving_period = 1.0;

  void validate() const;
  bool is_uniform() const;
};

/// One-sided spectral density |dt sum_j m_j exp(-2 pi i f t_j)|^2 on the DFT
/// grid, with frequencies in units of f_D = 1 / T_D.
struct Spectrum {
  std::vector<double> frequencies;
  std::vector<double> density;
  double bin_width = 0.0;  ///< in units of f_D
  double sample_interval = 0.0;
  std::size_t n_points = 0;  ///< transform length (after padding)
};

struct PeakReport {
  double peak_frequency = 0.0;
  double peak_height = 0.0;
  double subharmonic_weight = 0.0;
  bool split_detected = false;
  std::optional<double> split_separation;

  bool operator==(const PeakReport&) const = default;
};

/// Fixed peak criteria.
namespace peak_criteria {
inline constexpr double kWindowHalfWidth = 1.0 / 40.0;  ///< around f_D/2, units of f_D
inline constexpr double kSplitBandLow = 0.3;
inline constexpr double kSplitBandHigh = 0.7;
inline constexpr double kMinSplitSeparation = 1.0 / 20.0;
inline constexpr double kSplitContrast = 5.0;
}  // namespace peak_criteria

/// Linear interpolation onto t0 + k T_D / samples_per_period, k = 0 .. K-1,
/// where K covers [t0, t_end) (the end point is dropped when it falls on the grid).
TimeSeries resample_uniform(const TimeSeries& series, int samples_per_period);

/// Rectangular-window DFT. Non-uniform input is first resampled at 32
/// samples per period; lengths that are not a power of two are zero-padded
/// to the next one. Throws on fewer than 16 samples.
Spectrum spectral_density(const TimeSeries& series);

/// Subharmonic weight is the density within f_D/40 of f_D/2 over all
/// density in (0, f_D]. A split is two local maxima in (0.3, 0.7) f_D more
/// than f_D/20 apart, each above 5x the density at exactly f_D/2.
PeakReport subharmonic_metrics(const Spectrum& spectrum, double f_d = 1.0);

/// Density at an arbitrary frequency by linear interpolation between bins.
double density_at(const Spectrum& spectrum, double frequency);

template <typename State>
TimeSeries magnetization_series(const Trajectory<State>& traj, double driving_period) {
  TimeSeries s;
  s.times = traj.times;
  s.driving_period = driving_period;
  s.values.reserve(traj.states.size());
  for (const State& x : traj.states) s.values.push_back(magnetization(x));
  return s;
}

}  // namespace dtc
