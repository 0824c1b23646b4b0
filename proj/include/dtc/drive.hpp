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

#include <span>
#include <string>
#include <vector>

#include "dtc/models.hpp"
#include "dtc/spin_algebra.hpp"

namespace dtc {

enum class PulseKind { instantaneous, finite_rwa, finite_lab };
enum class RotationAxis { x, y };

std::string to_string(PulseKind kind);
PulseKind parse_pulse_kind(const std::string& text);

/// One global rotation by `theta` = pi - epsilon.
///
/// Instantaneous pulses rotate about x. Finite pulses switch on the drive for
/// duration() = theta / amplitude; `finite_rwa` uses the resonant
/// rotating-wave term, `finite_lab` integrates the full drive including the
/// counter-rotating part and therefore needs the qubit frequencies in `carrier`.
struct PulseSpec {
  double theta = kPi;
  PulseKind kind = PulseKind::instantaneous;
  double amplitude = 0.0;
  std::vector<double> per_site_scale;  ///< empty means all ones
  std::vector<double> carrier;         ///< qubit (= drive) frequencies, finite_lab only
  std::vector<double> site_phases;     ///< drive phase offsets, finite_lab only

  /// Pulse length; zero for instantaneous pulses.
  double duration() const;
  void validate(int n_sites) const;
  std::vector<double> scales(int n_sites) const;

  bool operator==(const PulseSpec&) const = default;
};

/// Linear gradient 1 + delta (i - (N+1)/2) / N used for inhomogeneous driving.
std::vector<double> inhomogeneous_scale(int n_sites, double delta);

struct Segment {
  enum class Kind { free, pulse };
  Kind kind;
  double start;
  double duration;

  double end() const { return start + duration; }
};

/// Alternating free/pulse timeline. Period n ends with a pulse that finishes
/// exactly at t = n T_D; for finite pulses the preceding free segment is
/// shortened by the pulse length.
struct PulseSchedule {
  double period = 1.0;
  int n_periods = 0;
  PulseSpec pulse;
  std::vector<Segment> segments;
  int sample_rate = 32;  ///< samples per period

  double total_duration() const { return period * n_periods; }

  /// Uniform grid k T_D / sample_rate for k = 0 .. n_periods * sample_rate.
  /// Grid points at t = n T_D are taken right after the pulse.
  std::vector<double> sample_times() const;
};

PulseSchedule make_schedule(double period, int n_periods, const PulseSpec& pulse,
                            int sample_rate = 32);

/// prod_i exp(-i theta scale_i / 2 sigma_i^axis).
SpinOperator global_pulse_operator(double theta, const HilbertSpace& space,
                                   std::span<const double> per_site_scale = {},
                                   RotationAxis axis = RotationAxis::x);

/// Resonant rotating-wave drive term -(A/2) sum_i scale_i sigma_i^y.
SpinOperator rwa_pulse_hamiltonian(double amplitude, const HilbertSpace& space,
                                   std::span<const double> per_site_scale = {});

/// H_d(t) = i A sum_i s_i cos(w_i t + phi_i) (sigma_i^+ e^{i W_i t} - sigma_i^- e^{-i W_i t})
/// with qubit frequencies W_i and drive frequencies w_i. The exponentials
/// carry the qubit precession, so H_d is added to the rotating-frame Ising
/// Hamiltonian; its resonant part is rwa_pulse_hamiltonian().
class DriveField {
 public:
  DriveField(const HilbertSpace& space, double amplitude, std::vector<double> qubit_freq,
             std::vector<double> drive_freq, std::vector<double> scale,
             std::vector<double> phase);

  /// Resonant drive (w_i = W_i) from a PulseSpec of kind finite_lab.
  static DriveField from_pulse(const HilbertSpace& space, const PulseSpec& pulse);

  Matrix at(double t) const;

  /// Upper bound on ||H_d(t)|| over all t.
  double norm_bound() const;
  /// Fastest oscillation present in H_d(t).
  double max_frequency() const;

  const HilbertSpace& space() const { return space_; }

 private:
  HilbertSpace space_;
  double amplitude_;
  std::vector<double> qubit_freq_;
  std::vector<double> drive_freq_;
  std::vector<double> scale_;
  std::vector<double> phase_;
  std::vector<Matrix> raise_;
};

/// H_d(t) at resonance for the circuit. `site_phases` may be empty.
SpinOperator drive_hamiltonian(double t, const CircuitParams& p,
                               std::span<const double> site_phases = {},
                               std::span<const double> per_site_scale = {});

}  // namespace dtc
