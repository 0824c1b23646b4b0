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

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dtc/drive.hpp"
#include "dtc/spin_algebra.hpp"

namespace dtc {

struct Propagator {
  Matrix unitary;
  double duration = 0.0;
};

/// exp(-i H dt) from the eigendecomposition of H. Throws on non-hermitian H.
Propagator propagator(const SpinOperator& h, double dt);

/// Cached eigendecomposition of one Hamiltonian; applies exp(-i H tau) to
/// states and density matrices for any tau.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const Matrix& hermitian);

  void apply(Vector& psi, double tau) const;
  Matrix unitary(double tau) const;
  double spectral_radius() const;

 private:
  Matrix vectors_;
  Eigen::VectorXd values_;
};

enum class NoiseChannel { relaxation, dephasing };

std::string to_string(NoiseChannel channel);
NoiseChannel parse_noise_channel(const std::string& text);

/// Relaxation uses L = sqrt(zeta) sigma^-, dephasing L = sqrt(zeta/2) sigma^z.
/// With per_site (default) every site gets its own operator; otherwise one
/// collective operator sums the site terms.
struct NoiseSpec {
  double zeta = 0.0;
  std::vector<NoiseChannel> channels{NoiseChannel::relaxation};
  bool per_site = true;

  void validate() const;
  bool operator==(const NoiseSpec&) const = default;
};

/// Dense jump operators implied by a NoiseSpec.
std::vector<Matrix> jump_operators(const NoiseSpec& noise, const HilbertSpace& space);

template <typename State>
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<std::size_t> stroboscopic_indices;  ///< samples at t = n T_D (after the pulse)
};

using PureTrajectory = Trajectory<StateVector>;
using MixedTrajectory = Trajectory<DensityMatrix>;

/// Exact propagation between pulses, exact pulse unitaries for instantaneous
/// and rotating-wave pulses, fourth-order Magnus for lab-frame pulses.
PureTrajectory evolve_closed(const StateVector& psi0, const SpinOperator& h,
                             const PulseSchedule& schedule);

struct LindbladOptions {
  /// Extra cap on the step; 0 derives it from the schedule and noise only.
  double max_step = 0.0;
  /// Steps satisfy step * (||H|| + drive frequency) <= this value.
  double phase_per_step = 0.05;
};

/// Fixed-step RK4 integration of the Lindblad equation through a schedule.
/// Throws std::runtime_error if the final state loses positivity or trace.
MixedTrajectory evolve_lindblad(const DensityMatrix& rho0, const SpinOperator& h,
                                const NoiseSpec& noise, const PulseSchedule& schedule,
                                const LindbladOptions& options = {});

/// Step size used by evolve_lindblad for free evolution.
double lindblad_base_step(const PulseSchedule& schedule, const NoiseSpec& noise);

using TimeDependentHamiltonian = std::function<Matrix(double)>;

struct TimeSpan {
  double start = 0.0;
  double end = 0.0;
};

/// Fourth-order Magnus integration of H_static + H_t(t) with steps <= dt_max,
/// sampled at `n_samples` + 1 equally spaced times across `span`.
PureTrajectory evolve_timedep(const StateVector& psi0, const SpinOperator& h_static,
                              const TimeDependentHamiltonian& h_t, TimeSpan span,
                              double dt_max, int n_samples = 1);

}  // namespace dtc
