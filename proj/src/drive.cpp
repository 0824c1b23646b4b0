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

#include "dtc/drive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dtc {

namespace {

std::vector<double> ones_if_empty(std::span<const double> v, int n) {
  if (v.empty()) return std::vector<double>(static_cast<std::size_t>(n), 1.0);
  if (static_cast<int>(v.size()) != n) {
    throw std::invalid_argument("per-site vector has length " + std::to_string(v.size()) +
                                ", expected " + std::to_string(n));
  }
  return {v.begin(), v.end()};
}

}  // namespace

std::string to_string(PulseKind kind) {
  switch (kind) {
    case PulseKind::instantaneous:
      return "instantaneous";
    case PulseKind::finite_rwa:
      return "finite_rwa";
    case PulseKind::finite_lab:
      return "finite_lab";
  }
  return "?";
}

PulseKind parse_pulse_kind(const std::string& text) {
  if (text == "instantaneous") return PulseKind::instantaneous;
  if (text == "finite_rwa") return PulseKind::finite_rwa;
  if (text == "finite_lab") return PulseKind::finite_lab;
  throw std::invalid_argument("unknown pulse kind '" + text +
                              "' (expected instantaneous, finite_rwa or finite_lab)");
}

double PulseSpec::duration() const {
  return kind == PulseKind::instantaneous ? 0.0 : theta / amplitude;
}

std::vector<double> PulseSpec::scales(int n_sites) const {
  return ones_if_empty(per_site_scale, n_sites);
}

void PulseSpec::validate(int n_sites) const {
  if (!(theta > 0.0 && theta <= kPi)) {
    throw std::invalid_argument("pulse angle must lie in (0, pi]");
  }
  if (kind != PulseKind::instantaneous && !(amplitude > 0.0 && std::isfinite(amplitude))) {
    throw std::invalid_argument("finite pulses need a positive amplitude");
  }
  for (double s : scales(n_sites)) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw std::invalid_argument("per-site pulse scale entries must be positive");
    }
  }
  if (kind == PulseKind::finite_lab) {
    if (static_cast<int>(carrier.size()) != n_sites) {
      throw std::invalid_argument("finite_lab pulses need one carrier frequency per site");
    }
    if (!site_phases.empty() && static_cast<int>(site_phases.size()) != n_sites) {
      throw std::invalid_argument("site_phases must be empty or one per site");
    }
  }
}

std::vector<double> inhomogeneous_scale(int n_sites, double delta) {
  std::vector<double> s(static_cast<std::size_t>(n_sites));
  const double centre = 0.5 * (n_sites + 1);
  for (int i = 1; i <= n_sites; ++i) {
    s[static_cast<std::size_t>(i - 1)] = 1.0 + delta * (i - centre) / n_sites;
  }
  return s;
}

std::vector<double> PulseSchedule::sample_times() const {
  const int count = n_periods * sample_rate;
  std::vector<double> t(static_cast<std::size_t>(count) + 1);
  for (int k = 0; k <= count; ++k) {
    t[static_cast<std::size_t>(k)] = period * static_cast<double>(k) / sample_rate;
  }
  return t;
}

PulseSchedule make_schedule(double period, int n_periods, const PulseSpec& pulse,
                            int sample_rate) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw std::invalid_argument("driving period must be positive");
  }
  if (n_periods < 0) throw std::invalid_argument("n_periods must be non-negative");
  if (sample_rate < 1) throw std::invalid_argument("sample_rate must be at least 1");
  const double width = pulse.duration();
  if (pulse.kind != PulseKind::instantaneous && !(width < period)) {
    throw std::invalid_argument("pulse duration " + std::to_string(width) +
                                " does not fit in the period " + std::to_string(period));
  }
  PulseSchedule s;
  s.period = period;
  s.n_periods = n_periods;
  s.pulse = pulse;
  s.sample_rate = sample_rate;
  for (int n = 0; n < n_periods; ++n) {
    const double start = period * n;
    const double end = period * (n + 1);
    s.segments.push_back({Segment::Kind::free, start, (end - width) - start});
    s.segments.push_back({Segment::Kind::pulse, end - width, width});
  }
  return s;
}

SpinOperator global_pulse_operator(double theta, const HilbertSpace& space,
                                   std::span<const double> per_site_scale, RotationAxis axis) {
  if (!std::isfinite(theta)) throw std::invalid_argument("pulse angle must be finite");
  const std::vector<double> scale = ones_if_empty(per_site_scale, space.n_sites());
  const Matrix2 sigma = pauli(axis == RotationAxis::x ? Axis::x : Axis::y);
  std::vector<Matrix2> local;
  for (double s : scale) {
    const double half = 0.5 * theta * s;
    local.push_back(std::cos(half) * Matrix2::Identity() -
                    Complex(0.0, std::sin(half)) * sigma);
  }
  // U(r, c) = prod_i u_i(bit_i(r), bit_i(c)).
  const Index dim = space.dim();
  Matrix u(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) {
      Complex v(1.0, 0.0);
      for (int site = 1; site <= space.n_sites() && v != Complex(0.0, 0.0); ++site) {
        const int shift = space.bit_of(site);
        v *= local[static_cast<std::size_t>(site - 1)]((r >> shift) & 1, (c >> shift) & 1);
      }
      u(r, c) = v;
    }
  }
  return SpinOperator(space, std::move(u));
}

SpinOperator rwa_pulse_hamiltonian(double amplitude, const HilbertSpace& space,
                                   std::span<const double> per_site_scale) {
  const std::vector<double> scale = ones_if_empty(per_site_scale, space.n_sites());
  const Matrix2 sy = pauli(Axis::y);
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  for (int i = 1; i <= space.n_sites(); ++i) {
    m -= 0.5 * amplitude * scale[static_cast<std::size_t>(i - 1)] *
         embed_single(sy, i, space).matrix();
  }
  return SpinOperator(space, std::move(m));
}

DriveField::DriveField(const HilbertSpace& space, double amplitude,
                       std::vector<double> qubit_freq, std::vector<double> drive_freq,
                       std::vector<double> scale, std::vector<double> phase)
    : space_(space),
      amplitude_(amplitude),
      qubit_freq_(std::move(qubit_freq)),
      drive_freq_(std::move(drive_freq)),
      scale_(ones_if_empty(scale, space.n_sites())),
      phase_(phase.empty() ? std::vector<double>(static_cast<std::size_t>(space.n_sites()), 0.0)
                           : std::move(phase)) {
  const auto n = static_cast<std::size_t>(space.n_sites());
  if (qubit_freq_.size() != n || drive_freq_.size() != n || phase_.size() != n) {
    throw std::invalid_argument("drive field vectors must have one entry per site");
  }
  const Matrix2 sp = pauli(Axis::plus);
  for (int i = 1; i <= space.n_sites(); ++i) {
    raise_.push_back(embed_single(sp, i, space).matrix());
  }
}

DriveField DriveField::from_pulse(const HilbertSpace& space, const PulseSpec& pulse) {
  pulse.validate(space.n_sites());
  return DriveField(space, pulse.amplitude, pulse.carrier, pulse.carrier,
                    pulse.scales(space.n_sites()), pulse.site_phases);
}

Matrix DriveField::at(double t) const {
  const Complex i(0.0, 1.0);
  Matrix m = Matrix::Zero(space_.dim(), space_.dim());
  for (std::size_t k = 0; k < raise_.size(); ++k) {
    // Coefficient of sigma^+; the sigma^- coefficient is its conjugate.
    const Complex c = i * amplitude_ * scale_[k] * std::cos(drive_freq_[k] * t + phase_[k]) *
                      std::exp(i * (qubit_freq_[k] * t));
    m += c * raise_[k];
    m += std::conj(c) * raise_[k].adjoint();
  }
  return m;
}

double DriveField::norm_bound() const {
  double s = 0.0;
  for (double x : scale_) s += std::abs(amplitude_ * x);
  return s;
}

double DriveField::max_frequency() const {
  double w = 0.0;
  for (std::size_t k = 0; k < qubit_freq_.size(); ++k) {
    w = std::max(w, std::abs(qubit_freq_[k]) + std::abs(drive_freq_[k]));
  }
  return w;
}

SpinOperator drive_hamiltonian(double t, const CircuitParams& p,
                               std::span<const double> site_phases,
                               std::span<const double> per_site_scale) {
  const HilbertSpace space(p.n_sites());
  DriveField field(space, p.amplitude, p.omega_q, p.omega_q,
                   ones_if_empty(per_site_scale, p.n_sites()),
                   std::vector<double>(site_phases.begin(), site_phases.end()));
  return SpinOperator(space, field.at(t));
}

}  // namespace dtc
