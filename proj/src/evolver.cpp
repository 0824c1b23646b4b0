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

#include "dtc/evolver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace dtc {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kMagnusPhasePerStep = 0.1;
constexpr double kLindbladTraceTolerance = 1e-6;
constexpr double kLindbladPositivityTolerance = 1e-6;
constexpr long kMaxStepsPerInterval = 50'000'000;

// One entry of the flattened timeline: evolve within a segment, apply an
// instantaneous pulse, or record a sample.
struct PlanStep {
  enum class Kind { evolve, kick, sample };
  Kind kind;
  std::size_t segment = 0;
  double t0 = 0.0;
  double t1 = 0.0;
  std::size_t sample = 0;
};

std::vector<PlanStep> plan_timeline(const PulseSchedule& schedule,
                                    const std::vector<double>& samples) {
  const double eps = 1e-9 * std::max(1.0, schedule.period);
  for (std::size_t k = 1; k < samples.size(); ++k) {
    if (!(samples[k] > samples[k - 1])) {
      throw std::invalid_argument("sample times must be strictly increasing");
    }
  }
  std::vector<PlanStep> steps;
  std::size_t j = 0;
  for (std::size_t s = 0; s < schedule.segments.size(); ++s) {
    const Segment& seg = schedule.segments[s];
    if (seg.duration < 0.0) throw std::invalid_argument("negative segment duration");
    // Samples before this segment (only possible before t = 0).
    while (j < samples.size() && samples[j] < seg.start - eps) {
      throw std::invalid_argument("sample time precedes the schedule");
    }
    if (seg.kind == Segment::Kind::pulse && seg.duration == 0.0) {
      steps.push_back({PlanStep::Kind::kick, s, seg.start, seg.start, 0});
      continue;
    }
    double cur = seg.start;
    while (j < samples.size() && samples[j] < seg.end() - eps) {
      if (samples[j] > cur + eps) {
        steps.push_back({PlanStep::Kind::evolve, s, cur, samples[j], 0});
        cur = samples[j];
      }
      steps.push_back({PlanStep::Kind::sample, s, cur, cur, j});
      ++j;
    }
    if (seg.end() > cur + eps) {
      steps.push_back({PlanStep::Kind::evolve, s, cur, seg.end(), 0});
    }
  }
  const double end = schedule.segments.empty() ? 0.0 : schedule.segments.back().end();
  while (j < samples.size()) {
    if (samples[j] > end + eps) {
      throw std::invalid_argument("sample time beyond the end of the schedule");
    }
    steps.push_back({PlanStep::Kind::sample, schedule.segments.size(), samples[j], samples[j], j});
    ++j;
  }
  return steps;
}

std::vector<std::size_t> stroboscopic(const PulseSchedule& schedule, std::size_t n_samples) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n_samples; k += static_cast<std::size_t>(schedule.sample_rate)) {
    out.push_back(k);
  }
  return out;
}

void apply_hermitian_exponential(Vector& psi, const Matrix& k) {
  // psi <- exp(-i K) psi for hermitian K.
  Eigen::SelfAdjointEigenSolver<Matrix> solver(k);
  const Vector phases = (solver.eigenvalues().array() * Complex(0.0, -1.0)).exp().matrix();
  psi = solver.eigenvectors() * (phases.asDiagonal() * (solver.eigenvectors().adjoint() * psi));
}

void magnus4_step(Vector& psi, const Matrix& h_static, const TimeDependentHamiltonian& h_t,
                  double t, double h) {
  const double c1 = 0.5 - kSqrt3 / 6.0;
  const double c2 = 0.5 + kSqrt3 / 6.0;
  const Matrix h1 = h_static + h_t(t + c1 * h);
  const Matrix h2 = h_static + h_t(t + c2 * h);
  Matrix k = (0.5 * h) * (h1 + h2);
  k -= Complex(0.0, kSqrt3 * h * h / 12.0) * (h2 * h1 - h1 * h2);
  apply_hermitian_exponential(psi, k);
}

long substeps(double span, double max_step) {
  if (!(max_step > 0.0) || !std::isfinite(max_step)) {
    throw std::runtime_error("step size underflow");
  }
  const double n = std::ceil(span / max_step - 1e-12);
  if (n > static_cast<double>(kMaxStepsPerInterval)) {
    throw std::runtime_error("step size underflow: " + std::to_string(n) +
                             " steps requested for one interval");
  }
  return std::max<long>(1, static_cast<long>(n));
}

void magnus_interval(Vector& psi, const Matrix& h_static, const TimeDependentHamiltonian& h_t,
                     double t0, double t1, double max_step) {
  const long n = substeps(t1 - t0, max_step);
  const double h = (t1 - t0) / static_cast<double>(n);
  for (long k = 0; k < n; ++k) {
    magnus4_step(psi, h_static, h_t, t0 + static_cast<double>(k) * h, h);
  }
}

void check_schedule(const PulseSchedule& schedule, const HilbertSpace& space) {
  schedule.pulse.validate(space.n_sites());
  const double eps = 1e-9 * std::max(1.0, schedule.period);
  double t = 0.0;
  for (const Segment& s : schedule.segments) {
    if (std::abs(s.start - t) > eps) throw std::invalid_argument("schedule has gaps");
    t = s.end();
  }
}

}  // namespace

// --- propagators ------------------------------------------------------------

SpectralPropagator::SpectralPropagator(const Matrix& hermitian) {
  if (!is_hermitian(hermitian, tol::kHermitian * std::max(1.0, max_abs(hermitian)))) {
    throw std::invalid_argument("propagator requires a hermitian Hamiltonian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  vectors_ = solver.eigenvectors();
  values_ = solver.eigenvalues();
}

void SpectralPropagator::apply(Vector& psi, double tau) const {
  const Vector phases = (values_.array() * Complex(0.0, -tau)).exp().matrix();
  psi = vectors_ * (phases.asDiagonal() * (vectors_.adjoint() * psi));
}

Matrix SpectralPropagator::unitary(double tau) const {
  const Vector phases = (values_.array() * Complex(0.0, -tau)).exp().matrix();
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

double SpectralPropagator::spectral_radius() const {
  return values_.size() == 0 ? 0.0 : values_.cwiseAbs().maxCoeff();
}

Propagator propagator(const SpinOperator& h, double dt) {
  if (!h.is_hermitian()) {
    throw std::invalid_argument("propagator requires a hermitian Hamiltonian");
  }
  if (dt == 0.0) {
    return {Matrix::Identity(h.dim(), h.dim()), 0.0};
  }
  return {SpectralPropagator(h.matrix()).unitary(dt), dt};
}

// --- noise ------------------------------------------------------------------

std::string to_string(NoiseChannel channel) {
  return channel == NoiseChannel::relaxation ? "relaxation" : "dephasing";
}

NoiseChannel parse_noise_channel(const std::string& text) {
  if (text == "relaxation") return NoiseChannel::relaxation;
  if (text == "dephasing") return NoiseChannel::dephasing;
  throw std::invalid_argument("unknown noise channel '" + text +
                              "' (expected relaxation or dephasing)");
}

void NoiseSpec::validate() const {
  if (!std::isfinite(zeta) || zeta < 0.0) {
    throw std::invalid_argument("noise rate zeta must be finite and non-negative");
  }
}

std::vector<Matrix> jump_operators(const NoiseSpec& noise, const HilbertSpace& space) {
  noise.validate();
  std::vector<Matrix> out;
  if (noise.zeta == 0.0) return out;
  for (NoiseChannel ch : noise.channels) {
    const double coeff =
        ch == NoiseChannel::relaxation ? std::sqrt(noise.zeta) : std::sqrt(0.5 * noise.zeta);
    const Matrix2 op = pauli(ch == NoiseChannel::relaxation ? Axis::minus : Axis::z);
    if (noise.per_site) {
      for (int i = 1; i <= space.n_sites(); ++i) {
        out.push_back(coeff * embed_single(op, i, space).matrix());
      }
    } else {
      Matrix sum = Matrix::Zero(space.dim(), space.dim());
      for (int i = 1; i <= space.n_sites(); ++i) sum += embed_single(op, i, space).matrix();
      out.push_back(coeff * sum);
    }
  }
  return out;
}

namespace {

// Right-hand side of the Lindblad equation written as
//   -i (H_eff rho - rho H_eff^dagger) + sum_k L_k rho L_k^dagger,
// H_eff = H - i/2 sum_k L_k^dagger L_k. Local sigma^- and sigma^z sandwiches
// are evaluated by index permutation rather than dense products.
class LindbladGenerator {
 public:
  LindbladGenerator(const NoiseSpec& noise, const HilbertSpace& space) : space_(space) {
    const std::vector<Matrix> jumps = jump_operators(noise, space);
    decay_ = Matrix::Zero(space.dim(), space.dim());
    for (const Matrix& l : jumps) decay_ += l.adjoint() * l;
    if (noise.zeta == 0.0) return;
    if (noise.per_site) {
      for (NoiseChannel ch : noise.channels) {
        const double rate = ch == NoiseChannel::relaxation ? noise.zeta : 0.5 * noise.zeta;
        for (int i = 1; i <= space.n_sites(); ++i) {
          local_.push_back({ch, space.bit_of(i), rate});
        }
      }
    } else {
      dense_ = jumps;
    }
  }

  Matrix effective(const Matrix& h) const { return h - Complex(0.0, 0.5) * decay_; }

  void rhs(const Matrix& h_eff, const Matrix& rho, Matrix& out) const {
    const Matrix x = Complex(0.0, -1.0) * (h_eff * rho);
    out = x + x.adjoint();
    const Index dim = space_.dim();
    for (const LocalJump& j : local_) {
      const Index mask = Index{1} << j.bit;
      if (j.channel == NoiseChannel::relaxation) {
        for (Index b = 0; b < dim; ++b) {
          if (!(b & mask)) continue;
          for (Index a = 0; a < dim; ++a) {
            if (!(a & mask)) continue;
            out(a, b) += j.rate * rho(a ^ mask, b ^ mask);
          }
        }
      } else {
        for (Index b = 0; b < dim; ++b) {
          const double zb = (b & mask) ? -1.0 : 1.0;
          for (Index a = 0; a < dim; ++a) {
            const double za = (a & mask) ? -1.0 : 1.0;
            out(a, b) += j.rate * za * zb * rho(a, b);
          }
        }
      }
    }
    for (const Matrix& l : dense_) out += l * rho * l.adjoint();
  }

 private:
  struct LocalJump {
    NoiseChannel channel;
    int bit;
    double rate;
  };

  HilbertSpace space_;
  Matrix decay_;
  std::vector<LocalJump> local_;
  std::vector<Matrix> dense_;
};

void rk4_interval(Matrix& rho, const LindbladGenerator& gen,
                  const std::function<Matrix(double)>& h_eff_at, bool time_dependent,
                  double t0, double t1, double max_step) {
  const long n = substeps(t1 - t0, max_step);
  const double h = (t1 - t0) / static_cast<double>(n);
  Matrix k1, k2, k3, k4;
  Matrix h_const;
  if (!time_dependent) h_const = h_eff_at(t0);
  for (long s = 0; s < n; ++s) {
    const double t = t0 + static_cast<double>(s) * h;
    if (time_dependent) {
      const Matrix ha = h_eff_at(t);
      const Matrix hm = h_eff_at(t + 0.5 * h);
      const Matrix hb = h_eff_at(t + h);
      gen.rhs(ha, rho, k1);
      gen.rhs(hm, rho + (0.5 * h) * k1, k2);
      gen.rhs(hm, rho + (0.5 * h) * k2, k3);
      gen.rhs(hb, rho + h * k3, k4);
    } else {
      gen.rhs(h_const, rho, k1);
      gen.rhs(h_const, rho + (0.5 * h) * k1, k2);
      gen.rhs(h_const, rho + (0.5 * h) * k2, k3);
      gen.rhs(h_const, rho + h * k3, k4);
    }
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
}

}  // namespace

// --- closed evolution -------------------------------------------------------

PureTrajectory evolve_closed(const StateVector& psi0, const SpinOperator& h,
                             const PulseSchedule& schedule) {
  const HilbertSpace& space = psi0.space();
  if (!(h.space() == space)) {
    throw std::invalid_argument("Hamiltonian and initial state act on different spaces");
  }
  if (!h.is_hermitian()) throw std::invalid_argument("Hamiltonian is not hermitian");
  check_schedule(schedule, space);

  const PulseSpec& pulse = schedule.pulse;
  const std::vector<double> scale = pulse.scales(space.n_sites());
  const SpectralPropagator free_prop(h.matrix());
  std::optional<SpectralPropagator> rwa_prop;
  std::optional<Matrix> kick;
  std::optional<DriveField> field;
  double lab_step = 0.0;
  switch (pulse.kind) {
    case PulseKind::instantaneous:
      kick = global_pulse_operator(pulse.theta, space, scale).matrix();
      break;
    case PulseKind::finite_rwa:
      rwa_prop.emplace((h + rwa_pulse_hamiltonian(pulse.amplitude, space, scale)).matrix());
      break;
    case PulseKind::finite_lab:
      field.emplace(DriveField::from_pulse(space, pulse));
      lab_step = kMagnusPhasePerStep /
                 (free_prop.spectral_radius() + field->norm_bound() + field->max_frequency());
      break;
  }

  const std::vector<double> samples = schedule.sample_times();
  PureTrajectory traj;
  traj.times = samples;
  traj.states.reserve(samples.size());
  Vector psi = psi0.amplitudes();
  for (const PlanStep& step : plan_timeline(schedule, samples)) {
    switch (step.kind) {
      case PlanStep::Kind::sample:
        traj.states.emplace_back(space, psi);
        break;
      case PlanStep::Kind::kick:
        psi = (*kick) * psi;
        break;
      case PlanStep::Kind::evolve: {
        const Segment& seg = schedule.segments[step.segment];
        if (seg.kind == Segment::Kind::free) {
          free_prop.apply(psi, step.t1 - step.t0);
        } else if (rwa_prop) {
          rwa_prop->apply(psi, step.t1 - step.t0);
        } else {
          const DriveField& f = *field;
          magnus_interval(psi, h.matrix(), [&f](double t) { return f.at(t); }, step.t0, step.t1,
                          lab_step);
        }
        break;
      }
    }
  }
  traj.stroboscopic_indices = stroboscopic(schedule, traj.times.size());
  return traj;
}

// --- open evolution ---------------------------------------------------------

double lindblad_base_step(const PulseSchedule& schedule, const NoiseSpec& noise) {
  double step = schedule.period / 256.0;
  if (noise.zeta > 0.0) step = std::min(step, 0.02 / noise.zeta);
  return step;
}

MixedTrajectory evolve_lindblad(const DensityMatrix& rho0, const SpinOperator& h,
                                const NoiseSpec& noise, const PulseSchedule& schedule,
                                const LindbladOptions& options) {
  const HilbertSpace& space = rho0.space();
  // Re-validate: trusted snapshots may be passed back in.
  const DensityMatrix checked(space, rho0.matrix());
  if (!(h.space() == space)) {
    throw std::invalid_argument("Hamiltonian and initial state act on different spaces");
  }
  if (!h.is_hermitian()) throw std::invalid_argument("Hamiltonian is not hermitian");
  noise.validate();
  check_schedule(schedule, space);

  const PulseSpec& pulse = schedule.pulse;
  const std::vector<double> scale = pulse.scales(space.n_sites());
  const LindbladGenerator gen(noise, space);

  double base = lindblad_base_step(schedule, noise);
  if (options.max_step > 0.0) base = std::min(base, options.max_step);
  const double phase = options.phase_per_step;

  const Matrix h_free_eff = gen.effective(h.matrix());
  const double free_radius = SpectralPropagator(h.matrix()).spectral_radius();
  const double free_step = free_radius > 0.0 ? std::min(base, phase / free_radius) : base;

  std::optional<Matrix> kick;
  Matrix h_pulse_eff;
  double pulse_step = base;
  std::optional<DriveField> field;
  switch (pulse.kind) {
    case PulseKind::instantaneous:
      kick = global_pulse_operator(pulse.theta, space, scale).matrix();
      break;
    case PulseKind::finite_rwa: {
      const Matrix hp = (h + rwa_pulse_hamiltonian(pulse.amplitude, space, scale)).matrix();
      h_pulse_eff = gen.effective(hp);
      pulse_step = std::min(base, phase / SpectralPropagator(hp).spectral_radius());
      break;
    }
    case PulseKind::finite_lab:
      field.emplace(DriveField::from_pulse(space, pulse));
      pulse_step =
          std::min(base, phase / (free_radius + field->norm_bound() + field->max_frequency()));
      break;
  }

  const std::vector<double> samples = schedule.sample_times();
  MixedTrajectory traj;
  traj.times = samples;
  traj.states.reserve(samples.size());
  Matrix rho = checked.matrix();
  for (const PlanStep& step : plan_timeline(schedule, samples)) {
    switch (step.kind) {
      case PlanStep::Kind::sample:
        traj.states.push_back(DensityMatrix::trusted(space, rho));
        break;
      case PlanStep::Kind::kick:
        rho = (*kick) * rho * kick->adjoint();
        break;
      case PlanStep::Kind::evolve: {
        const Segment& seg = schedule.segments[step.segment];
        if (seg.kind == Segment::Kind::free) {
          rk4_interval(rho, gen, [&](double) { return h_free_eff; }, false, step.t0, step.t1,
                       free_step);
        } else if (!field) {
          rk4_interval(rho, gen, [&](double) { return h_pulse_eff; }, false, step.t0, step.t1,
                       pulse_step);
        } else {
          const DriveField& f = *field;
          rk4_interval(rho, gen, [&](double t) { return Matrix(h_free_eff + f.at(t)); }, true,
                       step.t0, step.t1, pulse_step);
        }
        break;
      }
    }
  }

  const double trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_error > kLindbladTraceTolerance) {
    throw std::runtime_error("Lindblad integration lost trace (error " +
                             std::to_string(trace_error) + ")");
  }
  const double lo = DensityMatrix::trusted(space, rho).min_eigenvalue();
  if (lo < -kLindbladPositivityTolerance) {
    throw std::runtime_error("Lindblad integration lost positivity (min eigenvalue " +
                             std::to_string(lo) + ")");
  }
  traj.stroboscopic_indices = stroboscopic(schedule, traj.times.size());
  return traj;
}

// --- time-dependent closed evolution ----------------------------------------

PureTrajectory evolve_timedep(const StateVector& psi0, const SpinOperator& h_static,
                              const TimeDependentHamiltonian& h_t, TimeSpan span, double dt_max,
                              int n_samples) {
  if (!(h_static.space() == psi0.space())) {
    throw std::invalid_argument("Hamiltonian and initial state act on different spaces");
  }
  if (!h_static.is_hermitian()) throw std::invalid_argument("static Hamiltonian not hermitian");
  if (!(span.end >= span.start)) throw std::invalid_argument("time span is reversed");
  if (n_samples < 1) throw std::invalid_argument("need at least one sample interval");
  PureTrajectory traj;
  Vector psi = psi0.amplitudes();
  const double width = (span.end - span.start) / n_samples;
  traj.times.push_back(span.start);
  traj.states.push_back(psi0);
  for (int k = 0; k < n_samples; ++k) {
    const double t0 = span.start + width * k;
    const double t1 = k + 1 == n_samples ? span.end : span.start + width * (k + 1);
    if (t1 > t0) magnus_interval(psi, h_static.matrix(), h_t, t0, t1, dt_max);
    traj.times.push_back(t1);
    traj.states.emplace_back(psi0.space(), psi);
  }
  return traj;
}

}  // namespace dtc
