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

#include "dtc/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dtc/drive.hpp"
#include "dtc/evolver.hpp"
#include "dtc/models.hpp"

#ifndef DTC_VERSION
#define DTC_VERSION "unknown"
#endif

namespace dtc {

using nlohmann::ordered_json;

namespace {

struct Problem {
  HilbertSpace space{1};
  SpinOperator hamiltonian;
  CouplingSet couplings;
  PulseSchedule schedule;
  StateVector initial;
  std::vector<std::string> warnings;
};

StateVector initial_state(const RunConfig& c, const HilbertSpace& space) {
  if (c.initial_state.empty()) return product_state(antiferromagnetic_pattern(space.n_sites()));
  return product_state(parse_spin_pattern(c.initial_state), space);
}

Problem build_problem(const RunConfig& c) {
  c.validate();
  const int n = c.n_sites();
  const HilbertSpace space(n);
  CouplingSet couplings;
  PulseSpec pulse;
  pulse.theta = kPi - c.schedule.epsilon;
  pulse.kind = c.schedule.pulse;
  if (c.schedule.delta != 0.0) pulse.per_site_scale = inhomogeneous_scale(n, c.schedule.delta);
  std::vector<std::string> warnings;

  if (c.model == ModelKind::cold_atom) {
    couplings = cold_atom_couplings(*c.cold_atom);
    warnings = validity_warnings(*c.cold_atom);
  } else {
    const CircuitParams p = c.circuit_params();
    couplings = circuit_couplings(p, Frame::rotating);
    pulse.amplitude = p.amplitude;
    if (pulse.kind == PulseKind::finite_lab) pulse.carrier = p.omega_q;
    double max_j = 0.0;
    for (double j : p.jz) max_j = std::max(max_j, std::abs(j));
    if (pulse.kind != PulseKind::instantaneous && max_j > 0.0 && p.amplitude < 10.0 * max_j) {
      warnings.push_back("drive amplitude is below 10 max|J|; pulses are not fast on the "
                         "scale of the couplings");
    }
    if (pulse.kind == PulseKind::finite_lab) {
      const double min_w = *std::min_element(p.omega_q.begin(), p.omega_q.end());
      if (p.amplitude > 0.1 * std::abs(min_w)) {
        warnings.push_back("drive amplitude exceeds 10% of the lowest qubit frequency; "
                           "counter-rotating terms are significant");
      }
    }
  }
  const SpinOperator h = build_xxz(couplings, space);
  PulseSchedule schedule = make_schedule(c.schedule.period, c.schedule.n_periods, pulse,
                                         c.schedule.samples_per_period);
  return Problem{space, h, couplings, schedule, initial_state(c, space), warnings};
}

ordered_json couplings_json(const CouplingSet& c) {
  return {{"eta0", c.eta0}, {"etax", c.etax}, {"etay", c.etay}, {"etaz", c.etaz},
          {"omega", c.omega}};
}

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + file.string() + "'");
  out << text;
  out.close();
  if (!out) throw std::runtime_error("error while writing '" + file.string() + "'");
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

RunResult simulate(const RunConfig& config) {
  const Problem p = build_problem(config);
  RunResult r;
  r.warnings = p.warnings;

  if (config.noise.zeta > 0.0) {
    const MixedTrajectory traj = evolve_lindblad(DensityMatrix::pure(p.initial), p.hamiltonian,
                                                 config.noise, p.schedule);
    r.times = traj.times;
    r.stroboscopic_indices = traj.stroboscopic_indices;
    for (const DensityMatrix& rho : traj.states) {
      r.magnetization.push_back(magnetization(rho));
      r.raw_magnetization.push_back(raw_magnetization(rho));
      r.overlap.push_back(overlap(p.initial, rho));
      r.traces.push_back(rho.matrix().trace().real());
    }
  } else {
    const PureTrajectory traj = evolve_closed(p.initial, p.hamiltonian, p.schedule);
    r.times = traj.times;
    r.stroboscopic_indices = traj.stroboscopic_indices;
    for (const StateVector& psi : traj.states) {
      r.magnetization.push_back(magnetization(psi));
      r.raw_magnetization.push_back(raw_magnetization(psi));
      r.overlap.push_back(overlap(p.initial, psi));
      r.traces.push_back(1.0);
    }
  }

  const int spp = config.schedule.samples_per_period;
  if (config.schedule.n_periods >= 8 && config.schedule.n_periods * spp >= 16) {
    const TimeSeries series{r.times, r.magnetization, config.schedule.period};
    r.spectrum = spectral_density(resample_uniform(series, spp));
    r.peaks = subharmonic_metrics(*r.spectrum);
  }
  return r;
}

std::vector<double> stroboscopic_magnetization(const RunResult& result) {
  std::vector<double> out;
  out.reserve(result.stroboscopic_indices.size());
  for (std::size_t i : result.stroboscopic_indices) out.push_back(result.magnetization.at(i));
  return out;
}

ordered_json peaks_to_json(const PeakReport& peaks) {
  ordered_json j;
  j["peak_frequency"] = peaks.peak_frequency;
  j["peak_height"] = peaks.peak_height;
  j["subharmonic_weight"] = peaks.subharmonic_weight;
  j["split_detected"] = peaks.split_detected;
  j["split_separation"] =
      peaks.split_separation ? ordered_json(*peaks.split_separation) : ordered_json(nullptr);
  return j;
}

ordered_json metadata_json(const RunConfig& config, const RunResult& result) {
  const Problem p = build_problem(config);
  RunConfig recorded = config;
  recorded.output_dir.clear();

  ordered_json j;
  j["code"] = {{"name", "dtcsim"}, {"version", DTC_VERSION}};
  j["config"] = to_json(recorded);

  const bool circuit = config.model == ModelKind::circuit;
  j["units"] = {
      {"time", circuit ? "ns" : "harmonic-oscillator time 1/omega_ho"},
      {"energy", circuit ? "rad/ns (hbar = 1)" : "hbar omega_ho"},
      {"circuit_input", "omega_ghz and jz_mhz are divided by 2 pi; amplitude is in rad/ns"},
      {"zeta", circuit ? "1/ns" : "1/(time unit)"},
      {"magnetization", "m_normalized = 1/2 <sum_i sigma_i^z>; m_raw = <sum_i sigma_i^z>"},
      {"frequency", "f/f_D with f_D = 1/T_D"},
      {"spectrum", "S = |dt sum_j m_j exp(-2 pi i f t_j)|^2, one-sided, rectangular window"},
      {"basis", "site 1 is the most significant bit; bit 0 is spin up; sigma^z up = +1"}};

  ordered_json model;
  model["n_sites"] = config.n_sites();
  model["hamiltonian"] =
      "sum_i (eta0 + etax sx sx + etay sy sy + etaz sz sz) - 1/2 sum_i omega_i sz_i";
  model["frame"] = circuit ? "rotating (qubit precession removed)" : "static";
  model["couplings"] = couplings_json(p.couplings);
  if (config.cold_atom) {
    model["kappa_fermionic_limit"] = std::isinf(config.cold_atom->kappa);
  }
  if (circuit) {
    const CircuitParams cp = config.circuit_params();
    model["omega_q_rad_per_ns"] = cp.omega_q;
    model["jz_rad_per_ns"] = cp.jz;
    model["uncertainty_used_in_dynamics"] = false;
  }
  j["model"] = model;

  const PulseSpec& pulse = p.schedule.pulse;
  j["pulse"] = {{"kind", to_string(pulse.kind)},
                {"theta", pulse.theta},
                {"epsilon", config.schedule.epsilon},
                {"axis", pulse.kind == PulseKind::instantaneous ? "x" : "y (rotating frame)"},
                {"amplitude", pulse.amplitude},
                {"duration", pulse.duration()},
                {"per_site_scale", pulse.scales(config.n_sites())},
                {"carrier", pulse.carrier}};
  j["schedule"] = {{"period", p.schedule.period},
                   {"n_periods", p.schedule.n_periods},
                   {"samples_per_period", p.schedule.sample_rate},
                   {"n_samples", result.times.size()},
                   {"pulse_end_times", "n T_D; samples at n T_D are taken after the pulse"}};

  std::vector<std::string> channels;
  for (NoiseChannel ch : config.noise.channels) channels.push_back(to_string(ch));
  j["noise"] = {{"zeta", config.noise.zeta},
                {"channels", channels},
                {"per_site", config.noise.per_site},
                {"relaxation_operator", "sqrt(zeta) sigma^-"},
                {"dephasing_operator", "sqrt(zeta/2) sigma^z"}};

  ordered_json integ;
  if (config.noise.zeta > 0.0) {
    integ["method"] = "fixed-step RK4 on the Lindblad equation";
    integ["base_step"] = lindblad_base_step(p.schedule, config.noise);
    integ["phase_per_step"] = LindbladOptions{}.phase_per_step;
    double worst = 0.0;
    for (double t : result.traces) worst = std::max(worst, std::abs(t - 1.0));
    integ["max_trace_error"] = worst;
  } else {
    integ["method"] = pulse.kind == PulseKind::finite_lab
                          ? "spectral propagation; fourth-order Magnus during pulses"
                          : "spectral propagation (exact up to round-off)";
    integ["base_step"] = nullptr;
  }
  j["integrator"] = integ;

  j["spectrum"] = {{"samples_per_period", config.schedule.samples_per_period},
                   {"resampled_window", "[0, n_periods T_D)"},
                   {"n_points", result.spectrum ? result.spectrum->n_points : 0},
                   {"bin_width", result.spectrum ? result.spectrum->bin_width : 0.0}};
  j["peak_criteria"] = {{"subharmonic_window_half_width", peak_criteria::kWindowHalfWidth},
                        {"weight_denominator_band", "(0, f_D]"},
                        {"split_band", {peak_criteria::kSplitBandLow, peak_criteria::kSplitBandHigh}},
                        {"split_min_separation", peak_criteria::kMinSplitSeparation},
                        {"split_contrast", peak_criteria::kSplitContrast}};
  j["warnings"] = result.warnings;
  return j;
}

void write_outputs(const RunConfig& config, const RunResult& result,
                   const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory '" + out_dir.string() +
                             "': " + ec.message());
  }
  const double period = config.schedule.period;
  if (config.wants(OutputKind::magnetization) || config.wants(OutputKind::overlap)) {
    std::string text = "t,t/T_D,m_normalized,m_raw,F\n";
    for (std::size_t i = 0; i < result.times.size(); ++i) {
      text += format_double(result.times[i]) + "," + format_double(result.times[i] / period) +
              "," + format_double(result.magnetization[i]) + "," +
              format_double(result.raw_magnetization[i]) + "," + format_double(result.overlap[i]) +
              "\n";
    }
    write_text(out_dir / "timeseries.csv", text);
  }
  if (config.wants(OutputKind::spectrum) && result.spectrum) {
    std::string text = "f/f_D,S\n";
    for (std::size_t k = 0; k < result.spectrum->frequencies.size(); ++k) {
      text += format_double(result.spectrum->frequencies[k]) + "," +
              format_double(result.spectrum->density[k]) + "\n";
    }
    write_text(out_dir / "spectrum.csv", text);
  }
  if (config.wants(OutputKind::peaks) && result.peaks) {
    write_text(out_dir / "peaks.json", peaks_to_json(*result.peaks).dump(2) + "\n");
  }
  write_text(out_dir / "metadata.json", metadata_json(config, result).dump(2) + "\n");
}

RunResult run(const RunConfig& config, const std::filesystem::path& out_dir) {
  RunResult r = simulate(config);
  write_outputs(config, r, out_dir);
  return r;
}

double metric_value(const PeakReport& peaks, const std::string& name) {
  if (name == "subharmonic_weight") return peaks.subharmonic_weight;
  if (name == "peak_frequency") return peaks.peak_frequency;
  if (name == "peak_height") return peaks.peak_height;
  if (name == "split_detected") return peaks.split_detected ? 1.0 : 0.0;
  if (name == "split_separation") return peaks.split_separation.value_or(std::nan(""));
  throw std::invalid_argument("unknown metric '" + name + "'");
}

std::vector<SweepRow> sweep(const SweepConfig& config) {
  config.validate();
  const std::size_t total = config.grid_size();
  std::vector<std::vector<double>> points(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    std::vector<double> values(config.axes.size());
    for (std::size_t a = config.axes.size(); a-- > 0;) {
      const auto& vals = config.axes[a].values;
      values[a] = vals[rest % vals.size()];
      rest /= vals.size();
    }
    points[idx] = values;
  }

  std::vector<SweepRow> rows(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      try {
        RunConfig c = config.base;
        for (std::size_t a = 0; a < config.axes.size(); ++a) {
          c = with_axis_value(c, config.axes[a].name, points[idx][a]);
        }
        const RunResult r = simulate(c);
        if (!r.peaks) throw std::runtime_error("sweep point produced no spectrum");
        SweepRow row{points[idx], {}};
        for (const std::string& m : config.reduce) row.metrics.push_back(metric_value(*r.peaks, m));
        rows[idx] = std::move(row);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(total);
      }
    }
  };

  unsigned n_threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                          : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, total));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_sweep_csv(const SweepConfig& config, const std::vector<SweepRow>& rows,
                     const std::filesystem::path& file) {
  if (file.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    if (ec) throw std::runtime_error("cannot create '" + file.parent_path().string() + "'");
  }
  std::string text;
  bool first = true;
  for (const SweepAxis& a : config.axes) {
    text += (first ? "" : ",") + a.name;
    first = false;
  }
  for (const std::string& m : config.reduce) text += "," + m;
  text += "\n";
  for (const SweepRow& row : rows) {
    for (std::size_t a = 0; a < row.axis_values.size(); ++a) {
      text += (a ? "," : "") + format_double(row.axis_values[a]);
    }
    for (double m : row.metrics) text += "," + format_double(m);
    text += "\n";
  }
  write_text(file, text);
}

}  // namespace dtc
