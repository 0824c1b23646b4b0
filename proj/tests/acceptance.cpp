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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dtc/config.hpp"
#include "dtc/models.hpp"
#include "dtc/runner.hpp"
#include "lindblad_oracle.hpp"

namespace {

using namespace dtc;
namespace fs = std::filesystem;

struct Verdict {
  bool ok = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double max_strobe_error(const RunResult& r) {
  const std::vector<double> m = stroboscopic_magnetization(r);
  double err = 0.0;
  for (std::size_t n = 0; n < m.size(); ++n) {
    err = std::max(err, std::abs(m[n] - (n % 2 == 0 ? 0.5 : -0.5)));
  }
  return err;
}

RunConfig preset(const std::string& name) { return find_preset(name).config; }

Verdict perfect_pulses() {
  RunConfig cold = preset("fig2-perfect");
  RunConfig circ = preset("fig4-interacting-ideal-lossless");
  circ.schedule.pulse = PulseKind::instantaneous;
  circ.schedule.epsilon = 0.0;
  circ.schedule.n_periods = 64;
  Verdict v{true, ""};
  for (const RunConfig& c : {cold, circ}) {
    const RunResult r = simulate(c);
    const double err = max_strobe_error(r);
    const double w = r.peaks->subharmonic_weight;
    v.ok = v.ok && err <= 1e-8 && w > 0.9;
    v.detail += to_string(c.model) + ": max|m-(-1)^n/2|=" + fmt("%.1e", err) +
                " weight=" + fmt("%.4f", w) + "; ";
  }
  return v;
}

Verdict fermionic_fragility() {
  const PeakReport p = *simulate(preset("fig2-fermion-imperfect")).peaks;
  return {p.split_detected && p.subharmonic_weight < 0.5,
          std::string("split=") + (p.split_detected ? "true" : "false") +
              " weight=" + fmt("%.4f", p.subharmonic_weight)};
}

Verdict bosonic_rigidity() {
  const RunResult r = simulate(preset("fig2-boson-imperfect"));
  const PeakReport& p = *r.peaks;
  const bool ok = std::abs(p.peak_frequency - 0.5) <= r.spectrum->bin_width &&
                  !p.split_detected && p.subharmonic_weight > 0.7;
  return {ok, "peak=" + fmt("%.5f", p.peak_frequency) + " split=" +
                  (p.split_detected ? "true" : "false") +
                  " weight=" + fmt("%.4f", p.subharmonic_weight)};
}

Verdict fermionic_identity() {
  const std::vector<double> alpha = harmonic_trap_alpha(5);
  const HilbertSpace s(5);
  double worst = 0.0;
  for (double g : {1.0, 10.0, 100.0}) {
    const Matrix a = build_xxz(fermionic_couplings(g, alpha), s).matrix();
    const Matrix b = permutation_hamiltonian(g, alpha, s).matrix();
    worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-12, "max entry difference " + fmt("%.1e", worst)};
}

Verdict circuit_rigidity() {
  const PeakReport on = *simulate(preset("fig4-interacting-inhomogeneous-lossless")).peaks;
  const PeakReport off = *simulate(preset("fig4-noninteracting-inhomogeneous-lossless")).peaks;
  const bool ok = on.peak_frequency == 0.5 && !on.split_detected && off.split_detected;
  return {ok, "J on: peak=" + fmt("%.5f", on.peak_frequency) + " split=" +
                  (on.split_detected ? "true" : "false") + "; J=0: split=" +
                  (off.split_detected ? "true" : "false")};
}

Verdict noise_decay() {
  RunConfig c = preset("fig4-interacting-noisy");
  c.schedule.n_periods = 64;
  const RunResult r = simulate(c);
  const std::vector<double> m = stroboscopic_magnetization(r);
  double worst_rise = 0.0;
  int first_rise = -1;
  for (std::size_t n = 1; n < m.size(); ++n) {
    const double rise = std::abs(m[n]) - std::abs(m[n - 1]);
    if (rise > 1e-6 && first_rise < 0) first_rise = static_cast<int>(n);
    worst_rise = std::max(worst_rise, rise);
  }
  double trace_err = 0.0;
  for (double t : r.traces) trace_err = std::max(trace_err, std::abs(t - 1.0));
  const double ratio = std::abs(m.back()) / std::abs(m.front());
  const bool ok = first_rise < 0 && ratio < 0.5 && trace_err <= 1e-6;
  return {ok, "|m| " + fmt("%.4f", std::abs(m.front())) + " -> " + fmt("%.4f", std::abs(m.back())) +
                  " (ratio " + fmt("%.3f", ratio) + "), largest rise " + fmt("%.3e", worst_rise) +
                  (first_rise > 0 ? " first at n=" + std::to_string(first_rise) : "") +
                  ", trace error " + fmt("%.1e", trace_err)};
}

double sz_total(const Matrix& rho, const HilbertSpace& s) {
  return (total_sigma_z(s).matrix() * rho).trace().real();
}

Verdict lindblad_oracle() {
  double worst = 0.0;
  // Three sites, instantaneous imperfect pulses, both channels.
  {
    const HilbertSpace s(3);
    const SpinOperator h = build_xxz(cold_atom_couplings({3, 5.0, 0.5, {2.0, 2.0}}), s);
    PulseSpec pulse;
    pulse.theta = 0.85 * kPi;
    const PulseSchedule sched = make_schedule(1.0, 6, pulse, 8);
    const NoiseSpec noise{0.2, {NoiseChannel::relaxation, NoiseChannel::dephasing}};
    const StateVector psi0 = product_state(antiferromagnetic_pattern(3));
    const MixedTrajectory traj = evolve_lindblad(DensityMatrix::pure(psi0), h, noise, sched);
    std::vector<Matrix> jumps;
    for (int i = 1; i <= 3; ++i) {
      jumps.push_back(std::sqrt(0.2) * embed_single(pauli(Axis::minus), i, s).matrix());
    }
    for (int i = 1; i <= 3; ++i) {
      jumps.push_back(std::sqrt(0.1) * embed_single(pauli(Axis::z), i, s).matrix());
    }
    oracle::OracleDrive drive;
    drive.h_free = h.matrix();
    drive.h_pulse = h.matrix();
    drive.kick = global_pulse_operator(pulse.theta, s).matrix();
    const std::vector<Matrix> ref = oracle::oracle_states(DensityMatrix::pure(psi0).matrix(), drive,
                                                          jumps, 1.0, 6, 8);
    const Vector p0 = psi0.amplitudes();
    for (std::size_t k = 0; k < ref.size(); ++k) {
      worst = std::max(worst, std::abs(magnetization(traj.states[k]) - 0.5 * sz_total(ref[k], s)));
      worst = std::max(worst, std::abs(overlap(psi0, traj.states[k]) -
                                       (p0.adjoint() * ref[k] * p0)(0, 0).real()));
    }
  }
  // Single qubit relaxation.
  {
    const HilbertSpace s(1);
    const double zeta = 0.3;
    PulseSchedule sched = make_schedule(1.0, 10, PulseSpec{}, 8);
    std::erase_if(sched.segments, [](const Segment& g) { return g.kind == Segment::Kind::pulse; });
    const MixedTrajectory traj =
        evolve_lindblad(DensityMatrix::pure(product_state(parse_spin_pattern("u"))),
                        SpinOperator::zero(s), NoiseSpec{zeta, {NoiseChannel::relaxation}}, sched);
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
      const double expected = 2.0 * std::exp(-zeta * traj.times[k]) - 1.0;
      worst = std::max(worst, std::abs(sz_total(traj.states[k].matrix(), s) - expected));
    }
  }
  return {worst <= 1e-6, "max deviation " + fmt("%.1e", worst)};
}

Verdict rwa_validation() {
  RunConfig lab = preset("fig4-interacting-ideal-lossless");
  lab.schedule.epsilon = 0.0;
  lab.schedule.n_periods = 16;
  lab.schedule.pulse = PulseKind::finite_lab;
  lab.outputs = {OutputKind::magnetization};
  RunConfig instant = lab;
  instant.schedule.pulse = PulseKind::instantaneous;
  const std::vector<double> a = stroboscopic_magnetization(simulate(lab));
  const std::vector<double> b = stroboscopic_magnetization(simulate(instant));
  double worst = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) worst = std::max(worst, std::abs(a[n] - b[n]));
  const double omega_min = ghz_to_angular(*std::min_element(lab.circuit->omega_ghz.begin(),
                                                            lab.circuit->omega_ghz.end()));
  return {worst <= 1e-2, "max |m_lab - m_instant| = " + fmt("%.3f", worst) +
                             " (A=" + fmt("%.2f", lab.circuit->amplitude) +
                             " rad/ns, lowest qubit frequency " + fmt("%.2f", omega_min) +
                             " rad/ns)"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict determinism() {
  const fs::path root = fs::temp_directory_path() / "dtc_acceptance";
  fs::remove_all(root);
  const RunConfig c = preset("fig2-boson-imperfect");
  run(c, root / "a");
  run(c, root / "b");
  int differing = 0;
  for (const char* f : {"timeseries.csv", "spectrum.csv", "peaks.json", "metadata.json"}) {
    if (slurp(root / "a" / f) != slurp(root / "b" / f)) ++differing;
  }
  fs::remove_all(root);
  int broken = 0;
  for (const Preset& p : presets()) {
    const RunConfig back =
        run_config_from_json(nlohmann::json::parse(to_json(p.config).dump()));
    if (!(back == p.config)) ++broken;
  }
  return {differing == 0 && broken == 0,
          std::to_string(differing) + " differing files, " + std::to_string(broken) + " of " +
              std::to_string(presets().size()) + " presets fail to round-trip"};
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Verdict()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "perfect-pulse subharmonic", 5, perfect_pulses},
      {2, "fermionic fragility", 10, fermionic_fragility},
      {3, "bosonic rigidity", 10, bosonic_rigidity},
      {4, "fermionic-limit identity", 1, fermionic_identity},
      {5, "circuit Ising rigidity", 60, circuit_rigidity},
      {6, "noise decay", 120, noise_decay},
      {7, "Lindblad oracle", 10, lindblad_oracle},
      {8, "RWA validation", 60, rwa_validation},
      {9, "determinism and round-trip", 5, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = v.ok && in_time;
    if (!pass) ++failures;
    std::printf("criterion %d: %s  %s  [%s] (%.2f s of %.0f s)\n", c.id, pass ? "PASS" : "FAIL",
                c.title, v.detail.c_str(), secs, c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
