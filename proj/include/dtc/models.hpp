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

#include <limits>
#include <string>
#include <vector>

#include "dtc/spin_algebra.hpp"

namespace dtc {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// GHz -> rad/ns.
inline constexpr double ghz_to_angular(double ghz) { return 2.0 * kPi * ghz; }
/// MHz -> rad/ns.
inline constexpr double mhz_to_angular(double mhz) { return 2.0 * kPi * mhz * 1e-3; }

/// Parameters of the general nearest-neighbour chain
///
///   H = sum_i (eta0_i + etax_i sx_i sx_{i+1} + etay_i sy_i sy_{i+1} + etaz_i sz_i sz_{i+1})
///       - 1/2 sum_i omega_i sz_i
///
/// Bond vectors have length N-1, `omega` has length N.
struct CouplingSet {
  std::vector<double> eta0;
  std::vector<double> etax;
  std::vector<double> etay;
  std::vector<double> etaz;
  std::vector<double> omega;

  int n_sites() const { return static_cast<int>(omega.size()); }

  /// Throws std::invalid_argument on inconsistent lengths or non-finite entries.
  void validate() const;

  static CouplingSet zeros(int n_sites);

  bool operator==(const CouplingSet&) const = default;
};

/// Strongly interacting two-component atoms in a harmonic trap, in trap units.
struct ColdAtomParams {
  int n_sites = 5;
  double g = 10.0;       ///< interspecies contact strength
  double kappa = 0.1;    ///< intra/inter-species ratio; kInfinity is the fermionic limit
  std::vector<double> alpha;  ///< geometric exchange coefficients, length N-1

  bool operator==(const ColdAtomParams&) const = default;
};

/// Harmonic-trap exchange coefficients for N=5.
std::vector<double> harmonic_trap_alpha(int n_sites);

/// Non-fatal diagnostics (e.g. g outside the strong-coupling regime).
std::vector<std::string> validity_warnings(const ColdAtomParams& p);

/// Optional per-parameter uncertainties; carried as metadata only.
struct CircuitUncertainty {
  std::vector<double> omega_q;
  std::vector<double> jz;

  bool operator==(const CircuitUncertainty&) const = default;
};

/// Five-island Ising circuit. Frequencies in rad/ns, time in ns.
struct CircuitParams {
  std::vector<double> omega_q;  ///< qubit frequencies, length N
  std::vector<double> jz;       ///< Ising couplings, length N-1
  double amplitude = 0.0;       ///< drive amplitude A
  double epsilon = 0.0;         ///< pulse imperfection
  double zeta = 0.0;            ///< noise rate
  bool symmetric = true;        ///< enforce mirror symmetry across the centre
  CircuitUncertainty uncertainty;

  int n_sites() const { return static_cast<int>(omega_q.size()); }
  void validate() const;

  bool operator==(const CircuitParams&) const = default;
};

/// Completes a left half (sites 1..ceil(N/2)) to a mirror-symmetric vector of length n.
std::vector<double> mirror_complete(const std::vector<double>& half, int n);

/// Published circuit parameters, mirror-completed to five sites. With
/// `interacting == false` all J are zero. The amplitude is 100 max|J| of the
/// interacting table in either case.
CircuitParams reference_circuit(bool interacting, double epsilon = 0.0, double zeta = 0.0);

enum class Frame { rotating, lab };

SpinOperator build_xxz(const CouplingSet& c, const HilbertSpace& space);

CouplingSet cold_atom_couplings(const ColdAtomParams& p);
CouplingSet fermionic_couplings(double g, const std::vector<double>& alpha);

/// -sum_i (alpha_i/g)(1 - P_{i,i+1}) with P the neighbour swap.
SpinOperator permutation_hamiltonian(double g, const std::vector<double>& alpha,
                                     const HilbertSpace& space);

CouplingSet circuit_couplings(const CircuitParams& p, Frame frame);

}  // namespace dtc
