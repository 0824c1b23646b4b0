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

#include "dtc/models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dtc {

namespace {

void require_finite(const std::vector<double>& v, const char* name) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(name) + " contains a non-finite value");
    }
  }
}

void require_length(const std::vector<double>& v, std::size_t n, const char* name) {
  if (v.size() != n) {
    std::ostringstream os;
    os << name << " has length " << v.size() << ", expected " << n;
    throw std::invalid_argument(os.str());
  }
}

void require_positive_g(double g) {
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw std::invalid_argument("g must be positive and finite");
  }
}

}  // namespace

void CouplingSet::validate() const {
  if (omega.size() < 1) throw std::invalid_argument("CouplingSet has no sites");
  const std::size_t bonds = omega.size() - 1;
  require_length(eta0, bonds, "eta0");
  require_length(etax, bonds, "etax");
  require_length(etay, bonds, "etay");
  require_length(etaz, bonds, "etaz");
  require_finite(eta0, "eta0");
  require_finite(etax, "etax");
  require_finite(etay, "etay");
  require_finite(etaz, "etaz");
  require_finite(omega, "omega");
}

CouplingSet CouplingSet::zeros(int n_sites) {
  const auto bonds = static_cast<std::size_t>(std::max(n_sites - 1, 0));
  return CouplingSet{std::vector<double>(bonds, 0.0), std::vector<double>(bonds, 0.0),
                     std::vector<double>(bonds, 0.0), std::vector<double>(bonds, 0.0),
                     std::vector<double>(static_cast<std::size_t>(n_sites), 0.0)};
}

std::vector<double> harmonic_trap_alpha(int n_sites) {
  if (n_sites == 5) return {2.16612, 3.17738, 3.17738, 2.16612};
  throw std::invalid_argument("no tabulated harmonic-trap coefficients for N=" +
                              std::to_string(n_sites) + "; supply alpha explicitly");
}

std::vector<std::string> validity_warnings(const ColdAtomParams& p) {
  std::vector<std::string> out;
  if (p.g < 5.0) {
    out.push_back("g=" + std::to_string(p.g) +
                  " is below 5; the effective spin chain assumes g >> 1");
  }
  const auto n = p.alpha.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (std::abs(p.alpha[i] - p.alpha[n - 1 - i]) > 1e-12) {
      out.push_back("alpha is not reversal-symmetric; the trap is not parity invariant");
      break;
    }
  }
  return out;
}

void CircuitParams::validate() const {
  if (omega_q.empty()) throw std::invalid_argument("circuit has no qubits");
  require_length(jz, omega_q.size() - 1, "jz");
  require_finite(omega_q, "omega_q");
  require_finite(jz, "jz");
  if (!std::isfinite(amplitude) || amplitude < 0.0) {
    throw std::invalid_argument("amplitude must be finite and non-negative");
  }
  if (!(epsilon >= 0.0 && epsilon < kPi)) {
    throw std::invalid_argument("epsilon must lie in [0, pi)");
  }
  if (!std::isfinite(zeta) || zeta < 0.0) {
    throw std::invalid_argument("zeta must be finite and non-negative");
  }
  if (symmetric) {
    const std::size_t n = omega_q.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (omega_q[i] != omega_q[n - 1 - i]) {
        throw std::invalid_argument("omega_q is not mirror symmetric");
      }
    }
    for (std::size_t i = 0; i < jz.size(); ++i) {
      if (jz[i] != jz[jz.size() - 1 - i]) {
        throw std::invalid_argument("jz is not mirror symmetric");
      }
    }
  }
}

std::vector<double> mirror_complete(const std::vector<double>& half, int n) {
  const auto needed = static_cast<std::size_t>((n + 1) / 2);
  if (half.size() != needed) {
    throw std::invalid_argument("mirror completion of length " + std::to_string(n) + " needs " +
                                std::to_string(needed) + " leading values");
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int k = std::min(i, n - 1 - i);
    out[static_cast<std::size_t>(i)] = half[static_cast<std::size_t>(k)];
  }
  return out;
}

CircuitParams reference_circuit(bool interacting, double epsilon, double zeta) {
  const std::vector<double> omega_ghz = mirror_complete({17.0, 35.6, 43.361}, 5);
  const std::vector<double> omega_err_ghz = mirror_complete({0.048, 0.21, 0.048}, 5);
  const std::vector<double> jz_mhz = mirror_complete({168.9, -29.07}, 4);
  const std::vector<double> jz_err_mhz = mirror_complete({1.1, 0.18}, 4);

  CircuitParams p;
  double max_j = 0.0;
  for (double x : omega_ghz) p.omega_q.push_back(ghz_to_angular(x));
  for (double x : omega_err_ghz) p.uncertainty.omega_q.push_back(ghz_to_angular(x));
  for (double x : jz_err_mhz) p.uncertainty.jz.push_back(mhz_to_angular(x));
  for (double x : jz_mhz) {
    const double j = mhz_to_angular(x);
    max_j = std::max(max_j, std::abs(j));
    p.jz.push_back(interacting ? j : 0.0);
  }
  p.amplitude = 100.0 * max_j;
  p.epsilon = epsilon;
  p.zeta = zeta;
  p.symmetric = true;
  return p;
}

SpinOperator build_xxz(const CouplingSet& c, const HilbertSpace& space) {
  c.validate();
  if (c.n_sites() != space.n_sites()) {
    throw std::invalid_argument("coupling set has " + std::to_string(c.n_sites()) +
                                " sites, space has " + std::to_string(space.n_sites()));
  }
  const Matrix2 sx = pauli(Axis::x);
  const Matrix2 sy = pauli(Axis::y);
  const Matrix2 sz = pauli(Axis::z);
  const Matrix id = Matrix::Identity(space.dim(), space.dim());
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  for (int i = 1; i < space.n_sites(); ++i) {
    const auto b = static_cast<std::size_t>(i - 1);
    if (c.eta0[b] != 0.0) m += c.eta0[b] * id;
    if (c.etax[b] != 0.0) m += c.etax[b] * embed_pair(sx, sx, i, i + 1, space).matrix();
    if (c.etay[b] != 0.0) m += c.etay[b] * embed_pair(sy, sy, i, i + 1, space).matrix();
    if (c.etaz[b] != 0.0) m += c.etaz[b] * embed_pair(sz, sz, i, i + 1, space).matrix();
  }
  for (int i = 1; i <= space.n_sites(); ++i) {
    const double w = c.omega[static_cast<std::size_t>(i - 1)];
    if (w != 0.0) m -= 0.5 * w * embed_single(sz, i, space).matrix();
  }
  return SpinOperator(space, std::move(m));
}

CouplingSet cold_atom_couplings(const ColdAtomParams& p) {
  require_positive_g(p.g);
  if (!(p.kappa > 0.0)) {
    throw std::invalid_argument("kappa must be positive (or infinite)");
  }
  require_length(p.alpha, static_cast<std::size_t>(p.n_sites - 1), "alpha");
  require_finite(p.alpha, "alpha");
  // 2/kappa is exactly zero for kappa = +inf.
  const double inv = 2.0 / p.kappa;
  CouplingSet c = CouplingSet::zeros(p.n_sites);
  for (std::size_t i = 0; i < p.alpha.size(); ++i) {
    const double a = 0.5 * p.alpha[i] / p.g;
    c.eta0[i] = -a * (1.0 + inv);
    c.etax[i] = a;
    c.etay[i] = a;
    c.etaz[i] = a * (1.0 - inv);
  }
  return c;
}

CouplingSet fermionic_couplings(double g, const std::vector<double>& alpha) {
  return cold_atom_couplings(
      ColdAtomParams{static_cast<int>(alpha.size()) + 1, g, kInfinity, alpha});
}

SpinOperator permutation_hamiltonian(double g, const std::vector<double>& alpha,
                                     const HilbertSpace& space) {
  require_positive_g(g);
  require_length(alpha, static_cast<std::size_t>(space.n_sites() - 1), "alpha");
  // P_{i,i+1} permutes the two bits directly in the product basis.
  const Index dim = space.dim();
  Matrix m = Matrix::Zero(dim, dim);
  for (int i = 1; i < space.n_sites(); ++i) {
    const double w = alpha[static_cast<std::size_t>(i - 1)] / g;
    const int si = space.bit_of(i);
    const int sj = space.bit_of(i + 1);
    for (Index b = 0; b < dim; ++b) {
      const Index bi = (b >> si) & 1;
      const Index bj = (b >> sj) & 1;
      const Index swapped = bi == bj ? b : (b ^ ((Index{1} << si) | (Index{1} << sj)));
      m(b, b) -= w;
      m(swapped, b) += w;
    }
  }
  return SpinOperator(space, std::move(m));
}

CouplingSet circuit_couplings(const CircuitParams& p, Frame frame) {
  p.validate();
  CouplingSet c = CouplingSet::zeros(p.n_sites());
  c.etaz = p.jz;
  if (frame == Frame::lab) c.omega = p.omega_q;
  return c;
}

}  // namespace dtc
