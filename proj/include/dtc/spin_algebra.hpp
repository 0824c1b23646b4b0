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

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace dtc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;
using Index = Eigen::Index;

/// Fixed correctness gates. These are not physics parameters.
namespace tol {
inline constexpr double kStateNorm = 1e-10;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kDensityHermitian = 1e-10;
inline constexpr double kDensityTrace = 1e-8;
inline constexpr double kDensityPositivity = 1e-8;
inline constexpr double kRealExpectation = 1e-10;
}  // namespace tol

/// Largest supported Hilbert-space dimension (12 spins).
inline constexpr Index kMaxDim = 4096;

/// Tensor product space of `n_sites` spin-1/2 degrees of freedom.
///
/// Basis convention: site 1 is the most significant bit of the basis index
/// and |up> maps to bit 0, so |up up ... up> is basis vector 0.
class HilbertSpace {
 public:
  explicit HilbertSpace(int n_sites);

  int n_sites() const { return n_sites_; }
  Index dim() const { return dim_; }

  /// Bit position (from the least significant end) that encodes `site`.
  int bit_of(int site) const { return n_sites_ - site; }

  bool operator==(const HilbertSpace&) const = default;

 private:
  int n_sites_;
  Index dim_;
};

enum class Axis { x, y, z, plus, minus, identity };
enum class Spin { up, down };

/// Standard Pauli/ladder matrix in the {|up>, |down>} basis. sigma^+ maps
/// |down> to |up>.
Matrix2 pauli(Axis axis);

class StateVector {
 public:
  /// Throws std::invalid_argument unless `amplitudes` has length dim and unit norm.
  StateVector(HilbertSpace space, Vector amplitudes);

  /// Rescales `amplitudes` to unit norm; throws on a zero vector.
  static StateVector normalized(HilbertSpace space, Vector amplitudes);

  const HilbertSpace& space() const { return space_; }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](Index i) const { return amplitudes_[i]; }

 private:
  HilbertSpace space_;
  Vector amplitudes_;
};

class DensityMatrix {
 public:
  /// Validates hermiticity, unit trace and positivity.
  DensityMatrix(HilbertSpace space, Matrix matrix);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(const HilbertSpace& space);

  /// Skips the eigenvalue check; used for integrator snapshots whose
  /// positivity is verified separately.
  static DensityMatrix trusted(HilbertSpace space, Matrix matrix);

  const HilbertSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }

  double min_eigenvalue() const;

 private:
  struct TrustedTag {};
  DensityMatrix(HilbertSpace space, Matrix matrix, TrustedTag);

  HilbertSpace space_;
  Matrix matrix_;
};

/// Dense operator on a HilbertSpace. The hermitian flag is derived from the
/// matrix entries at construction.
class SpinOperator {
 public:
  SpinOperator(HilbertSpace space, Matrix matrix);

  static SpinOperator identity(const HilbertSpace& space);
  static SpinOperator zero(const HilbertSpace& space);

  const HilbertSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }
  bool is_hermitian() const { return hermitian_; }
  Index dim() const { return space_.dim(); }

  SpinOperator adjoint() const;

  SpinOperator& operator+=(const SpinOperator& other);
  SpinOperator& operator-=(const SpinOperator& other);
  SpinOperator& operator*=(Complex factor);

  friend SpinOperator operator+(SpinOperator a, const SpinOperator& b) { return a += b; }
  friend SpinOperator operator-(SpinOperator a, const SpinOperator& b) { return a -= b; }
  friend SpinOperator operator*(Complex s, SpinOperator a) { return a *= s; }
  friend SpinOperator operator*(double s, SpinOperator a) { return a *= Complex(s, 0.0); }
  friend SpinOperator operator*(const SpinOperator& a, const SpinOperator& b);

  /// Applies the operator to a state; the result is generally unnormalized.
  Vector apply(const StateVector& psi) const;

 private:
  void check_same_space(const SpinOperator& other) const;

  HilbertSpace space_;
  Matrix matrix_;
  bool hermitian_;
};

/// [a, b] = ab - ba.
SpinOperator commutator(const SpinOperator& a, const SpinOperator& b);

/// Largest entry magnitude; the norm used by all tolerance checks.
double max_abs(const Matrix& m);

bool is_hermitian(const Matrix& m, double tolerance);

/// identity x ... x op (at `site`) x ... x identity. Sites are 1-based.
SpinOperator embed_single(const Matrix2& op, int site, const HilbertSpace& space);

/// Two-site embedding; equals embed_single(a, i) * embed_single(b, j).
SpinOperator embed_pair(const Matrix2& a, const Matrix2& b, int i, int j,
                        const HilbertSpace& space);

/// Sum of sigma^z over all sites (diagonal).
SpinOperator total_sigma_z(const HilbertSpace& space);

/// Operator mapping site i to site N+1-i.
SpinOperator site_reversal(const HilbertSpace& space);

StateVector product_state(std::span<const Spin> pattern);
StateVector product_state(std::span<const Spin> pattern, const HilbertSpace& space);

/// Parses a pattern such as "udud" or "↑↓↑↓" (u/U/+/↑ for up, d/D/-/↓ for down).
std::vector<Spin> parse_spin_pattern(std::string_view text);
std::string format_spin_pattern(std::span<const Spin> pattern);

/// Neel pattern up, down, up, ... of length n.
std::vector<Spin> antiferromagnetic_pattern(int n_sites);

Complex expectation(const SpinOperator& op, const StateVector& psi);
Complex expectation(const SpinOperator& op, const DensityMatrix& rho);

}  // namespace dtc
