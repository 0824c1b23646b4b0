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

#include "dtc/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace dtc {

namespace {

void check_site(int site, const HilbertSpace& space) {
  if (site < 1 || site > space.n_sites()) {
    throw std::out_of_range("site " + std::to_string(site) + " outside 1.." +
                            std::to_string(space.n_sites()));
  }
}

}  // namespace

HilbertSpace::HilbertSpace(int n_sites) : n_sites_(n_sites), dim_(0) {
  if (n_sites < 1) {
    throw std::invalid_argument("HilbertSpace needs at least one site");
  }
  if (n_sites > 12) {
    throw std::invalid_argument("HilbertSpace dimension exceeds 4096 (n_sites=" +
                                std::to_string(n_sites) + ")");
  }
  dim_ = Index{1} << n_sites;
}

Matrix2 pauli(Axis axis) {
  const Complex i(0.0, 1.0);
  Matrix2 m = Matrix2::Zero();
  switch (axis) {
    case Axis::x:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Axis::y:
      m(0, 1) = -i;
      m(1, 0) = i;
      break;
    case Axis::z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    case Axis::plus:
      m(0, 1) = 1.0;
      break;
    case Axis::minus:
      m(1, 0) = 1.0;
      break;
    case Axis::identity:
      m = Matrix2::Identity();
      break;
  }
  return m;
}

// --- StateVector ------------------------------------------------------------

StateVector::StateVector(HilbertSpace space, Vector amplitudes)
    : space_(space), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_.dim()) {
    throw std::invalid_argument("state length " + std::to_string(amplitudes_.size()) +
                                " does not match dimension " + std::to_string(space_.dim()));
  }
  const double norm = amplitudes_.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > tol::kStateNorm) {
    throw std::invalid_argument("state is not normalized (norm=" + std::to_string(norm) + ")");
  }
}

StateVector StateVector::normalized(HilbertSpace space, Vector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite state");
  }
  amplitudes /= norm;
  return StateVector(space, std::move(amplitudes));
}

// --- DensityMatrix ----------------------------------------------------------

DensityMatrix::DensityMatrix(HilbertSpace space, Matrix matrix, TrustedTag)
    : space_(space), matrix_(std::move(matrix)) {
  if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim()) {
    throw std::invalid_argument("density matrix shape does not match the Hilbert space");
  }
}

DensityMatrix::DensityMatrix(HilbertSpace space, Matrix matrix)
    : DensityMatrix(space, std::move(matrix), TrustedTag{}) {
  if (!is_hermitian(matrix_, tol::kDensityHermitian)) {
    throw std::invalid_argument("density matrix is not hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::kDensityTrace) {
    throw std::invalid_argument("density matrix trace " + std::to_string(tr.real()) + " != 1");
  }
  const double lo = min_eigenvalue();
  if (lo < -tol::kDensityPositivity) {
    throw std::invalid_argument("density matrix has negative eigenvalue " + std::to_string(lo));
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const Vector& a = psi.amplitudes();
  return DensityMatrix(psi.space(), a * a.adjoint(), TrustedTag{});
}

DensityMatrix DensityMatrix::maximally_mixed(const HilbertSpace& space) {
  Matrix m = Matrix::Identity(space.dim(), space.dim()) / static_cast<double>(space.dim());
  return DensityMatrix(space, std::move(m), TrustedTag{});
}

DensityMatrix DensityMatrix::trusted(HilbertSpace space, Matrix matrix) {
  return DensityMatrix(space, std::move(matrix), TrustedTag{});
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

// --- SpinOperator -----------------------------------------------------------

SpinOperator::SpinOperator(HilbertSpace space, Matrix matrix)
    : space_(space), matrix_(std::move(matrix)), hermitian_(false) {
  if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim()) {
    throw std::invalid_argument("operator shape does not match the Hilbert space");
  }
  hermitian_ = dtc::is_hermitian(matrix_, tol::kHermitian);
}

SpinOperator SpinOperator::identity(const HilbertSpace& space) {
  return SpinOperator(space, Matrix::Identity(space.dim(), space.dim()));
}

SpinOperator SpinOperator::zero(const HilbertSpace& space) {
  return SpinOperator(space, Matrix::Zero(space.dim(), space.dim()));
}

SpinOperator SpinOperator::adjoint() const { return SpinOperator(space_, matrix_.adjoint()); }

void SpinOperator::check_same_space(const SpinOperator& other) const {
  if (!(space_ == other.space_)) {
    throw std::invalid_argument("operators act on different Hilbert spaces");
  }
}

SpinOperator& SpinOperator::operator+=(const SpinOperator& other) {
  check_same_space(other);
  matrix_ += other.matrix_;
  hermitian_ = dtc::is_hermitian(matrix_, tol::kHermitian);
  return *this;
}

SpinOperator& SpinOperator::operator-=(const SpinOperator& other) {
  check_same_space(other);
  matrix_ -= other.matrix_;
  hermitian_ = dtc::is_hermitian(matrix_, tol::kHermitian);
  return *this;
}

SpinOperator& SpinOperator::operator*=(Complex factor) {
  matrix_ *= factor;
  hermitian_ = dtc::is_hermitian(matrix_, tol::kHermitian);
  return *this;
}

SpinOperator operator*(const SpinOperator& a, const SpinOperator& b) {
  a.check_same_space(b);
  return SpinOperator(a.space_, a.matrix_ * b.matrix_);
}

Vector SpinOperator::apply(const StateVector& psi) const {
  if (!(psi.space() == space_)) {
    throw std::invalid_argument("state and operator dimensions differ");
  }
  return matrix_ * psi.amplitudes();
}

SpinOperator commutator(const SpinOperator& a, const SpinOperator& b) { return a * b - b * a; }

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tolerance;
}

// --- embeddings -------------------------------------------------------------

SpinOperator embed_single(const Matrix2& op, int site, const HilbertSpace& space) {
  check_site(site, space);
  const Index dim = space.dim();
  const int shift = space.bit_of(site);
  const Index mask = Index{1} << shift;
  Matrix m = Matrix::Zero(dim, dim);
  for (Index col = 0; col < dim; ++col) {
    const int in_bit = static_cast<int>((col >> shift) & 1);
    for (int out_bit = 0; out_bit < 2; ++out_bit) {
      const Complex v = op(out_bit, in_bit);
      if (v == Complex(0.0, 0.0)) continue;
      const Index row = (col & ~mask) | (static_cast<Index>(out_bit) << shift);
      m(row, col) = v;
    }
  }
  return SpinOperator(space, std::move(m));
}

SpinOperator embed_pair(const Matrix2& a, const Matrix2& b, int i, int j,
                        const HilbertSpace& space) {
  check_site(i, space);
  check_site(j, space);
  if (i == j) {
    throw std::invalid_argument("embed_pair needs two distinct sites");
  }
  const Index dim = space.dim();
  const int si = space.bit_of(i);
  const int sj = space.bit_of(j);
  const Index clear = ~((Index{1} << si) | (Index{1} << sj));
  Matrix m = Matrix::Zero(dim, dim);
  for (Index col = 0; col < dim; ++col) {
    const int ci = static_cast<int>((col >> si) & 1);
    const int cj = static_cast<int>((col >> sj) & 1);
    for (int ri = 0; ri < 2; ++ri) {
      const Complex va = a(ri, ci);
      if (va == Complex(0.0, 0.0)) continue;
      for (int rj = 0; rj < 2; ++rj) {
        const Complex vb = b(rj, cj);
        if (vb == Complex(0.0, 0.0)) continue;
        const Index row =
            (col & clear) | (static_cast<Index>(ri) << si) | (static_cast<Index>(rj) << sj);
        m(row, col) = va * vb;
      }
    }
  }
  return SpinOperator(space, std::move(m));
}

SpinOperator total_sigma_z(const HilbertSpace& space) {
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  for (Index b = 0; b < space.dim(); ++b) {
    int ups = 0;
    for (int s = 1; s <= space.n_sites(); ++s) {
      if (((b >> space.bit_of(s)) & 1) == 0) ++ups;
    }
    m(b, b) = static_cast<double>(2 * ups - space.n_sites());
  }
  return SpinOperator(space, std::move(m));
}

SpinOperator site_reversal(const HilbertSpace& space) {
  const int n = space.n_sites();
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  for (Index b = 0; b < space.dim(); ++b) {
    Index r = 0;
    for (int k = 0; k < n; ++k) {
      if ((b >> k) & 1) r |= Index{1} << (n - 1 - k);
    }
    m(r, b) = 1.0;
  }
  return SpinOperator(space, std::move(m));
}

// --- states -----------------------------------------------------------------

StateVector product_state(std::span<const Spin> pattern) {
  return product_state(pattern, HilbertSpace(static_cast<int>(pattern.size())));
}

StateVector product_state(std::span<const Spin> pattern, const HilbertSpace& space) {
  if (static_cast<int>(pattern.size()) != space.n_sites()) {
    throw std::invalid_argument("pattern length " + std::to_string(pattern.size()) +
                                " != n_sites " + std::to_string(space.n_sites()));
  }
  Index index = 0;
  for (int s = 1; s <= space.n_sites(); ++s) {
    if (pattern[static_cast<std::size_t>(s - 1)] == Spin::down) {
      index |= Index{1} << space.bit_of(s);
    }
  }
  Vector v = Vector::Zero(space.dim());
  v[index] = 1.0;
  return StateVector(space, std::move(v));
}

std::vector<Spin> parse_spin_pattern(std::string_view text) {
  std::vector<Spin> out;
  for (std::size_t k = 0; k < text.size();) {
    const char c = text[k];
    if (c == 'u' || c == 'U' || c == '+') {
      out.push_back(Spin::up);
      ++k;
    } else if (c == 'd' || c == 'D' || c == '-') {
      out.push_back(Spin::down);
      ++k;
    } else if (text.substr(k, 3) == "↑") {
      out.push_back(Spin::up);
      k += 3;
    } else if (text.substr(k, 3) == "↓") {
      out.push_back(Spin::down);
      k += 3;
    } else if (c == ' ' || c == ',') {
      ++k;
    } else {
      throw std::invalid_argument("unrecognized spin symbol in pattern '" + std::string(text) +
                                  "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty spin pattern");
  return out;
}

std::string format_spin_pattern(std::span<const Spin> pattern) {
  std::string s;
  for (Spin x : pattern) s.push_back(x == Spin::up ? 'u' : 'd');
  return s;
}

std::vector<Spin> antiferromagnetic_pattern(int n_sites) {
  std::vector<Spin> p;
  for (int s = 0; s < n_sites; ++s) p.push_back(s % 2 == 0 ? Spin::up : Spin::down);
  return p;
}

// --- expectations -----------------------------------------------------------

Complex expectation(const SpinOperator& op, const StateVector& psi) {
  if (!(op.space() == psi.space())) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  return psi.amplitudes().dot(op.matrix() * psi.amplitudes());
}

Complex expectation(const SpinOperator& op, const DensityMatrix& rho) {
  if (!(op.space() == rho.space())) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  // Tr(rho O) without forming the product.
  return rho.matrix().transpose().cwiseProduct(op.matrix()).sum();
}

}  // namespace dtc
