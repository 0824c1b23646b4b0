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

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "dtc/spin_algebra.hpp"

namespace dtc::oracle {

// Column-stacked Liouvillian: vec(A rho B) = (B^T kron A) vec(rho).
inline Matrix liouvillian(const Matrix& h, const std::vector<Matrix>& jumps) {
  const Index d = h.rows();
  const Matrix id = Matrix::Identity(d, d);
  const Complex mi(0.0, -1.0);
  Matrix l = mi * (Eigen::kroneckerProduct(id, h).eval() -
                   Eigen::kroneckerProduct(h.transpose(), id).eval());
  for (const Matrix& j : jumps) {
    const Matrix jj = j.adjoint() * j;
    l += Eigen::kroneckerProduct(j.conjugate(), j).eval();
    l -= 0.5 * Eigen::kroneckerProduct(id, jj).eval();
    l -= 0.5 * Eigen::kroneckerProduct(jj.transpose(), id).eval();
  }
  return l;
}

inline Vector vec(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

inline Matrix unvec(const Vector& v, Index d) { return Eigen::Map<const Matrix>(v.data(), d, d); }

struct OracleDrive {
  Matrix h_free;
  Matrix h_pulse;                 // used during [nT - width, nT]
  double width = 0.0;
  std::optional<Matrix> kick;     // applied at t = nT when width == 0
};

// Piecewise-constant superoperator propagation sampled at k T / spp.
inline std::vector<Matrix> oracle_states(const Matrix& rho0, const OracleDrive& drive,
                                         const std::vector<Matrix>& jumps, double period,
                                         int n_periods, int spp) {
  const Index d = rho0.rows();
  const Matrix lf = liouvillian(drive.h_free, jumps);
  const Matrix lp = liouvillian(drive.h_pulse, jumps);
  const double eps = 1e-9 * period;
  Vector v = vec(rho0);
  double c = 0.0;
  std::vector<Matrix> out;
  for (int k = 0; k <= n_periods * spp; ++k) {
    const double target = period * k / spp;
    while (c < target - eps) {
      const double n = std::floor((c + eps) / period);
      const double period_end = (n + 1) * period;
      const double boundary = period_end - drive.width;
      double end;
      if (c < boundary - eps) {
        end = std::min(target, boundary);
        v = (lf * (end - c)).exp() * v;
      } else {
        end = std::min(target, period_end);
        v = (lp * (end - c)).exp() * v;
      }
      c = end;
      if (drive.kick && std::abs(c - period_end) < eps) {
        v = vec((*drive.kick) * unvec(v, d) * drive.kick->adjoint());
      }
    }
    out.push_back(unvec(v, d));
  }
  return out;
}

}  // namespace dtc::oracle
