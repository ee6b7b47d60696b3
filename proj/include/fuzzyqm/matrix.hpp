// Copyright 2026 The fuzzyqm developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FUZZYQM_MATRIX_HPP
#define FUZZYQM_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>

namespace fuzzyqm {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Numerical tolerances shared across the library. Double-precision spectral
/// decompositions of n <= 16 matrices keep errors well below these.
namespace tol {
inline constexpr double hermitian = 1e-10;      // Hermiticity / trace / norm
inline constexpr double psd = 1e-10;            // eigenvalue positivity slack
inline constexpr double povm = 1e-9;            // POVM completeness (entrywise)
inline constexpr double zero = 1e-12;           // probabilities treated as zero
inline constexpr double reconstruction = 1e-10; // decomposition multiply-back
inline constexpr double atom_prune = 1e-14;     // classical atom weight floor
} // namespace tol

inline bool is_hermitian(const ComplexMatrix &m, double eps = tol::hermitian) {
  if (m.rows() != m.cols())
    return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= eps;
}

inline double frobenius_distance(const ComplexMatrix &a,
                                 const ComplexMatrix &b) {
  return (a - b).norm();
}

/// Kronecker product a (x) b.
inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Rotates a vector's global phase so its first nonzero entry is real
/// positive. Identically zero vectors are returned unchanged.
ComplexVector fix_global_phase(ComplexVector v);

} // namespace fuzzyqm

#endif // FUZZYQM_MATRIX_HPP
