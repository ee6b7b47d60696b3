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

#ifndef FUZZYQM_QCORE_HPP
#define FUZZYQM_QCORE_HPP

#include <vector>

#include "fuzzyqm/errors.hpp"
#include "fuzzyqm/matrix.hpp"
#include "fuzzyqm/rng.hpp"

namespace fuzzyqm {

/// Unit vector in C^n, identified up to global phase.
///
/// The constructor validates the norm and fixes the phase (first nonzero
/// amplitude real positive) so that equal rays compare equal entrywise.
class PureState {
public:
  explicit PureState(ComplexVector amplitudes);

  int dim() const { return static_cast<int>(amp_.size()); }
  const ComplexVector &amplitudes() const { return amp_; }
  ComplexMatrix projector() const { return amp_ * amp_.adjoint(); }

  /// |<this|other>|^2.
  double overlap(const PureState &other) const;

private:
  ComplexVector amp_;
};

/// Positive unit-trace Hermitian matrix. Validated on construction;
/// operations may assume the invariants hold.
class DensityOperator {
public:
  explicit DensityOperator(ComplexMatrix matrix);

  static DensityOperator pure(const PureState &omega);
  static DensityOperator maximally_mixed(int n);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix &matrix() const { return mat_; }

  /// tr(rho^2), equals 1 exactly on pure states.
  double purity() const { return (mat_ * mat_).trace().real(); }

private:
  ComplexMatrix mat_;
};

/// Hermitian operator with spectrum in [0, 1].
class Effect {
public:
  explicit Effect(ComplexMatrix matrix);

  static Effect identity(int n);
  static Effect projector(const PureState &omega);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix &matrix() const { return mat_; }

  /// The complementary effect 1 - E.
  Effect complement() const;

private:
  ComplexMatrix mat_;
};

/// Outcome-indexed effects summing to the identity.
class DiscretePOVM {
public:
  explicit DiscretePOVM(std::vector<Effect> effects);

  int dim() const { return effects_.front().dim(); }
  std::size_t size() const { return effects_.size(); }
  const Effect &operator[](std::size_t d) const { return effects_[d]; }
  const std::vector<Effect> &effects() const { return effects_; }

private:
  std::vector<Effect> effects_;
};

/// Outcome-indexed Kraus operators A_d with sum_d A_d* A_d = 1.
class KrausOperation {
public:
  explicit KrausOperation(std::vector<ComplexMatrix> operators);

  int dim() const { return static_cast<int>(operators_.front().rows()); }
  std::size_t size() const { return operators_.size(); }
  const ComplexMatrix &operator[](std::size_t d) const {
    return operators_[d];
  }

  /// The effect A_d* A_d measured by outcome d.
  Effect effect(std::size_t d) const;
  DiscretePOVM povm() const;

private:
  std::vector<ComplexMatrix> operators_;
};

/// Eigen-decomposition with a deterministic ordering: eigenvalues descending,
/// eigenvector phases fixed, near-degenerate pairs ordered lexicographically
/// by entries. Input must be Hermitian within tolerance.
struct SpectralDecomposition {
  RealVector eigenvalues;     // descending
  ComplexMatrix eigenvectors; // unit columns, phase-fixed
};

SpectralDecomposition spectral_decompose(const ComplexMatrix &hermitian);

/// tr(rho E), with values in [-tol, 0) clamped to 0.
double born_probability(const DensityOperator &rho, const Effect &effect);

/// Unique PSD square root, via spectral decomposition. Eigenvalues in
/// [-tol, 0) are clamped to zero; anything lower is rejected.
ComplexMatrix matrix_sqrt(const ComplexMatrix &psd);

/// Polar decomposition m = unitary * positive with positive = (m* m)^(1/2).
/// For singular m the canonical polar factor is only a partial isometry; it
/// is completed to a full unitary deterministically, so `unitary` always
/// satisfies U* U = 1 and U * positive = m.
struct PolarDecomposition {
  ComplexMatrix unitary;
  ComplexMatrix positive;
};

PolarDecomposition polar_decompose(const ComplexMatrix &m);

/// Conditional post-measurement state for one Kraus operator.
struct ApplyResult {
  DensityOperator state; // A rho A* / tr(A rho A*)
  double probability;    // tr(A rho A*)
};

ApplyResult apply_operation(const DensityOperator &rho,
                            const ComplexMatrix &kraus);

/// Haar-distributed pure state: i.i.d. complex Gaussian amplitudes,
/// normalized.
PureState haar_random_state(int n, Rng &rng);
PureState haar_random_state(int n, std::uint64_t seed);

/// Full-rank random density matrix G G* / tr(G G*), G complex Gaussian.
DensityOperator random_density(int n, Rng &rng);
DensityOperator random_density(int n, std::uint64_t seed);

/// Haar-distributed unitary (QR of a complex Gaussian, R-phases absorbed).
ComplexMatrix random_unitary(int n, Rng &rng);

/// Random effect U diag(u_i) U* with u_i uniform in [0, 1].
Effect random_effect(int n, Rng &rng);

/// Random POVM: E_d = S^(-1/2) G_d G_d* S^(-1/2) with Gaussian G_d and
/// S the sum, so completeness is exact.
DiscretePOVM random_povm(int n, int outcomes, Rng &rng);

/// Lueders operators A_d = sqrt(E_d) for a POVM.
KrausOperation luders_operation(const DiscretePOVM &povm);

/// Twirled operators A_d = U_d sqrt(E_d) with independent Haar unitaries;
/// measures the same POVM but disturbs nontrivially.
KrausOperation twirled_operation(const DiscretePOVM &povm, Rng &rng);

/// Qubit state with the given Bloch vector (need not be normalized exactly).
PureState pure_state_from_bloch(double x, double y, double z);

} // namespace fuzzyqm

#endif // FUZZYQM_QCORE_HPP
