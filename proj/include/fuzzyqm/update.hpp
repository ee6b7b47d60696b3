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

#ifndef FUZZYQM_UPDATE_HPP
#define FUZZYQM_UPDATE_HPP

#include <optional>
#include <span>
#include <vector>

#include "fuzzyqm/cext.hpp"
#include "fuzzyqm/qcore.hpp"

namespace fuzzyqm {

/// The selected term sqrt(rho) E_d sqrt(rho) in the convex resolution of rho
/// over a POVM, carrying its outcome weight tr(rho E_d).
struct BayesComponent {
  int outcome;          // -1 when not tied to a POVM index
  ComplexMatrix matrix; // unnormalized, PSD, trace == weight
  double weight;
};

/// Polar factor transporting the Bayes component to the true
/// post-measurement state, with its verified transport residual.
struct Readjustment {
  ComplexMatrix isometry; // unitary (deterministically completed)
  double transport_residual;
  bool verified; // residual within tolerance
};

/// Posterior of a classical Bayes step together with its evidence.
struct BayesUpdateResult {
  ClassicalState posterior;
  double evidence;
};

/// Full record of one measurement update in the classical extension:
/// Bayes against the induced effect, then the disturbance of the atoms.
struct UpdateReport {
  int outcome;
  ClassicalState prior;
  ClassicalState posterior; // after Bayes, atoms unchanged
  ClassicalState disturbed; // after the atom map
  DensityOperator target;   // A_d rho A_d* / tr(rho E_d)
  double residual;          // ||R(disturbed) - target||_F
};

/// Discrete atomic realization of an effect as a classical-effect mixture of
/// projectors: E_d = sum_k c_k |v_k><v_k| with c_k in [0, 1].
struct EffectEigenExpansion {
  Effect effect;
  std::vector<double> values;    // c_k
  std::vector<PureState> states; // v_k
};

/// One outcome of a full collapse decomposition.
struct CollapseOutcome {
  int outcome;
  bool skipped; // outcome probability at numerical zero
  double probability;
  ComplexMatrix bayes_term; // sqrt(rho) E_d sqrt(rho)
  std::optional<DensityOperator> bayes_posterior;
  std::optional<Readjustment> readjustment;
  std::optional<DensityOperator> final_state; // A_d rho A_d* / p_d
};

struct CollapseReport {
  std::vector<CollapseOutcome> outcomes;
  double mixture_residual; // ||sum_d bayes_term_d - rho||_F
};

/// sqrt(rho) E_d sqrt(rho): PSD, trace tr(rho E_d); summing over a POVM
/// reproduces rho.
BayesComponent bayes_component(const DensityOperator &rho,
                               const Effect &effect, int outcome = -1);

/// Polar factor V_d of A_d sqrt(rho), verified to transport
/// sqrt(rho) E_d sqrt(rho) onto A_d rho A_d*. A residual above tolerance is
/// flagged, not thrown: for degenerate rho the completion on the kernel is
/// arbitrary while the transport on the support still holds.
Readjustment readjustment(const DensityOperator &rho,
                          const ComplexMatrix &kraus);

/// Classical Bayes rule: w_k -> w_k e(w_k) / evidence, atoms unchanged.
BayesUpdateResult classical_bayes_update(const ClassicalState &p,
                                         const ClassicalEffect &e);

/// The disturbance map alpha: A_d |w> normalized, or nothing when the atom
/// is annihilated. Depends only on the operation, not on any state.
std::optional<PureState> disturbance_map(const ComplexMatrix &kraus,
                                         const PureState &omega);

/// Measurement update in the classical extension: Bayes with the induced
/// effect <w|A_d* A_d|w>, then the disturbance map on each surviving atom.
/// The reduced disturbed state reproduces the quantum collapse output.
UpdateReport extension_update(const ClassicalState &p,
                              const ComplexMatrix &kraus, int outcome = -1);

/// Spectral realization of an effect as a classical mixture of projectors.
EffectEigenExpansion effect_eigen_expansion(const Effect &effect);

/// sigma: sqrt(rho) |w> normalized, or nothing when annihilated.
std::optional<PureState> sigma_map(const DensityOperator &rho,
                                   const PureState &omega);

/// Checks the Bayes-then-smear identity in the classical representation:
/// at each test point w~, <w~|sqrt(rho) E_d sqrt(rho)|w~> must equal
/// sum_k c_k rho(v_k) |<w~|sigma(v_k)>|^2 over the effect's eigen-expansion.
/// Returns the max deviation over test points.
double representation_update(const DensityOperator &rho, const Effect &effect,
                             std::span<const PureState> test_points);

/// Per-outcome collapse decomposition: Bayes selection, readjustment, final
/// state, plus the mixture identity sum_d bayes_term_d = rho.
CollapseReport full_collapse_decomposition(const DensityOperator &rho,
                                           const KrausOperation &operation);

} // namespace fuzzyqm

#endif // FUZZYQM_UPDATE_HPP
