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

#include "fuzzyqm/update.hpp"

#include <cmath>

namespace fuzzyqm {

BayesComponent bayes_component(const DensityOperator &rho,
                               const Effect &effect, int outcome) {
  if (rho.dim() != effect.dim())
    throw DimensionMismatch("bayes_component: dimension mismatch");
  const ComplexMatrix root = matrix_sqrt(rho.matrix());
  ComplexMatrix term = root * effect.matrix() * root;
  term = 0.5 * (term + ComplexMatrix(term.adjoint()));
  return BayesComponent{outcome, term, term.trace().real()};
}

Readjustment readjustment(const DensityOperator &rho,
                          const ComplexMatrix &kraus) {
  if (rho.dim() != kraus.rows() || kraus.rows() != kraus.cols())
    throw DimensionMismatch("readjustment: dimension mismatch");
  const ComplexMatrix root = matrix_sqrt(rho.matrix());
  const PolarDecomposition polar = polar_decompose(kraus * root);

  // Transport check: V (sqrt(rho) E_d sqrt(rho)) V* == A_d rho A_d*.
  const ComplexMatrix bayes_term = polar.positive * polar.positive;
  const ComplexMatrix transported =
      polar.unitary * bayes_term * polar.unitary.adjoint();
  const ComplexMatrix direct = kraus * rho.matrix() * kraus.adjoint();
  const double residual = (transported - direct).norm();
  return Readjustment{polar.unitary, residual,
                      residual <= tol::reconstruction};
}

BayesUpdateResult classical_bayes_update(const ClassicalState &p,
                                         const ClassicalEffect &e) {
  if (p.dim() != e.dim())
    throw DimensionMismatch("classical_bayes_update: dimension mismatch");
  const std::size_t count = p.size();
  std::vector<double> likelihood(count);
  double evidence = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    likelihood[k] = e.is_tabulated() ? e.table()[k] : e.value(p.atom(k).state);
    evidence += p.atom(k).weight * likelihood[k];
  }
  if (e.is_tabulated() && e.table_fingerprint() != p.fingerprint())
    throw AtomSetMismatch(
        "classical_bayes_update: tabulated effect bound to another atom set");
  if (evidence <= tol::zero)
    throw ZeroEvidence("classical_bayes_update: evidence " +
                       std::to_string(evidence));
  std::vector<Atom> atoms;
  atoms.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double w = p.atom(k).weight * likelihood[k] / evidence;
    if (w > 0.0)
      atoms.push_back(Atom{w, p.atom(k).state});
  }
  return BayesUpdateResult{ClassicalState(p.dim(), std::move(atoms)),
                           evidence};
}

std::optional<PureState> disturbance_map(const ComplexMatrix &kraus,
                                         const PureState &omega) {
  if (kraus.cols() != omega.dim())
    throw DimensionMismatch("disturbance_map: dimension mismatch");
  ComplexVector mapped = kraus * omega.amplitudes();
  const double norm2 = mapped.squaredNorm();
  if (norm2 <= tol::zero)
    return std::nullopt;
  return PureState(mapped / std::sqrt(norm2));
}

UpdateReport extension_update(const ClassicalState &p,
                              const ComplexMatrix &kraus, int outcome) {
  if (kraus.rows() != kraus.cols() || kraus.rows() != p.dim())
    throw DimensionMismatch("extension_update: dimension mismatch");
  ComplexMatrix measured = kraus.adjoint() * kraus;
  measured = 0.5 * (measured + ComplexMatrix(measured.adjoint()));
  const Effect effect(measured); // A_d* A_d, an effect for any valid A_d
  BayesUpdateResult bayes =
      classical_bayes_update(p, ClassicalEffect::induced(effect));

  std::vector<Atom> disturbed_atoms;
  disturbed_atoms.reserve(bayes.posterior.size());
  for (const Atom &a : bayes.posterior.atoms()) {
    std::optional<PureState> moved = disturbance_map(kraus, a.state);
    if (!moved)
      continue; // annihilated atoms carry zero posterior weight
    disturbed_atoms.push_back(Atom{a.weight, *moved});
  }
  ClassicalState disturbed(p.dim(), std::move(disturbed_atoms));

  const ApplyResult quantum = apply_operation(reduce(p), kraus);
  const double residual =
      frobenius_distance(reduce(disturbed).matrix(), quantum.state.matrix());
  return UpdateReport{outcome,        p,
                      bayes.posterior, std::move(disturbed),
                      quantum.state,  residual};
}

EffectEigenExpansion effect_eigen_expansion(const Effect &effect) {
  SpectralDecomposition sd = spectral_decompose(effect.matrix());
  EffectEigenExpansion out{effect, {}, {}};
  for (Eigen::Index k = 0; k < sd.eigenvalues.size(); ++k) {
    double c = sd.eigenvalues[k];
    if (c <= tol::atom_prune)
      continue;
    out.values.push_back(std::min(c, 1.0));
    out.states.push_back(PureState(sd.eigenvectors.col(k)));
  }
  return out;
}

std::optional<PureState> sigma_map(const DensityOperator &rho,
                                   const PureState &omega) {
  if (rho.dim() != omega.dim())
    throw DimensionMismatch("sigma_map: dimension mismatch");
  ComplexVector mapped = matrix_sqrt(rho.matrix()) * omega.amplitudes();
  const double norm2 = mapped.squaredNorm();
  if (norm2 <= tol::zero)
    return std::nullopt;
  return PureState(mapped / std::sqrt(norm2));
}

double representation_update(const DensityOperator &rho, const Effect &effect,
                             std::span<const PureState> test_points) {
  if (rho.dim() != effect.dim())
    throw DimensionMismatch("representation_update: dimension mismatch");
  const ComplexMatrix root = matrix_sqrt(rho.matrix());
  const ComplexMatrix bayes_term = root * effect.matrix() * root;
  const EffectEigenExpansion expansion = effect_eigen_expansion(effect);

  // Per-atom factors: the prior density rho(v_k) and the smeared atom
  // sigma(v_k). Annihilated atoms contribute zero on both sides.
  struct Term {
    double coefficient; // c_k * rho(v_k)
    PureState sigma;
  };
  std::vector<Term> terms;
  for (std::size_t k = 0; k < expansion.values.size(); ++k) {
    std::optional<PureState> sigma = sigma_map(rho, expansion.states[k]);
    if (!sigma)
      continue;
    const double density =
        (expansion.states[k].amplitudes().adjoint() * rho.matrix() *
         expansion.states[k].amplitudes())(0)
            .real();
    terms.push_back(Term{expansion.values[k] * density, *sigma});
  }

  double worst = 0.0;
  for (const PureState &probe : test_points) {
    const double lhs = (probe.amplitudes().adjoint() * bayes_term *
                        probe.amplitudes())(0)
                           .real();
    double rhs = 0.0;
    for (const Term &t : terms)
      rhs += t.coefficient * t.sigma.overlap(probe);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

CollapseReport full_collapse_decomposition(const DensityOperator &rho,
                                           const KrausOperation &operation) {
  if (rho.dim() != operation.dim())
    throw DimensionMismatch("full_collapse_decomposition: dim mismatch");
  CollapseReport report;
  ComplexMatrix mixture = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (std::size_t d = 0; d < operation.size(); ++d) {
    BayesComponent component =
        bayes_component(rho, operation.effect(d), static_cast<int>(d));
    mixture += component.matrix;

    CollapseOutcome outcome;
    outcome.outcome = static_cast<int>(d);
    outcome.probability = component.weight;
    outcome.bayes_term = component.matrix;
    outcome.skipped = component.weight <= tol::zero;
    if (!outcome.skipped) {
      ComplexMatrix posterior = component.matrix / component.weight;
      posterior = 0.5 * (posterior + ComplexMatrix(posterior.adjoint()));
      outcome.bayes_posterior = DensityOperator(posterior);
      outcome.readjustment = readjustment(rho, operation[d]);
      outcome.final_state = apply_operation(rho, operation[d]).state;
    }
    report.outcomes.push_back(std::move(outcome));
  }
  report.mixture_residual = (mixture - rho.matrix()).norm();
  return report;
}

} // namespace fuzzyqm
