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

#ifndef FUZZYQM_CREP_HPP
#define FUZZYQM_CREP_HPP

#include <span>
#include <vector>

#include "fuzzyqm/cext.hpp"
#include "fuzzyqm/qcore.hpp"

namespace fuzzyqm {

/// Minimal informationally complete POVM built from N = n^2 pure states:
/// effects E_i = c_i |w_i><w_i| with positive weights c_i summing to the
/// identity. Symmetric frames (the qubit SIC) use the equal weight n/N.
///
/// The Gram matrix G_ij = tr(E_i E_j) is cached together with its spectral
/// factorization; all frame solves go through it.
class MinimalICPOVM {
public:
  MinimalICPOVM(std::vector<PureState> vectors, std::vector<double> weights);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(vectors_.size()); } // N = n^2
  const PureState &vector(int i) const { return vectors_[i]; }
  double weight(int i) const { return weights_[i]; }
  const std::vector<PureState> &vectors() const { return vectors_; }
  const std::vector<double> &weights() const { return weights_; }

  Effect effect(int i) const;

  const RealMatrix &gram() const { return gram_; }
  double gram_condition() const { return gram_condition_; }

  /// Solves G x = rhs by the cached spectral factorization plus one step of
  /// iterative refinement. No regularization: negativity in the solution is
  /// signal, not noise.
  RealVector solve_gram(const RealVector &rhs) const;

private:
  int dim_;
  std::vector<PureState> vectors_;
  std::vector<double> weights_;
  RealMatrix gram_;
  RealMatrix gram_eigvecs_;
  RealVector gram_eigvals_;
  double gram_condition_;
};

/// Expansion coefficients rho_i of a state over a minimal frame,
/// rho = sum_i rho_i E_i. A pseudo probability distribution: real,
/// normalized against the frame traces, possibly negative.
struct PseudoDistribution {
  RealVector values;
  double min_value;
  bool has_negative; // any value below -1e-10
};

/// Finite Monte Carlo stand-in for the uniform POVM: N Haar atoms with
/// effect weight n/N each.
struct UniformPOVMSample {
  int dim;
  std::vector<PureState> atoms;
  double weight;             // n/N
  double identity_deviation; // ||(n/N) sum |w><w| - 1||_F
};

/// The qubit SIC-POVM: four tetrahedral Bloch vectors, weight 1/2 each.
MinimalICPOVM sic_qubit();

/// Random minimal IC-POVM: n^2 Haar vectors whitened by the inverse square
/// root of their frame operator, redrawn until the Gram condition number is
/// below 1e8 (at most 100 retries).
MinimalICPOVM random_ic_povm(int n, Rng &rng);
MinimalICPOVM random_ic_povm(int n, std::uint64_t seed);

/// The classical representation of rho: probabilities p_i = tr(rho E_i).
RealVector representation_probabilities(const DensityOperator &rho,
                                        const MinimalICPOVM &frame);

/// Inverts the representation: solves G c = p and returns sum_i c_i E_i.
/// Tolerates up to 1e-8 of trace/positivity error (projected away), beyond
/// which the input is rejected as NotAState.
DensityOperator reconstruct(const RealVector &probabilities,
                            const MinimalICPOVM &frame);

/// Frame expansion coefficients of rho, with negativity report.
PseudoDistribution pseudo_distribution(const DensityOperator &rho,
                                       const MinimalICPOVM &frame);

/// Frame expansion coefficients of an effect, E_d = sum_i e_i E_i. The
/// result is generally not a classical effect: entries may be negative or
/// exceed one.
RealVector effect_expansion(const Effect &effect, const MinimalICPOVM &frame);

UniformPOVMSample uniform_povm_sample(int n, int count, Rng &rng);
UniformPOVMSample uniform_povm_sample(int n, int count, std::uint64_t seed);

/// The density <w|rho|w> of rho's classical representation at w.
double uniform_density(const DensityOperator &rho, const PureState &omega);

/// The smearing kernel S(w, w~) = |<w|w~>|^2.
double smearing_kernel(const PureState &omega, const PureState &omega_tilde);

/// Max over test points of |<w~|R(p)|w~> - sum_k w_k S(w_k, w~)|. The two
/// sides are computed independently; the identity is exact on atoms.
double smearing_check(const ClassicalState &p,
                      std::span<const PureState> test_points);

} // namespace fuzzyqm

#endif // FUZZYQM_CREP_HPP
