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

#ifndef FUZZYQM_CEXT_HPP
#define FUZZYQM_CEXT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fuzzyqm/qcore.hpp"

namespace fuzzyqm {

/// One atom of a finite classical probability measure over pure states.
struct Atom {
  double weight;
  PureState state;
};

/// Finite atomic probability measure over the pure states of an
/// n-dimensional system: the classical states of the extended state space.
///
/// Weights below 1e-14 are pruned on construction and the rest renormalized,
/// so eigen-decompositions never leave degenerate zero-weight atoms behind.
class ClassicalState {
public:
  ClassicalState(int dim, std::vector<Atom> atoms);

  static ClassicalState delta(const PureState &omega);

  int dim() const { return dim_; }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<Atom> &atoms() const { return atoms_; }
  const Atom &atom(std::size_t k) const { return atoms_[k]; }

  /// Structural hash of the atom list; tabulated effects are only valid
  /// against the exact atom set they were built from.
  std::uint64_t fingerprint() const { return fingerprint_; }

private:
  int dim_;
  std::vector<Atom> atoms_;
  std::uint64_t fingerprint_;
};

/// Classical effect: a map from pure states to [0, 1].
///
/// Induced effects e(w) = <w|E|w> (and their pointwise products) evaluate
/// anywhere; tabulated effects carry values on one fixed atom set only.
class ClassicalEffect {
public:
  static ClassicalEffect induced(const Effect &effect);

  /// Constant effect (the classical unit is constant(n, 1.0)).
  static ClassicalEffect constant(int dim, double value);

  /// Values bound to the given state's atom list.
  static ClassicalEffect tabulated(const ClassicalState &basis,
                                   std::vector<double> values);

  /// Pointwise product g(w) = a(w) b(w). Tabulated operands must share the
  /// same atom set; tabulated and pointwise operands cannot be mixed.
  static ClassicalEffect product(const ClassicalEffect &a,
                                 const ClassicalEffect &b);

  int dim() const { return dim_; }
  bool is_tabulated() const { return !table_.empty(); }

  /// Pointwise evaluation; throws AtomSetMismatch on tabulated effects.
  double value(const PureState &omega) const;

  const std::vector<double> &table() const { return table_; }
  std::uint64_t table_fingerprint() const { return table_fingerprint_; }

private:
  ClassicalEffect() = default;

  int dim_ = 0;
  std::function<double(const PureState &)> eval_; // empty iff tabulated
  std::vector<double> table_;
  std::uint64_t table_fingerprint_ = 0;
};

/// Outcome-indexed classical effects forming an observable, optionally with
/// real outcome values for moment computations. The effects must partition
/// unity; this is spot-checked on fixed probe states at construction.
class FuzzyObservable {
public:
  explicit FuzzyObservable(
      std::vector<ClassicalEffect> effects,
      std::optional<std::vector<double>> outcome_values = std::nullopt);

  /// The induced observable of a POVM: effects e_d(w) = <w|E_d|w>.
  static FuzzyObservable
  c_representative(const DiscretePOVM &povm,
                   std::optional<std::vector<double>> outcome_values =
                       std::nullopt);

  int dim() const { return effects_.front().dim(); }
  std::size_t size() const { return effects_.size(); }
  const ClassicalEffect &effect(std::size_t d) const { return effects_[d]; }
  const std::optional<std::vector<double>> &outcome_values() const {
    return outcome_values_;
  }

private:
  std::vector<ClassicalEffect> effects_;
  std::optional<std::vector<double>> outcome_values_;
};

/// The reduction map R: sum_k w_k |w_k><w_k|. Affine and many-to-one.
DensityOperator reduce(const ClassicalState &p);

/// The c-effect induced by a q-effect, e(w) = <w|E|w>.
ClassicalEffect induced_effect(const Effect &effect);

/// sum_k w_k e(w_k).
double classical_expectation(const ClassicalState &p,
                             const ClassicalEffect &e);

/// |tr(R(p) E) - <induced effect>_p|; zero up to rounding for every pair.
double statistics_gap(const ClassicalState &p, const Effect &effect);

/// Canonical preimage of rho: its spectral decomposition as an atomic
/// measure, zero eigenvalues dropped.
ClassicalState eigen_decomposition_state(const DensityOperator &rho);

/// A random convex decomposition of rho into m >= rank(rho) pure states,
/// obtained by mixing the eigen-decomposition through a random isometry.
/// m == rank returns the eigen-decomposition itself.
ClassicalState random_decomposition(const DensityOperator &rho, int m,
                                    Rng &rng);
ClassicalState random_decomposition(const DensityOperator &rho, int m,
                                    std::uint64_t seed);

/// Product joint observable g_{d,d'}(w) = e_d(w) f_{d'}(w); marginals
/// recover the factors exactly. Outcomes are ordered row-major (d outer).
FuzzyObservable joint_observable(const FuzzyObservable &a,
                                 const FuzzyObservable &b);

/// Variance of the outcome values under p: sum x_d^2 q_d - (sum x_d q_d)^2.
double dispersion(const ClassicalState &p, const FuzzyObservable &obs);

} // namespace fuzzyqm

#endif // FUZZYQM_CEXT_HPP
