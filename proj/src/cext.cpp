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

#include "fuzzyqm/cext.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <memory>

namespace fuzzyqm {

namespace {

std::uint64_t fnv1a(const void *data, std::size_t bytes, std::uint64_t h) {
  const auto *p = static_cast<const unsigned char *>(data);
  for (std::size_t i = 0; i < bytes; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t hash_atoms(int dim, const std::vector<Atom> &atoms) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(&dim, sizeof(dim), h);
  for (const Atom &a : atoms) {
    h = fnv1a(&a.weight, sizeof(a.weight), h);
    h = fnv1a(a.state.amplitudes().data(),
              sizeof(std::complex<double>) * a.state.amplitudes().size(), h);
  }
  return h;
}

// Deterministic probe states for the partition-of-unity spot check.
const std::vector<PureState> &probe_states(int dim) {
  thread_local std::vector<std::pair<int, std::vector<PureState>>> cache;
  for (auto &entry : cache)
    if (entry.first == dim)
      return entry.second;
  Rng rng(0x50524f4245ULL + static_cast<std::uint64_t>(dim));
  std::vector<PureState> probes;
  for (int i = 0; i < 8; ++i)
    probes.push_back(haar_random_state(dim, rng));
  cache.emplace_back(dim, std::move(probes));
  return cache.back().second;
}

} // namespace

ClassicalState::ClassicalState(int dim, std::vector<Atom> atoms) : dim_(dim) {
  if (atoms.empty())
    throw ValidationError("ClassicalState: no atoms");
  double total = 0.0;
  for (const Atom &a : atoms) {
    if (a.state.dim() != dim_)
      throw DimensionMismatch("ClassicalState: atom dimension mismatch");
    if (a.weight <= 0.0)
      throw ValidationError("ClassicalState: nonpositive atom weight " +
                            std::to_string(a.weight));
    total += a.weight;
  }
  if (std::abs(total - 1.0) > tol::zero)
    throw ValidationError("ClassicalState: weights sum to " +
                          std::to_string(total));
  atoms_.reserve(atoms.size());
  double kept = 0.0;
  for (Atom &a : atoms) {
    if (a.weight < tol::atom_prune)
      continue;
    kept += a.weight;
    atoms_.push_back(std::move(a));
  }
  if (atoms_.empty())
    throw ValidationError("ClassicalState: all atoms pruned");
  for (Atom &a : atoms_)
    a.weight /= kept;
  fingerprint_ = hash_atoms(dim_, atoms_);
}

ClassicalState ClassicalState::delta(const PureState &omega) {
  return ClassicalState(omega.dim(), {Atom{1.0, omega}});
}

ClassicalEffect ClassicalEffect::induced(const Effect &effect) {
  ClassicalEffect out;
  out.dim_ = effect.dim();
  auto held = std::make_shared<const Effect>(effect);
  out.eval_ = [held](const PureState &omega) {
    double v = (omega.amplitudes().adjoint() * held->matrix() *
                omega.amplitudes())(0)
                   .real();
    return std::clamp(v, 0.0, 1.0);
  };
  return out;
}

ClassicalEffect ClassicalEffect::constant(int dim, double value) {
  if (value < 0.0 || value > 1.0)
    throw ValidationError("ClassicalEffect::constant: value outside [0, 1]");
  ClassicalEffect out;
  out.dim_ = dim;
  out.eval_ = [value](const PureState &) { return value; };
  return out;
}

ClassicalEffect ClassicalEffect::tabulated(const ClassicalState &basis,
                                           std::vector<double> values) {
  if (values.size() != basis.size())
    throw ValidationError("ClassicalEffect::tabulated: value count " +
                          std::to_string(values.size()) + " != atom count " +
                          std::to_string(basis.size()));
  for (double v : values)
    if (v < -tol::psd || v > 1.0 + tol::psd)
      throw ValidationError(
          "ClassicalEffect::tabulated: value outside [0, 1]: " +
          std::to_string(v));
  ClassicalEffect out;
  out.dim_ = basis.dim();
  out.table_ = std::move(values);
  out.table_fingerprint_ = basis.fingerprint();
  return out;
}

ClassicalEffect ClassicalEffect::product(const ClassicalEffect &a,
                                         const ClassicalEffect &b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("ClassicalEffect::product: dimension mismatch");
  if (a.is_tabulated() != b.is_tabulated())
    throw AtomSetMismatch(
        "ClassicalEffect::product: cannot mix tabulated and pointwise");
  ClassicalEffect out;
  out.dim_ = a.dim();
  if (a.is_tabulated()) {
    if (a.table_fingerprint_ != b.table_fingerprint_)
      throw AtomSetMismatch(
          "ClassicalEffect::product: tabulated atom sets differ");
    out.table_.resize(a.table_.size());
    for (std::size_t k = 0; k < a.table_.size(); ++k)
      out.table_[k] = a.table_[k] * b.table_[k];
    out.table_fingerprint_ = a.table_fingerprint_;
  } else {
    auto lhs = a.eval_;
    auto rhs = b.eval_;
    out.eval_ = [lhs, rhs](const PureState &omega) {
      return lhs(omega) * rhs(omega);
    };
  }
  return out;
}

double ClassicalEffect::value(const PureState &omega) const {
  if (is_tabulated())
    throw AtomSetMismatch(
        "ClassicalEffect: tabulated effect has no pointwise evaluator");
  if (omega.dim() != dim_)
    throw DimensionMismatch("ClassicalEffect: dimension mismatch");
  return eval_(omega);
}

FuzzyObservable::FuzzyObservable(
    std::vector<ClassicalEffect> effects,
    std::optional<std::vector<double>> outcome_values)
    : effects_(std::move(effects)), outcome_values_(std::move(outcome_values)) {
  if (effects_.empty())
    throw ValidationError("FuzzyObservable: no effects");
  const int n = effects_.front().dim();
  bool tabulated = effects_.front().is_tabulated();
  for (const ClassicalEffect &e : effects_) {
    if (e.dim() != n)
      throw DimensionMismatch("FuzzyObservable: dimension mismatch");
    if (e.is_tabulated() != tabulated)
      throw ValidationError(
          "FuzzyObservable: mixed tabulated and pointwise effects");
  }
  if (outcome_values_ && outcome_values_->size() != effects_.size())
    throw ValidationError("FuzzyObservable: outcome value count mismatch");

  if (tabulated) {
    const auto fp = effects_.front().table_fingerprint();
    const auto atoms = effects_.front().table().size();
    for (const ClassicalEffect &e : effects_)
      if (e.table_fingerprint() != fp)
        throw AtomSetMismatch("FuzzyObservable: tabulated atom sets differ");
    for (std::size_t k = 0; k < atoms; ++k) {
      double s = 0.0;
      for (const ClassicalEffect &e : effects_)
        s += e.table()[k];
      if (std::abs(s - 1.0) > tol::hermitian)
        throw ValidationError("FuzzyObservable: effects sum to " +
                              std::to_string(s) + " at atom " +
                              std::to_string(k));
    }
  } else {
    for (const PureState &omega : probe_states(n)) {
      double s = 0.0;
      for (const ClassicalEffect &e : effects_)
        s += e.value(omega);
      if (std::abs(s - 1.0) > tol::hermitian)
        throw ValidationError(
            "FuzzyObservable: effects sum to " + std::to_string(s) +
            " at a probe state; not a partition of unity");
    }
  }
}

FuzzyObservable
FuzzyObservable::c_representative(const DiscretePOVM &povm,
                                  std::optional<std::vector<double>>
                                      outcome_values) {
  std::vector<ClassicalEffect> effects;
  effects.reserve(povm.size());
  for (std::size_t d = 0; d < povm.size(); ++d)
    effects.push_back(ClassicalEffect::induced(povm[d]));
  return FuzzyObservable(std::move(effects), std::move(outcome_values));
}

DensityOperator reduce(const ClassicalState &p) {
  const int n = p.dim();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const Atom &a : p.atoms())
    sum += a.weight * a.state.projector();
  sum = 0.5 * (sum + ComplexMatrix(sum.adjoint()));
  return DensityOperator(sum);
}

ClassicalEffect induced_effect(const Effect &effect) {
  return ClassicalEffect::induced(effect);
}

double classical_expectation(const ClassicalState &p,
                             const ClassicalEffect &e) {
  if (p.dim() != e.dim())
    throw DimensionMismatch("classical_expectation: dimension mismatch");
  if (e.is_tabulated()) {
    if (e.table_fingerprint() != p.fingerprint())
      throw AtomSetMismatch(
          "classical_expectation: tabulated effect bound to another atom set");
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k)
      s += p.atom(k).weight * e.table()[k];
    return s;
  }
  double s = 0.0;
  for (const Atom &a : p.atoms())
    s += a.weight * e.value(a.state);
  return s;
}

double statistics_gap(const ClassicalState &p, const Effect &effect) {
  const double quantum = born_probability(reduce(p), effect);
  const double classical =
      classical_expectation(p, ClassicalEffect::induced(effect));
  return std::abs(quantum - classical);
}

ClassicalState eigen_decomposition_state(const DensityOperator &rho) {
  SpectralDecomposition sd = spectral_decompose(rho.matrix());
  std::vector<Atom> atoms;
  for (Eigen::Index k = 0; k < sd.eigenvalues.size(); ++k) {
    const double w = sd.eigenvalues[k];
    if (w < tol::atom_prune)
      continue;
    atoms.push_back(Atom{w, PureState(sd.eigenvectors.col(k))});
  }
  return ClassicalState(rho.dim(), std::move(atoms));
}

ClassicalState random_decomposition(const DensityOperator &rho, int m,
                                    Rng &rng) {
  ClassicalState eigen = eigen_decomposition_state(rho);
  const int rank = static_cast<int>(eigen.size());
  if (m < rank)
    throw ValidationError("random_decomposition: m = " + std::to_string(m) +
                          " below rank " + std::to_string(rank));
  if (m == rank)
    return eigen;

  const int n = rho.dim();
  // Unnormalized eigen-vectors sqrt(w_k) |v_k>.
  std::vector<ComplexVector> scaled;
  scaled.reserve(rank);
  for (const Atom &a : eigen.atoms())
    scaled.push_back(std::sqrt(a.weight) * a.state.amplitudes());

  // m x rank isometry from a QR-orthonormalized Gaussian block.
  ComplexMatrix g(m, rank);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < rank; ++k)
      g(i, k) = rng.complex_gaussian();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m, rank);

  std::vector<Atom> atoms;
  atoms.reserve(m);
  for (int j = 0; j < m; ++j) {
    ComplexVector u = ComplexVector::Zero(n);
    for (int k = 0; k < rank; ++k)
      u += q(j, k) * scaled[k];
    const double w = u.squaredNorm();
    if (w < tol::atom_prune)
      continue;
    atoms.push_back(Atom{w, PureState(u / u.norm())});
  }
  return ClassicalState(n, std::move(atoms));
}

ClassicalState random_decomposition(const DensityOperator &rho, int m,
                                    std::uint64_t seed) {
  Rng rng(seed);
  return random_decomposition(rho, m, rng);
}

FuzzyObservable joint_observable(const FuzzyObservable &a,
                                 const FuzzyObservable &b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("joint_observable: dimension mismatch");
  std::vector<ClassicalEffect> effects;
  effects.reserve(a.size() * b.size());
  for (std::size_t d = 0; d < a.size(); ++d)
    for (std::size_t e = 0; e < b.size(); ++e)
      effects.push_back(ClassicalEffect::product(a.effect(d), b.effect(e)));

  std::optional<std::vector<double>> values;
  if (a.outcome_values() && b.outcome_values()) {
    values.emplace();
    values->reserve(a.size() * b.size());
    for (double x : *a.outcome_values())
      for (double y : *b.outcome_values())
        values->push_back(x * y);
  }
  return FuzzyObservable(std::move(effects), std::move(values));
}

double dispersion(const ClassicalState &p, const FuzzyObservable &obs) {
  if (!obs.outcome_values())
    throw ValidationError("dispersion: observable has no outcome values");
  double first = 0.0;
  double second = 0.0;
  for (std::size_t d = 0; d < obs.size(); ++d) {
    const double q = classical_expectation(p, obs.effect(d));
    const double x = (*obs.outcome_values())[d];
    first += x * q;
    second += x * x * q;
  }
  return second - first * first;
}

} // namespace fuzzyqm
