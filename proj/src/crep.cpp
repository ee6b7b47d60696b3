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

#include "fuzzyqm/crep.hpp"

#include <cmath>
#include <limits>

namespace fuzzyqm {

namespace {

constexpr double kGramConditionCap = 1e12;   // absolute invariant
constexpr double kGramConditionDraw = 1e8;   // redraw threshold for frames
constexpr int kFrameRetryCap = 100;
constexpr double kNegativityFloor = -1e-10;  // below solver noise
constexpr double kLooseStateTol = 1e-8;      // reconstruct accept window

} // namespace

MinimalICPOVM::MinimalICPOVM(std::vector<PureState> vectors,
                             std::vector<double> weights)
    : vectors_(std::move(vectors)), weights_(std::move(weights)) {
  if (vectors_.empty())
    throw ValidationError("MinimalICPOVM: empty frame");
  dim_ = vectors_.front().dim();
  const int N = static_cast<int>(vectors_.size());
  if (N != dim_ * dim_)
    throw ValidationError("MinimalICPOVM: need n^2 vectors, got " +
                          std::to_string(N));
  if (weights_.size() != vectors_.size())
    throw ValidationError("MinimalICPOVM: weight count mismatch");

  ComplexMatrix sum = ComplexMatrix::Zero(dim_, dim_);
  for (int i = 0; i < N; ++i) {
    if (vectors_[i].dim() != dim_)
      throw DimensionMismatch("MinimalICPOVM: vector dimension mismatch");
    if (weights_[i] <= 0.0)
      throw ValidationError("MinimalICPOVM: nonpositive weight");
    sum += weights_[i] * vectors_[i].projector();
  }
  const double dev =
      (sum - ComplexMatrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
  if (dev > tol::povm)
    throw ValidationError("MinimalICPOVM: effects sum deviates from 1 by " +
                          std::to_string(dev));

  gram_.resize(N, N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double g = weights_[i] * weights_[j] *
                       vectors_[i].overlap(vectors_[j]);
      gram_(i, j) = g;
      gram_(j, i) = g;
    }
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram_);
  gram_eigvals_ = es.eigenvalues();
  gram_eigvecs_ = es.eigenvectors();
  const double lo = gram_eigvals_.minCoeff();
  const double hi = gram_eigvals_.maxCoeff();
  gram_condition_ = (lo > 0.0) ? hi / lo
                               : std::numeric_limits<double>::infinity();
  if (!(gram_condition_ < kGramConditionCap))
    throw FrameDegenerate("MinimalICPOVM: Gram condition " +
                          std::to_string(gram_condition_) +
                          " exceeds 1e12; frame is not informationally "
                          "complete at working precision");
}

Effect MinimalICPOVM::effect(int i) const {
  return Effect(weights_.at(i) * vectors_.at(i).projector());
}

RealVector MinimalICPOVM::solve_gram(const RealVector &rhs) const {
  if (rhs.size() != gram_.rows())
    throw DimensionMismatch("MinimalICPOVM::solve_gram: length mismatch");
  if (!(gram_condition_ < kGramConditionCap))
    throw GramSingular("MinimalICPOVM: Gram matrix numerically singular");
  auto apply_inverse = [&](const RealVector &v) -> RealVector {
    RealVector y = gram_eigvecs_.transpose() * v;
    for (Eigen::Index k = 0; k < y.size(); ++k)
      y[k] /= gram_eigvals_[k];
    return gram_eigvecs_ * y;
  };
  RealVector x = apply_inverse(rhs);
  x += apply_inverse(rhs - gram_ * x); // one refinement step
  return x;
}

MinimalICPOVM sic_qubit() {
  const double s = 1.0 / std::sqrt(3.0);
  std::vector<PureState> vectors{
      pure_state_from_bloch(s, s, s),
      pure_state_from_bloch(s, -s, -s),
      pure_state_from_bloch(-s, s, -s),
      pure_state_from_bloch(-s, -s, s),
  };
  return MinimalICPOVM(std::move(vectors), std::vector<double>(4, 0.5));
}

MinimalICPOVM random_ic_povm(int n, Rng &rng) {
  if (n < 2)
    throw ValidationError("random_ic_povm: dimension must be >= 2");
  const int N = n * n;
  for (int attempt = 0; attempt < kFrameRetryCap; ++attempt) {
    std::vector<PureState> raw;
    raw.reserve(N);
    ComplexMatrix frame_op = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < N; ++i) {
      raw.push_back(haar_random_state(n, rng));
      frame_op += raw.back().projector();
    }
    // Whiten: E_i = S^(-1/2) |w_i><w_i| S^(-1/2) stays rank one and the sum
    // becomes the identity exactly.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(frame_op);
    if (es.eigenvalues().minCoeff() < 1e-6)
      continue; // frame operator nearly singular; redraw
    ComplexMatrix inv_sqrt =
        es.eigenvectors() *
        es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
        es.eigenvectors().adjoint();

    std::vector<PureState> vectors;
    std::vector<double> weights;
    vectors.reserve(N);
    weights.reserve(N);
    bool ok = true;
    for (const PureState &w : raw) {
      ComplexVector u = inv_sqrt * w.amplitudes();
      const double c = u.squaredNorm();
      if (c < 1e-8) {
        ok = false;
        break;
      }
      weights.push_back(c);
      vectors.push_back(PureState(u / u.norm()));
    }
    if (!ok)
      continue;
    try {
      MinimalICPOVM frame(std::move(vectors), std::move(weights));
      if (frame.gram_condition() < kGramConditionDraw)
        return frame;
    } catch (const FrameDegenerate &) {
      // redraw
    }
  }
  throw FrameDegenerate("random_ic_povm: no acceptable frame in " +
                        std::to_string(kFrameRetryCap) + " attempts");
}

MinimalICPOVM random_ic_povm(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_ic_povm(n, rng);
}

RealVector representation_probabilities(const DensityOperator &rho,
                                        const MinimalICPOVM &frame) {
  if (rho.dim() != frame.dim())
    throw DimensionMismatch("representation_probabilities: dim mismatch");
  const int N = frame.size();
  RealVector p(N);
  for (int i = 0; i < N; ++i) {
    double v = frame.weight(i) *
               (frame.vector(i).amplitudes().adjoint() * rho.matrix() *
                frame.vector(i).amplitudes())(0)
                   .real();
    if (v < 0.0 && v >= -tol::psd)
      v = 0.0;
    p[i] = v;
  }
  return p;
}

DensityOperator reconstruct(const RealVector &probabilities,
                            const MinimalICPOVM &frame) {
  if (probabilities.size() != frame.size())
    throw DimensionMismatch("reconstruct: probability vector length " +
                            std::to_string(probabilities.size()) +
                            " != frame size " + std::to_string(frame.size()));
  const RealVector coeff = frame.solve_gram(probabilities);
  const int n = frame.dim();
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < frame.size(); ++i)
    rho += coeff[i] * frame.weight(i) * frame.vector(i).projector();
  rho = 0.5 * (rho + ComplexMatrix(rho.adjoint()));

  try {
    return DensityOperator(rho);
  } catch (const ValidationError &) {
    // Loose window: project small violations away, reject anything larger.
    const double trace_err = std::abs(rho.trace().real() - 1.0);
    SpectralDecomposition sd = spectral_decompose(rho);
    const double min_eig = sd.eigenvalues.minCoeff();
    if (trace_err > kLooseStateTol || min_eig < -kLooseStateTol)
      throw NotAState("reconstruct: trace error " +
                      std::to_string(trace_err) + ", min eigenvalue " +
                      std::to_string(min_eig));
    RealVector clamped = sd.eigenvalues.cwiseMax(0.0);
    clamped /= clamped.sum();
    ComplexMatrix fixed = sd.eigenvectors * clamped.asDiagonal() *
                          sd.eigenvectors.adjoint();
    return DensityOperator(0.5 * (fixed + ComplexMatrix(fixed.adjoint())));
  }
}

PseudoDistribution pseudo_distribution(const DensityOperator &rho,
                                       const MinimalICPOVM &frame) {
  const RealVector p = representation_probabilities(rho, frame);
  PseudoDistribution out;
  out.values = frame.solve_gram(p);
  out.min_value = out.values.minCoeff();
  out.has_negative = out.min_value < kNegativityFloor;

  // Normalization against the frame traces, tr(E_i) = c_i.
  double norm = 0.0;
  for (int i = 0; i < frame.size(); ++i)
    norm += out.values[i] * frame.weight(i);
  if (std::abs(norm - 1.0) > 1e-10)
    throw GramSingular("pseudo_distribution: coefficients normalize to " +
                       std::to_string(norm));
  return out;
}

RealVector effect_expansion(const Effect &effect,
                            const MinimalICPOVM &frame) {
  if (effect.dim() != frame.dim())
    throw DimensionMismatch("effect_expansion: dimension mismatch");
  const int N = frame.size();
  RealVector rhs(N);
  for (int i = 0; i < N; ++i)
    rhs[i] = frame.weight(i) *
             (frame.vector(i).amplitudes().adjoint() * effect.matrix() *
              frame.vector(i).amplitudes())(0)
                 .real();
  return frame.solve_gram(rhs);
}

UniformPOVMSample uniform_povm_sample(int n, int count, Rng &rng) {
  if (count < 1)
    throw ValidationError("uniform_povm_sample: need at least one atom");
  UniformPOVMSample out;
  out.dim = n;
  out.weight = double(n) / double(count);
  out.atoms.reserve(count);
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < count; ++j) {
    out.atoms.push_back(haar_random_state(n, rng));
    acc += out.atoms.back().projector();
  }
  out.identity_deviation =
      (out.weight * acc - ComplexMatrix::Identity(n, n)).norm();
  return out;
}

UniformPOVMSample uniform_povm_sample(int n, int count, std::uint64_t seed) {
  Rng rng(seed);
  return uniform_povm_sample(n, count, rng);
}

double uniform_density(const DensityOperator &rho, const PureState &omega) {
  if (rho.dim() != omega.dim())
    throw DimensionMismatch("uniform_density: dimension mismatch");
  return (omega.amplitudes().adjoint() * rho.matrix() *
          omega.amplitudes())(0)
      .real();
}

double smearing_kernel(const PureState &omega,
                       const PureState &omega_tilde) {
  return omega.overlap(omega_tilde);
}

double smearing_check(const ClassicalState &p,
                      std::span<const PureState> test_points) {
  const DensityOperator rho = reduce(p);
  double worst = 0.0;
  for (const PureState &probe : test_points) {
    const double lhs = uniform_density(rho, probe);
    double rhs = 0.0;
    for (const Atom &a : p.atoms())
      rhs += a.weight * smearing_kernel(a.state, probe);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

} // namespace fuzzyqm
