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

#include "fuzzyqm/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fuzzyqm {

namespace {

constexpr double kPhaseEps = 1e-12;
constexpr double kTieEps = 1e-12;

void require_square(const ComplexMatrix &m, const char *what) {
  if (m.rows() != m.cols())
    throw DimensionMismatch(std::string(what) + ": matrix is not square");
}

void require_same_dim(int a, int b, const char *what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" +
                            std::to_string(a) + " vs " + std::to_string(b) +
                            ")");
}

// Entrywise comparison of phase-fixed unit vectors; used only to order
// near-degenerate eigenvectors deterministically.
bool lex_greater(const ComplexVector &a, const ComplexVector &b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real())
      return a[i].real() > b[i].real();
    if (a[i].imag() != b[i].imag())
      return a[i].imag() > b[i].imag();
  }
  return false;
}

} // namespace

ComplexVector fix_global_phase(ComplexVector v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > kPhaseEps) {
      const std::complex<double> phase = std::conj(v[i]) / mag;
      v *= phase;
      v[i] = std::complex<double>(mag, 0.0); // kill rounding in the pivot
      return v;
    }
  }
  return v;
}

PureState::PureState(ComplexVector amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() == 0)
    throw ValidationError("PureState: empty amplitude vector");
  const double norm = amp_.norm();
  if (std::abs(norm - 1.0) > tol::hermitian)
    throw ValidationError("PureState: norm deviates from 1 by " +
                          std::to_string(std::abs(norm - 1.0)));
  amp_ = fix_global_phase(std::move(amp_));
}

double PureState::overlap(const PureState &other) const {
  require_same_dim(dim(), other.dim(), "PureState::overlap");
  return std::norm(amp_.dot(other.amp_));
}

DensityOperator::DensityOperator(ComplexMatrix matrix)
    : mat_(std::move(matrix)) {
  require_square(mat_, "DensityOperator");
  if (!is_hermitian(mat_))
    throw ValidationError("DensityOperator: matrix is not Hermitian");
  const double trace_err = std::abs(mat_.trace() - std::complex<double>(1.0));
  if (trace_err > tol::hermitian)
    throw ValidationError("DensityOperator: trace deviates from 1 by " +
                          std::to_string(trace_err));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mat_,
                                                  Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::psd)
    throw ValidationError("DensityOperator: negative eigenvalue " +
                          std::to_string(es.eigenvalues().minCoeff()));
}

DensityOperator DensityOperator::pure(const PureState &omega) {
  return DensityOperator(omega.projector());
}

DensityOperator DensityOperator::maximally_mixed(int n) {
  return DensityOperator(ComplexMatrix::Identity(n, n) / double(n));
}

Effect::Effect(ComplexMatrix matrix) : mat_(std::move(matrix)) {
  require_square(mat_, "Effect");
  if (!is_hermitian(mat_))
    throw ValidationError("Effect: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mat_,
                                                  Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo < -tol::psd || hi > 1.0 + tol::psd)
    throw ValidationError("Effect: spectrum [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "] escapes [0, 1]");
}

Effect Effect::identity(int n) {
  return Effect(ComplexMatrix::Identity(n, n));
}

Effect Effect::projector(const PureState &omega) {
  return Effect(omega.projector());
}

Effect Effect::complement() const {
  return Effect(ComplexMatrix::Identity(mat_.rows(), mat_.cols()) - mat_);
}

DiscretePOVM::DiscretePOVM(std::vector<Effect> effects)
    : effects_(std::move(effects)) {
  if (effects_.empty())
    throw ValidationError("DiscretePOVM: no effects");
  const int n = effects_.front().dim();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const Effect &e : effects_) {
    require_same_dim(e.dim(), n, "DiscretePOVM");
    sum += e.matrix();
  }
  const double dev =
      (sum - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (dev > tol::povm)
    throw ValidationError("DiscretePOVM: effects sum deviates from 1 by " +
                          std::to_string(dev));
}

KrausOperation::KrausOperation(std::vector<ComplexMatrix> operators)
    : operators_(std::move(operators)) {
  if (operators_.empty())
    throw ValidationError("KrausOperation: no operators");
  const auto n = operators_.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const ComplexMatrix &a : operators_) {
    require_square(a, "KrausOperation");
    require_same_dim(static_cast<int>(a.rows()), static_cast<int>(n),
                     "KrausOperation");
    sum += a.adjoint() * a;
  }
  const double dev =
      (sum - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (dev > tol::povm)
    throw ValidationError(
        "KrausOperation: sum_d A_d* A_d deviates from 1 by " +
        std::to_string(dev));
}

Effect KrausOperation::effect(std::size_t d) const {
  const ComplexMatrix &a = operators_.at(d);
  ComplexMatrix e = a.adjoint() * a;
  return Effect(0.5 * (e + ComplexMatrix(e.adjoint())));
}

DiscretePOVM KrausOperation::povm() const {
  std::vector<Effect> effects;
  effects.reserve(size());
  for (std::size_t d = 0; d < size(); ++d)
    effects.push_back(effect(d));
  return DiscretePOVM(std::move(effects));
}

SpectralDecomposition spectral_decompose(const ComplexMatrix &hermitian) {
  require_square(hermitian, "spectral_decompose");
  if (!is_hermitian(hermitian))
    throw ValidationError("spectral_decompose: matrix is not Hermitian");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian);
  if (es.info() != Eigen::Success)
    throw ValidationError("spectral_decompose: eigensolver failed");

  const auto n = hermitian.rows();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  std::vector<ComplexVector> vecs(n);
  for (Eigen::Index k = 0; k < n; ++k)
    vecs[k] = fix_global_phase(es.eigenvectors().col(k));

  // Descending eigenvalues (solver returns ascending).
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return es.eigenvalues()[a] > es.eigenvalues()[b];
  });
  // Within near-degenerate runs, order vectors lexicographically.
  std::size_t lo = 0;
  while (lo < order.size()) {
    std::size_t hi = lo + 1;
    while (hi < order.size() &&
           es.eigenvalues()[order[hi - 1]] - es.eigenvalues()[order[hi]] <=
               kTieEps)
      ++hi;
    std::sort(order.begin() + lo, order.begin() + hi,
              [&](int a, int b) { return lex_greater(vecs[a], vecs[b]); });
    lo = hi;
  }

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues[k] = es.eigenvalues()[order[k]];
    out.eigenvectors.col(k) = vecs[order[k]];
  }
  return out;
}

double born_probability(const DensityOperator &rho, const Effect &effect) {
  require_same_dim(rho.dim(), effect.dim(), "born_probability");
  double p = (rho.matrix() * effect.matrix()).trace().real();
  if (p < 0.0 && p >= -tol::psd)
    p = 0.0;
  return p;
}

ComplexMatrix matrix_sqrt(const ComplexMatrix &psd) {
  SpectralDecomposition sd = spectral_decompose(psd);
  RealVector roots(sd.eigenvalues.size());
  for (Eigen::Index k = 0; k < sd.eigenvalues.size(); ++k) {
    double lambda = sd.eigenvalues[k];
    if (lambda < -tol::psd)
      throw ValidationError("matrix_sqrt: eigenvalue " +
                            std::to_string(lambda) + " below -tolerance");
    roots[k] = std::sqrt(std::max(lambda, 0.0));
  }
  return sd.eigenvectors * roots.asDiagonal() *
         sd.eigenvectors.adjoint();
}

PolarDecomposition polar_decompose(const ComplexMatrix &m) {
  require_square(m, "polar_decompose");
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU |
                                             Eigen::ComputeFullV);
  PolarDecomposition out;
  out.unitary = svd.matrixU() * svd.matrixV().adjoint();
  out.positive = svd.matrixV() * svd.singularValues().asDiagonal() *
                 svd.matrixV().adjoint();
  return out;
}

ApplyResult apply_operation(const DensityOperator &rho,
                            const ComplexMatrix &kraus) {
  require_square(kraus, "apply_operation");
  require_same_dim(rho.dim(), static_cast<int>(kraus.rows()),
                   "apply_operation");
  ComplexMatrix transformed = kraus * rho.matrix() * kraus.adjoint();
  const double prob = transformed.trace().real();
  if (prob <= tol::zero)
    throw ZeroProbabilityOutcome("apply_operation: outcome probability " +
                                 std::to_string(prob));
  return ApplyResult{DensityOperator(transformed / prob), prob};
}

PureState haar_random_state(int n, Rng &rng) {
  if (n < 2)
    throw ValidationError("haar_random_state: dimension must be >= 2");
  ComplexVector v(n);
  for (int i = 0; i < n; ++i)
    v[i] = rng.complex_gaussian();
  return PureState(v / v.norm());
}

PureState haar_random_state(int n, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_state(n, rng);
}

DensityOperator random_density(int n, Rng &rng) {
  if (n < 2)
    throw ValidationError("random_density: dimension must be >= 2");
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = rng.complex_gaussian();
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + ComplexMatrix(rho.adjoint()));
  return DensityOperator(rho);
}

DensityOperator random_density(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(n, rng);
}

ComplexMatrix random_unitary(int n, Rng &rng) {
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = rng.complex_gaussian();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Absorb R's diagonal phases to make the distribution Haar.
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? d / mag : 1.0;
  }
  return q;
}

Effect random_effect(int n, Rng &rng) {
  ComplexMatrix u = random_unitary(n, rng);
  RealVector spectrum(n);
  for (int i = 0; i < n; ++i)
    spectrum[i] = rng.uniform();
  ComplexMatrix e = u * spectrum.asDiagonal() * u.adjoint();
  return Effect(0.5 * (e + ComplexMatrix(e.adjoint())));
}

DiscretePOVM random_povm(int n, int outcomes, Rng &rng) {
  if (outcomes < 1)
    throw ValidationError("random_povm: need at least one outcome");
  std::vector<ComplexMatrix> raw;
  raw.reserve(outcomes);
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (int d = 0; d < outcomes; ++d) {
    ComplexMatrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        g(i, j) = rng.complex_gaussian();
    ComplexMatrix gd = g * g.adjoint();
    raw.push_back(gd);
    sum += gd;
  }
  ComplexMatrix whiten = matrix_sqrt(sum).inverse();
  std::vector<Effect> effects;
  effects.reserve(outcomes);
  for (ComplexMatrix &gd : raw) {
    ComplexMatrix e = whiten * gd * whiten;
    effects.emplace_back(0.5 * (e + ComplexMatrix(e.adjoint())));
  }
  return DiscretePOVM(std::move(effects));
}

KrausOperation luders_operation(const DiscretePOVM &povm) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(povm.size());
  for (std::size_t d = 0; d < povm.size(); ++d)
    ops.push_back(matrix_sqrt(povm[d].matrix()));
  return KrausOperation(std::move(ops));
}

KrausOperation twirled_operation(const DiscretePOVM &povm, Rng &rng) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(povm.size());
  for (std::size_t d = 0; d < povm.size(); ++d)
    ops.push_back(random_unitary(povm.dim(), rng) *
                  matrix_sqrt(povm[d].matrix()));
  return KrausOperation(std::move(ops));
}

PureState pure_state_from_bloch(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r <= 0.0)
    throw ValidationError("pure_state_from_bloch: zero Bloch vector");
  const double theta = std::acos(std::clamp(z / r, -1.0, 1.0));
  const double phi = std::atan2(y, x);
  ComplexVector v(2);
  v[0] = std::cos(theta / 2.0);
  v[1] = std::exp(std::complex<double>(0.0, phi)) * std::sin(theta / 2.0);
  return PureState(v);
}

} // namespace fuzzyqm
