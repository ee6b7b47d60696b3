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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fuzzyqm/experiments.hpp"

using namespace fuzzyqm;

TEST_CASE("singlet state") {
  const DensityOperator psi = singlet();
  CHECK(psi.dim() == 4);
  CHECK(psi.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(psi.purity() == doctest::Approx(1.0).epsilon(1e-13));

  // both marginals are maximally mixed
  for (int side = 0; side < 2; ++side) {
    ComplexMatrix marginal = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          const int row = side == 0 ? 2 * i + k : 2 * k + i;
          const int col = side == 0 ? 2 * j + k : 2 * k + j;
          marginal(i, j) += psi.matrix()(row, col);
        }
    CHECK((marginal - ComplexMatrix::Identity(2, 2) * 0.5).norm() <= 1e-13);
  }

  // pure states have single-atom preimages
  CHECK(eigen_decomposition_state(psi).size() == 1);
}

TEST_CASE("tensor_effect") {
  Rng rng(51);

  CHECK((tensor_effect(Effect::identity(2), Effect::identity(2)).matrix() -
         ComplexMatrix::Identity(4, 4))
            .norm() <= 1e-14);

  // projector x projector is a projector
  const Effect p = Effect::projector(haar_random_state(2, rng));
  const Effect q = Effect::projector(haar_random_state(2, rng));
  const ComplexMatrix pq = tensor_effect(p, q).matrix();
  CHECK((pq * pq - pq).norm() <= 1e-13);

  // spectrum of a tensor product is the product set of spectra
  const Effect a = random_effect(2, rng);
  const Effect b = random_effect(2, rng);
  const SpectralDecomposition sa = spectral_decompose(a.matrix());
  const SpectralDecomposition sb = spectral_decompose(b.matrix());
  std::vector<double> expected;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      expected.push_back(sa.eigenvalues[i] * sb.eigenvalues[j]);
  std::sort(expected.begin(), expected.end(), std::greater<>());
  const SpectralDecomposition sab =
      spectral_decompose(tensor_effect(a, b).matrix());
  for (int k = 0; k < 4; ++k)
    CHECK(sab.eigenvalues[k] ==
          doctest::Approx(expected[k]).epsilon(1e-12));
}

TEST_CASE("chsh at the optimal scenario") {
  const CHSHScenario scenario = chsh_optimal_scenario();
  const double tsirelson = 2.0 * std::numbers::sqrt2;

  const double quantum = chsh_value(scenario, CHSHPath::quantum);
  CHECK(quantum == doctest::Approx(tsirelson).epsilon(1e-12));

  const double classical =
      chsh_value(scenario, CHSHPath::classical_extension);
  CHECK(std::abs(quantum - classical) <= 1e-12);

  // violation margin
  CHECK(std::abs(quantum) - 2.0 >= 0.82);
}

TEST_CASE("chsh on separable and degenerate scenarios") {
  // product state: no violation at the optimal angles
  const CHSHScenario product =
      chsh_scenario(kChshOptimalAngles, product_state_00());
  const double s = chsh_value(product, CHSHPath::quantum);
  CHECK(std::abs(s) <= 2.0 + 1e-12);
  CHECK(std::abs(s - chsh_value(product, CHSHPath::classical_extension)) <=
        1e-12);

  // all angles equal: S collapses to 2 E(A0 B0)
  const CHSHScenario degenerate =
      chsh_scenario({0.0, 0.0, 0.0, 0.0}, singlet());
  const double sd = chsh_value(degenerate, CHSHPath::quantum);
  CHECK(std::abs(sd) <= 2.0 + 1e-12);
  CHECK(sd == doctest::Approx(2.0 * chsh_correlator(degenerate, 0, 0,
                                                    CHSHPath::quantum))
                  .epsilon(1e-12));
}

TEST_CASE("both chsh paths agree on random scenarios") {
  Rng rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<double, 4> angles;
    for (double &a : angles)
      a = rng.uniform() * 360.0;
    const CHSHScenario scenario =
        chsh_scenario(angles, random_density(4, rng));
    const double q = chsh_value(scenario, CHSHPath::quantum);
    const double c = chsh_value(scenario, CHSHPath::classical_extension);
    CHECK(std::abs(q - c) <= 1e-12);
    CHECK(std::abs(q) <= 2.0 * std::numbers::sqrt2 + 1e-10);
  }
}

TEST_CASE("the classical path uses only genuine classical effects") {
  // every induced joint effect evaluates inside [0, 1] on the preimage
  const CHSHScenario scenario = chsh_optimal_scenario();
  const ClassicalState preimage = eigen_decomposition_state(scenario.state);
  Rng rng(53);
  for (const Effect &ea :
       {scenario.alice[0], scenario.alice[1], scenario.alice[0].complement(),
        scenario.alice[1].complement()})
    for (const Effect &eb :
         {scenario.bob[0], scenario.bob[1], scenario.bob[0].complement(),
          scenario.bob[1].complement()}) {
      const ClassicalEffect joint =
          ClassicalEffect::induced(tensor_effect(ea, eb));
      for (const Atom &atom : preimage.atoms()) {
        const double v = joint.value(atom.state);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
      for (int i = 0; i < 10; ++i) {
        const double v = joint.value(haar_random_state(4, rng));
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
}

TEST_CASE("correlator sign structure at the optimum") {
  const CHSHScenario scenario = chsh_optimal_scenario();
  const double r = std::numbers::sqrt2 / 2.0;
  CHECK(chsh_correlator(scenario, 0, 0, CHSHPath::quantum) ==
        doctest::Approx(r).epsilon(1e-12));
  CHECK(chsh_correlator(scenario, 0, 1, CHSHPath::quantum) ==
        doctest::Approx(r).epsilon(1e-12));
  CHECK(chsh_correlator(scenario, 1, 0, CHSHPath::quantum) ==
        doctest::Approx(r).epsilon(1e-12));
  CHECK(chsh_correlator(scenario, 1, 1, CHSHPath::quantum) ==
        doctest::Approx(-r).epsilon(1e-12));
}
