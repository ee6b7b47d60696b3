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

#include "fuzzyqm/crep.hpp"

using namespace fuzzyqm;

namespace {

// Antipodal qubit state to a frame vector: flip the Bloch vector.
PureState antipodal(const PureState &omega) {
  const ComplexVector &v = omega.amplitudes();
  const double x = 2.0 * (std::conj(v[0]) * v[1]).real();
  const double y = 2.0 * (std::conj(v[0]) * v[1]).imag();
  const double z = std::norm(v[0]) - std::norm(v[1]);
  return pure_state_from_bloch(-x, -y, -z);
}

} // namespace

TEST_CASE("sic_qubit geometry") {
  const MinimalICPOVM sic = sic_qubit();
  REQUIRE(sic.size() == 4);
  CHECK(sic.dim() == 2);

  // equiangular tetrahedron: |<w_i|w_j>|^2 = 1/3 off the diagonal
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double overlap = sic.vector(i).overlap(sic.vector(j));
      if (i == j)
        CHECK(overlap == doctest::Approx(1.0).epsilon(1e-14));
      else
        CHECK(overlap == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    }

  // completeness at the equal weight 1/2
  ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 4; ++i)
    sum += sic.effect(i).matrix();
  CHECK((sum - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <=
        1e-14);

  // Gram entries: G_ii = 1/4, G_ij = 1/12
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(sic.gram()(i, j) ==
            doctest::Approx(i == j ? 0.25 : 1.0 / 12.0).epsilon(1e-13));

  // smearing is strict: off-diagonal Gram entries never vanish
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j)
        CHECK(sic.gram()(i, j) > 0.01);
}

TEST_CASE("random_ic_povm produces valid informationally complete frames") {
  Rng rng(31);
  for (int n : {2, 3, 4}) {
    const MinimalICPOVM frame = random_ic_povm(n, rng);
    REQUIRE(frame.size() == n * n);

    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < frame.size(); ++i)
      sum += frame.effect(i).matrix();
    CHECK((sum - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <=
          1e-10);

    // the effects span the full operator space: Gram has full rank
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(frame.gram(),
                                                 Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
    CHECK(frame.gram_condition() < 1e8);
  }

  // determinism
  const MinimalICPOVM a = random_ic_povm(3, std::uint64_t{9});
  const MinimalICPOVM b = random_ic_povm(3, std::uint64_t{9});
  for (int i = 0; i < a.size(); ++i)
    CHECK((a.vector(i).amplitudes() - b.vector(i).amplitudes()).norm() ==
          0.0);
}

TEST_CASE("representation probabilities of canonical states") {
  const MinimalICPOVM sic = sic_qubit();

  SUBCASE("maximally mixed state is uniform") {
    const RealVector p = representation_probabilities(
        DensityOperator::maximally_mixed(2), sic);
    for (int i = 0; i < 4; ++i)
      CHECK(p[i] == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-13));
  }

  SUBCASE("frame-aligned state: (1/2, 1/6, 1/6, 1/6)") {
    const RealVector p = representation_probabilities(
        DensityOperator::pure(sic.vector(0)), sic);
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-13));
    for (int i = 1; i < 4; ++i)
      CHECK(p[i] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  }

  SUBCASE("antipodal state: (0, 1/3, 1/3, 1/3)") {
    const RealVector p = representation_probabilities(
        DensityOperator::pure(antipodal(sic.vector(0))), sic);
    CHECK(std::abs(p[0]) <= 1e-13);
    for (int i = 1; i < 4; ++i)
      CHECK(p[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }

  SUBCASE("normalization holds for random states") {
    Rng rng(32);
    for (int trial = 0; trial < 20; ++trial) {
      const RealVector p =
          representation_probabilities(random_density(2, rng), sic);
      CHECK(std::abs(p.sum() - 1.0) <= 1e-12);
      CHECK(p.minCoeff() >= 0.0);
    }
  }
}

TEST_CASE("reconstruct inverts the representation") {
  Rng rng(33);

  SUBCASE("uniform probabilities give the maximally mixed state") {
    RealVector p(4);
    p << 0.25, 0.25, 0.25, 0.25;
    const DensityOperator rho = reconstruct(p, sic_qubit());
    CHECK((rho.matrix() - ComplexMatrix::Identity(2, 2) * 0.5).norm() <=
          1e-13);
  }

  SUBCASE("golden inverse of the frame-aligned state") {
    const MinimalICPOVM sic = sic_qubit();
    RealVector p(4);
    p << 0.5, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0;
    const DensityOperator rho = reconstruct(p, sic);
    CHECK((rho.matrix() - sic.vector(0).projector()).norm() <= 1e-12);
  }

  SUBCASE("roundtrip at machine precision, SIC and random frames") {
    const MinimalICPOVM sic = sic_qubit();
    for (int trial = 0; trial < 50; ++trial) {
      const DensityOperator rho = random_density(2, rng);
      const DensityOperator back =
          reconstruct(representation_probabilities(rho, sic), sic);
      CHECK((back.matrix() - rho.matrix()).norm() <= 1e-10);
    }
    for (int n : {2, 3, 4}) {
      const MinimalICPOVM frame = random_ic_povm(n, rng);
      for (int trial = 0; trial < 50; ++trial) {
        const DensityOperator rho = random_density(n, rng);
        const DensityOperator back =
            reconstruct(representation_probabilities(rho, frame), frame);
        CHECK((back.matrix() - rho.matrix()).norm() <= 1e-10);
      }
    }
  }

  SUBCASE("garbage probability vectors are rejected") {
    RealVector p(4);
    p << 1.0, 0.0, 0.0, 0.0; // not in the frame's image of states
    CHECK_THROWS_AS(reconstruct(p, sic_qubit()), NotAState);
    RealVector wrong_len(3);
    wrong_len << 0.5, 0.3, 0.2;
    CHECK_THROWS_AS(reconstruct(wrong_len, sic_qubit()),
                    DimensionMismatch);
  }
}

TEST_CASE("pseudo distributions and their negativity") {
  const MinimalICPOVM sic = sic_qubit();

  SUBCASE("maximally mixed: all coefficients one half, no negativity") {
    const PseudoDistribution d =
        pseudo_distribution(DensityOperator::maximally_mixed(2), sic);
    for (int i = 0; i < 4; ++i)
      CHECK(d.values[i] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(d.has_negative);
  }

  SUBCASE("frame-aligned state: (2, 0, 0, 0)") {
    const PseudoDistribution d =
        pseudo_distribution(DensityOperator::pure(sic.vector(0)), sic);
    CHECK(d.values[0] == doctest::Approx(2.0).epsilon(1e-11));
    for (int i = 1; i < 4; ++i)
      CHECK(std::abs(d.values[i]) <= 1e-10);
  }

  SUBCASE("antipodal state: (-1, 1, 1, 1), negativity witnessed") {
    const PseudoDistribution d = pseudo_distribution(
        DensityOperator::pure(antipodal(sic.vector(0))), sic);
    CHECK(d.values[0] == doctest::Approx(-1.0).epsilon(1e-11));
    for (int i = 1; i < 4; ++i)
      CHECK(d.values[i] == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(d.has_negative);
    CHECK(d.min_value == doctest::Approx(-1.0).epsilon(1e-11));
  }

  SUBCASE("qubit SIC closed form: rho_i = 6 p_i - 1") {
    Rng rng(34);
    for (int trial = 0; trial < 20; ++trial) {
      const DensityOperator rho = random_density(2, rng);
      const RealVector p = representation_probabilities(rho, sic);
      const PseudoDistribution d = pseudo_distribution(rho, sic);
      for (int i = 0; i < 4; ++i)
        CHECK(d.values[i] ==
              doctest::Approx(6.0 * p[i] - 1.0).epsilon(1e-10));
    }
  }

  SUBCASE("expansion actually reproduces the state (Gram consistency)") {
    Rng rng(35);
    for (int n : {2, 3}) {
      const MinimalICPOVM frame = random_ic_povm(n, rng);
      const DensityOperator rho = random_density(n, rng);
      const PseudoDistribution d = pseudo_distribution(rho, frame);
      ComplexMatrix rebuilt = ComplexMatrix::Zero(n, n);
      for (int i = 0; i < frame.size(); ++i)
        rebuilt += d.values[i] * frame.effect(i).matrix();
      CHECK((rebuilt - rho.matrix()).norm() <= 1e-10);
      // p = G c
      const RealVector p = representation_probabilities(rho, frame);
      CHECK((frame.gram() * d.values - p).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }

  SUBCASE("negativity occurs for Haar states but never for the center") {
    Rng rng(36);
    int negative = 0;
    for (int i = 0; i < 1000; ++i) {
      const DensityOperator rho =
          DensityOperator::pure(haar_random_state(2, rng));
      if (pseudo_distribution(rho, sic).has_negative)
        ++negative;
    }
    CHECK(negative > 0);
    CHECK_FALSE(
        pseudo_distribution(DensityOperator::maximally_mixed(2), sic)
            .has_negative);
  }
}

TEST_CASE("effect expansions over the frame") {
  const MinimalICPOVM sic = sic_qubit();

  SUBCASE("identity expands with unit coefficients") {
    const RealVector e = effect_expansion(Effect::identity(2), sic);
    for (int i = 0; i < 4; ++i)
      CHECK(e[i] == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("frame projector expands as (2, 0, 0, 0); not a classical effect") {
    const RealVector e =
        effect_expansion(Effect::projector(sic.vector(0)), sic);
    CHECK(e[0] == doctest::Approx(2.0).epsilon(1e-11));
    for (int i = 1; i < 4; ++i)
      CHECK(std::abs(e[i]) <= 1e-10);
    CHECK(e.maxCoeff() > 1.0);
  }

  SUBCASE("antipodal projector picks up a negative coefficient") {
    const RealVector e = effect_expansion(
        Effect::projector(antipodal(sic.vector(0))), sic);
    CHECK(e[0] == doctest::Approx(-1.0).epsilon(1e-11));
    for (int i = 1; i < 4; ++i)
      CHECK(e[i] == doctest::Approx(1.0).epsilon(1e-11));
  }

  SUBCASE("the expansion reproduces Born statistics on random states") {
    Rng rng(37);
    for (int n : {2, 3}) {
      const MinimalICPOVM frame = random_ic_povm(n, rng);
      const Effect effect = random_effect(n, rng);
      const RealVector e = effect_expansion(effect, frame);
      for (int trial = 0; trial < 20; ++trial) {
        const DensityOperator rho = random_density(n, rng);
        const RealVector p = representation_probabilities(rho, frame);
        CHECK(std::abs(born_probability(rho, effect) - e.dot(p)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("the minimal-frame mixture map is not surjective") {
  // Purity of sum_i q_i |w_i><w_i| stays below one except at the frame
  // vectors themselves.
  const MinimalICPOVM sic = sic_qubit();
  Rng rng(38);
  double max_purity = 0.0;
  for (int trial = 0; trial < 100000; ++trial) {
    double q[4];
    double total = 0.0;
    for (double &v : q) {
      v = -std::log(1.0 - rng.uniform()); // Dirichlet(1, 1, 1, 1)
      total += v;
    }
    ComplexMatrix mix = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 4; ++i)
      mix += (q[i] / total) * sic.vector(i).projector();
    max_purity = std::max(max_purity, (mix * mix).trace().real());
  }
  CHECK(max_purity < 1.0 - 1e-4);

  // a vertex of the simplex hits purity one exactly
  ComplexMatrix vertex = sic.vector(2).projector();
  CHECK((vertex * vertex).trace().real() ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("uniform POVM sampling") {
  SUBCASE("Monte Carlo completeness at 1e5 atoms") {
    const UniformPOVMSample sample =
        uniform_povm_sample(2, 100000, std::uint64_t{99});
    CHECK(sample.identity_deviation <= 0.05);
    CHECK(sample.weight == doctest::Approx(2.0 / 100000.0));
    // total trace matches tr(identity) = n
    CHECK(sample.weight * double(sample.atoms.size()) ==
          doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("deterministic repetition") {
    const UniformPOVMSample a = uniform_povm_sample(2, 50, std::uint64_t{7});
    const UniformPOVMSample b = uniform_povm_sample(2, 50, std::uint64_t{7});
    CHECK(a.identity_deviation == b.identity_deviation);
    for (std::size_t j = 0; j < a.atoms.size(); ++j)
      CHECK((a.atoms[j].amplitudes() - b.atoms[j].amplitudes()).norm() ==
            0.0);
  }
}

TEST_CASE("uniform density and smearing kernel") {
  Rng rng(39);

  SUBCASE("maximally mixed density is flat") {
    for (int i = 0; i < 10; ++i)
      CHECK(uniform_density(DensityOperator::maximally_mixed(2),
                            haar_random_state(2, rng)) ==
            doctest::Approx(0.5).epsilon(1e-13));
  }

  SUBCASE("pure-state density is the squared overlap") {
    const PureState psi = haar_random_state(3, rng);
    const DensityOperator rho = DensityOperator::pure(psi);
    for (int i = 0; i < 10; ++i) {
      const PureState omega = haar_random_state(3, rng);
      CHECK(uniform_density(rho, omega) ==
            doctest::Approx(psi.overlap(omega)).epsilon(1e-12));
    }
  }

  SUBCASE("representation densities are never indicator-like") {
    for (int trial = 0; trial < 50; ++trial) {
      const DensityOperator rho = random_density(2, rng);
      const double v = uniform_density(rho, haar_random_state(2, rng));
      CHECK(v > 1e-8);
      CHECK(v < 1.0 - 1e-8);
    }
  }

  SUBCASE("kernel values") {
    const PureState omega = haar_random_state(2, rng);
    CHECK(smearing_kernel(omega, omega) ==
          doctest::Approx(1.0).epsilon(1e-13));
    const PureState up = pure_state_from_bloch(0, 0, 1);
    const PureState down = pure_state_from_bloch(0, 0, -1);
    CHECK(smearing_kernel(up, down) <= 1e-28);
    for (double theta : {0.3, 1.1, 2.4}) {
      const PureState tilted =
          pure_state_from_bloch(std::sin(theta), 0, std::cos(theta));
      CHECK(smearing_kernel(up, tilted) ==
            doctest::Approx(std::cos(theta / 2) * std::cos(theta / 2))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("smearing relation between preimages and representations") {
  Rng rng(40);

  SUBCASE("exact on eigen-decomposition atoms") {
    for (int n : {2, 3}) {
      const DensityOperator rho = random_density(n, rng);
      const ClassicalState p = eigen_decomposition_state(rho);
      std::vector<PureState> probes;
      for (int i = 0; i < 100; ++i)
        probes.push_back(haar_random_state(n, rng));
      CHECK(smearing_check(p, probes) <= 1e-12);
    }
  }

  SUBCASE("single atom: both sides reduce to the kernel") {
    const PureState psi = haar_random_state(2, rng);
    std::vector<PureState> probes;
    for (int i = 0; i < 20; ++i)
      probes.push_back(haar_random_state(2, rng));
    CHECK(smearing_check(ClassicalState::delta(psi), probes) <= 1e-14);
  }

  SUBCASE("uniform-like atom cloud approximates the flat density") {
    std::vector<Atom> atoms;
    const int count = 10000;
    for (int i = 0; i < count; ++i)
      atoms.push_back(Atom{1.0 / count, haar_random_state(2, rng)});
    const ClassicalState p(2, std::move(atoms));
    // the atomic identity is exact regardless of MC error
    std::vector<PureState> probes;
    for (int i = 0; i < 50; ++i)
      probes.push_back(haar_random_state(2, rng));
    CHECK(smearing_check(p, probes) <= 1e-12);
    // and the reduced state approaches 1/2 at MC rate
    CHECK((reduce(p).matrix() - ComplexMatrix::Identity(2, 2) * 0.5)
              .norm() <= 3.0 / std::sqrt(double(count)));
  }
}
