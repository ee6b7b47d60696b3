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

// Acceptance suite: end-to-end checks of every contract the library ships
// with, each printed as one pass/fail line. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzyqm/crep.hpp"
#include "fuzzyqm/experiments.hpp"
#include "fuzzyqm/update.hpp"

using namespace fuzzyqm;

namespace {

struct Criterion {
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

std::vector<Criterion> g_results;

void run(const std::string &name, double time_budget_s,
         const std::function<std::pair<bool, std::string>()> &body) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = body();
  } catch (const std::exception &e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (time_budget_s > 0.0 && seconds > time_budget_s) {
    pass = false;
    detail += " [over time budget " + std::to_string(time_budget_s) + "s]";
  }
  g_results.push_back(Criterion{name, pass, detail, seconds});
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

PureState antipodal_qubit(const PureState &omega) {
  const ComplexVector &v = omega.amplitudes();
  const double x = 2.0 * (std::conj(v[0]) * v[1]).real();
  const double y = 2.0 * (std::conj(v[0]) * v[1]).imag();
  const double z = std::norm(v[0]) - std::norm(v[1]);
  return pure_state_from_bloch(-x, -y, -z);
}

// -- criterion bodies -------------------------------------------------------

std::pair<bool, std::string> statistics_equality() {
  Rng rng(1001);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 3; // 2, 3, 4
    const DensityOperator rho = random_density(n, rng);
    const int m = static_cast<int>(
        eigen_decomposition_state(rho).size() + rng.below(5));
    const ClassicalState p = random_decomposition(rho, m, rng);
    worst = std::max(worst, statistics_gap(p, random_effect(n, rng)));
  }
  return {worst <= 1e-12, "max gap " + fmt(worst)};
}

std::pair<bool, std::string> frame_reconstruction() {
  Rng rng(1002);
  double worst = 0.0;
  auto roundtrip = [&](const MinimalICPOVM &frame, int n) {
    for (int trial = 0; trial < 50; ++trial) {
      const DensityOperator rho = random_density(n, rng);
      const DensityOperator back =
          reconstruct(representation_probabilities(rho, frame), frame);
      worst = std::max(worst,
                       frobenius_distance(back.matrix(), rho.matrix()));
    }
  };
  roundtrip(sic_qubit(), 2);
  for (int n : {2, 3, 4})
    roundtrip(random_ic_povm(n, rng), n);
  return {worst <= 1e-10, "max roundtrip error " + fmt(worst)};
}

std::pair<bool, std::string> sic_golden_values() {
  const MinimalICPOVM sic = sic_qubit();

  // Independent oracle: assemble the Gram matrix from scratch and solve it
  // with a QR factorization, bypassing the library's cached solver.
  auto oracle = [&](const DensityOperator &rho) {
    const int N = sic.size();
    RealMatrix gram(N, N);
    RealVector probs(N);
    for (int i = 0; i < N; ++i) {
      const ComplexMatrix ei = 0.5 * sic.vector(i).projector();
      probs[i] = (rho.matrix() * ei).trace().real();
      for (int j = 0; j < N; ++j) {
        const ComplexMatrix ej = 0.5 * sic.vector(j).projector();
        gram(i, j) = (ei * ej).trace().real();
      }
    }
    return std::pair{RealVector(gram.colPivHouseholderQr().solve(probs)),
                     probs};
  };

  struct Case {
    DensityOperator rho;
    RealVector expected;
  };
  RealVector aligned(4), anti(4), mixed(4);
  aligned << 2, 0, 0, 0;
  anti << -1, 1, 1, 1;
  mixed << 0.5, 0.5, 0.5, 0.5;
  const std::vector<Case> cases{
      {DensityOperator::pure(sic.vector(0)), aligned},
      {DensityOperator::pure(antipodal_qubit(sic.vector(0))), anti},
      {DensityOperator::maximally_mixed(2), mixed},
  };

  double worst = 0.0;
  for (const Case &c : cases) {
    const auto [oracle_values, probs] = oracle(c.rho);
    const PseudoDistribution d = pseudo_distribution(c.rho, sic);
    for (int i = 0; i < 4; ++i) {
      worst = std::max(worst, std::abs(d.values[i] - c.expected[i]));
      worst = std::max(worst, std::abs(oracle_values[i] - c.expected[i]));
      // closed-form cross-check for the qubit SIC
      worst = std::max(worst,
                       std::abs(d.values[i] - (6.0 * probs[i] - 1.0)));
    }
  }
  return {worst <= 1e-10, "max deviation from golden values " + fmt(worst)};
}

std::pair<bool, std::string> collapse_decomposition() {
  Rng rng(1004);
  double worst_resolution = 0.0;
  double worst_transport = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4; // 2..5
    const int outcomes = 2 + static_cast<int>(rng.below(5)); // 2..6
    const DensityOperator rho = random_density(n, rng);
    const DiscretePOVM povm = random_povm(n, outcomes, rng);
    const KrausOperation op = (trial % 2 == 0)
                                  ? luders_operation(povm)
                                  : twirled_operation(povm, rng);
    const CollapseReport report = full_collapse_decomposition(rho, op);
    worst_resolution = std::max(worst_resolution, report.mixture_residual);
    for (const CollapseOutcome &o : report.outcomes)
      if (!o.skipped)
        worst_transport = std::max(worst_transport,
                                   o.readjustment->transport_residual);
  }
  const bool pass = worst_resolution <= 1e-12 && worst_transport <= 1e-10;
  return {pass, "resolution " + fmt(worst_resolution) + ", transport " +
                    fmt(worst_transport)};
}

std::pair<bool, std::string> extension_bayes_disturbance() {
  Rng rng(1005);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const DensityOperator rho = random_density(n, rng);
    const DiscretePOVM povm = random_povm(n, 3, rng);
    const KrausOperation op = (trial % 2 == 0)
                                  ? luders_operation(povm)
                                  : twirled_operation(povm, rng);
    const ClassicalState eigen_prior = eigen_decomposition_state(rho);
    const int m = static_cast<int>(eigen_prior.size()) + 1 +
                  static_cast<int>(rng.below(
                      10 - eigen_prior.size()));
    const ClassicalState random_prior = random_decomposition(rho, m, rng);
    const ClassicalState atom_prior =
        ClassicalState::delta(haar_random_state(n, rng));
    for (std::size_t d = 0; d < op.size(); ++d) {
      for (const ClassicalState *prior :
           {&eigen_prior, &random_prior, &atom_prior}) {
        const double evidence = classical_expectation(
            *prior, ClassicalEffect::induced(op.effect(d)));
        if (evidence <= 1e-9)
          continue;
        worst = std::max(worst, extension_update(*prior, op[d]).residual);
      }
    }
  }
  return {worst <= 1e-10, "max residual " + fmt(worst)};
}

std::pair<bool, std::string> representation_bayes_smearing() {
  Rng rng(1006);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 3; // 2..4
    const DensityOperator rho = random_density(n, rng);
    const Effect effect = random_effect(n, rng);
    std::vector<PureState> probes;
    probes.reserve(100);
    for (int i = 0; i < 100; ++i)
      probes.push_back(haar_random_state(n, rng));
    worst = std::max(worst, representation_update(rho, effect, probes));
  }
  return {worst <= 1e-10, "max deviation " + fmt(worst)};
}

std::pair<bool, std::string> chsh() {
  const double tsirelson = 2.0 * std::numbers::sqrt2;
  const CHSHScenario optimal = chsh_optimal_scenario();
  const double sq = chsh_value(optimal, CHSHPath::quantum);
  const double sc = chsh_value(optimal, CHSHPath::classical_extension);
  const CHSHScenario product =
      chsh_scenario(kChshOptimalAngles, product_state_00());
  const double sp = chsh_value(product, CHSHPath::quantum);

  const bool pass = std::abs(std::abs(sq) - tsirelson) <= 1e-9 &&
                    std::abs(sq - sc) <= 1e-12 &&
                    std::abs(sp) <= 2.0 + 1e-12;
  return {pass, "S " + fmt(sq) + ", path gap " + fmt(std::abs(sq - sc)) +
                    ", product S " + fmt(sp)};
}

std::pair<bool, std::string> negativity_witness() {
  Rng rng(1008);
  const MinimalICPOVM sic = sic_qubit();
  int flagged = 0;
  for (int i = 0; i < 1000; ++i) {
    const DensityOperator rho =
        DensityOperator::pure(haar_random_state(2, rng));
    if (pseudo_distribution(rho, sic).min_value < -1e-10)
      ++flagged;
  }
  const bool mixed_clean =
      !pseudo_distribution(DensityOperator::maximally_mixed(2), sic)
           .has_negative;
  const bool pass = flagged > 0 && mixed_clean;
  return {pass, std::to_string(flagged) + "/1000 flagged, center clean: " +
                    (mixed_clean ? "yes" : "no")};
}

std::pair<bool, std::string> uniform_povm_monte_carlo() {
  Rng rng(1009);
  const UniformPOVMSample sample = uniform_povm_sample(2, 100000, rng);

  const DensityOperator rho = random_density(2, rng);
  const ClassicalState p = eigen_decomposition_state(rho);
  std::vector<PureState> probes;
  for (int i = 0; i < 100; ++i)
    probes.push_back(haar_random_state(2, rng));
  const double atomic = smearing_check(p, probes);

  const bool pass = sample.identity_deviation <= 0.05 && atomic <= 1e-12;
  return {pass, "identity deviation " + fmt(sample.identity_deviation) +
                    ", atomic smearing " + fmt(atomic)};
}

std::pair<bool, std::string> cli_determinism() {
  namespace fs = std::filesystem;
  const char *cli = std::getenv("FUZZYQM_CLI");
  const std::string binary = cli ? cli : FUZZYQM_CLI_PATH;
  const fs::path a = fs::temp_directory_path() / "fuzzyqm_acc_a";
  const fs::path b = fs::temp_directory_path() / "fuzzyqm_acc_b";
  const std::vector<std::string> commands{
      "reconstruct --dim 2 --sic --trials 10 --seed 7 --deterministic",
      "negativity --trials 100 --seed 7 --deterministic",
      "update-verify --dim 2 --outcomes 3 --trials 5 --seed 7 "
      "--deterministic",
      "bell --seed 7 --deterministic",
      "smearing --samples 5000 --seed 7 --deterministic",
  };
  auto slurp = [](const fs::path &p) {
    std::ifstream stream(p, std::ios::binary);
    std::stringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
  };
  for (const std::string &cmd : commands) {
    const std::string first =
        binary + " " + cmd + " --out " + a.string() + " >/dev/null 2>&1";
    const std::string second =
        binary + " " + cmd + " --out " + b.string() + " >/dev/null 2>&1";
    if (std::system(first.c_str()) != 0 ||
        std::system(second.c_str()) != 0)
      return {false, "CLI run failed: " + cmd};
    if (slurp(a) != slurp(b))
      return {false, "reports differ for: " + cmd};
  }
  return {true, std::to_string(commands.size()) +
                    " subcommands byte-identical on rerun"};
}

} // namespace

int main() {
  run("statistics equality, 500 random pairs, n in {2,3,4}", 5.0,
      statistics_equality);
  run("frame reconstruction roundtrip, SIC and random frames", 10.0,
      frame_reconstruction);
  run("SIC pseudo-distribution golden values", 0.0, sic_golden_values);
  run("collapse decomposition: resolution and transport, 100 instances",
      10.0, collapse_decomposition);
  run("extension update: Bayes + disturbance across priors, 100 instances",
      0.0, extension_bayes_disturbance);
  run("representation update: Bayes + smearing, 50 instances", 0.0,
      representation_bayes_smearing);
  run("CHSH: Tsirelson value, path equality, separable bound", 0.0, chsh);
  run("negativity witness over 1000 Haar qubit states", 0.0,
      negativity_witness);
  run("uniform POVM Monte Carlo and atomic smearing", 30.0,
      uniform_povm_monte_carlo);
  run("CLI determinism: byte-identical seeded reruns", 0.0,
      cli_determinism);

  int failures = 0;
  for (std::size_t i = 0; i < g_results.size(); ++i) {
    const Criterion &c = g_results[i];
    if (!c.pass)
      ++failures;
    std::printf("[%s] criterion %zu: %s (%s; %.2fs)\n",
                c.pass ? "PASS" : "FAIL", i + 1, c.name.c_str(),
                c.detail.c_str(), c.seconds);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(g_results.size()) - failures,
              g_results.size());
  return failures == 0 ? 0 : 1;
}
