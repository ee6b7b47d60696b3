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

#include "fuzzyqm/experiments.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace fuzzyqm {

DensityOperator singlet() {
  ComplexVector psi = ComplexVector::Zero(4);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  psi[1] = inv_sqrt2;  // |01>
  psi[2] = -inv_sqrt2; // |10>
  return DensityOperator::pure(PureState(psi));
}

Effect tensor_effect(const Effect &a, const Effect &b) {
  return Effect(kron(a.matrix(), b.matrix()));
}

Effect dichotomic_plus_effect(double angle_deg) {
  const double t = angle_deg * std::numbers::pi / 180.0;
  ComplexMatrix observable(2, 2);
  observable << std::cos(t), std::sin(t), std::sin(t), -std::cos(t);
  return Effect(0.5 * (ComplexMatrix::Identity(2, 2) + observable));
}

CHSHScenario chsh_scenario(const std::array<double, 4> &angles_deg,
                           const DensityOperator &state) {
  if (state.dim() != 4)
    throw DimensionMismatch("chsh_scenario: state must be two-qubit");
  return CHSHScenario{
      state,
      {dichotomic_plus_effect(angles_deg[0]),
       dichotomic_plus_effect(angles_deg[1])},
      {dichotomic_plus_effect(angles_deg[2]),
       dichotomic_plus_effect(angles_deg[3])},
  };
}

CHSHScenario chsh_optimal_scenario() {
  return chsh_scenario(kChshOptimalAngles, singlet());
}

DensityOperator product_state_00() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi[0] = 1.0;
  return DensityOperator::pure(PureState(psi));
}

namespace {

double joint_probability(const CHSHScenario &scenario, const Effect &ea,
                         const Effect &eb, CHSHPath path,
                         const ClassicalState *preimage) {
  const Effect joint = tensor_effect(ea, eb);
  if (path == CHSHPath::quantum)
    return born_probability(scenario.state, joint);
  return classical_expectation(*preimage, ClassicalEffect::induced(joint));
}

} // namespace

double chsh_correlator(const CHSHScenario &scenario, int i, int j,
                       CHSHPath path) {
  const Effect &a_plus = scenario.alice.at(i);
  const Effect &b_plus = scenario.bob.at(j);
  const Effect a_minus = a_plus.complement();
  const Effect b_minus = b_plus.complement();

  std::optional<ClassicalState> preimage;
  if (path == CHSHPath::classical_extension)
    preimage = eigen_decomposition_state(scenario.state);
  const ClassicalState *pre = preimage ? &*preimage : nullptr;

  return joint_probability(scenario, a_plus, b_plus, path, pre) -
         joint_probability(scenario, a_plus, b_minus, path, pre) -
         joint_probability(scenario, a_minus, b_plus, path, pre) +
         joint_probability(scenario, a_minus, b_minus, path, pre);
}

double chsh_value(const CHSHScenario &scenario, CHSHPath path) {
  return chsh_correlator(scenario, 0, 0, path) +
         chsh_correlator(scenario, 0, 1, path) +
         chsh_correlator(scenario, 1, 0, path) -
         chsh_correlator(scenario, 1, 1, path);
}

} // namespace fuzzyqm
