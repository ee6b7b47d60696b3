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

#ifndef FUZZYQM_EXPERIMENTS_HPP
#define FUZZYQM_EXPERIMENTS_HPP

#include <array>

#include "fuzzyqm/cext.hpp"
#include "fuzzyqm/qcore.hpp"

namespace fuzzyqm {

/// A CHSH experiment: a two-qubit state and four dichotomic observables
/// given as their +1 effects on the local factors (A on the first, B on the
/// second).
struct CHSHScenario {
  DensityOperator state; // dim 4
  std::array<Effect, 2> alice;
  std::array<Effect, 2> bob;
};

enum class CHSHPath {
  quantum,             // Born probabilities on the two-qubit state
  classical_extension, // induced effects on a preimage of the state
};

/// The singlet (|01> - |10>)/sqrt(2) as a density operator.
DensityOperator singlet();

/// Kronecker product of effects on subsystems.
Effect tensor_effect(const Effect &a, const Effect &b);

/// The +1 effect (1 + cos(t) sz + sin(t) sx)/2 of a Bloch-plane dichotomic
/// observable at the given angle (degrees, measured from the z axis in the
/// x-z plane).
Effect dichotomic_plus_effect(double angle_deg);

/// Scenario with observables at the given angles. The defaults realize the
/// maximal singlet violation S = +2*sqrt(2) for the combination
/// S = E(A0 B0) + E(A0 B1) + E(A1 B0) - E(A1 B1).
inline constexpr std::array<double, 4> kChshOptimalAngles = {0.0, 270.0,
                                                             135.0, 225.0};

CHSHScenario chsh_scenario(const std::array<double, 4> &angles_deg,
                           const DensityOperator &state);
CHSHScenario chsh_optimal_scenario();

/// The product state |00><00|, for the no-violation baseline.
DensityOperator product_state_00();

/// Correlator E(A_i B_j) in [-1, 1] along the chosen path. The classical
/// path evaluates induced effects on the state's eigen-decomposition
/// preimage; the quantum path uses Born probabilities. Both agree to
/// rounding by construction of the extension.
double chsh_correlator(const CHSHScenario &scenario, int i, int j,
                       CHSHPath path);

/// S = E(A0 B0) + E(A0 B1) + E(A1 B0) - E(A1 B1).
double chsh_value(const CHSHScenario &scenario, CHSHPath path);

} // namespace fuzzyqm

#endif // FUZZYQM_EXPERIMENTS_HPP
