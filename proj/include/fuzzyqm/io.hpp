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

#ifndef FUZZYQM_IO_HPP
#define FUZZYQM_IO_HPP

#include <json.hpp>

#include "fuzzyqm/cext.hpp"
#include "fuzzyqm/crep.hpp"
#include "fuzzyqm/qcore.hpp"
#include "fuzzyqm/update.hpp"

namespace fuzzyqm {

// Reports keep insertion order so that identical runs serialize to
// identical bytes.
using json = nlohmann::ordered_json;

/// Square complex matrix as { "dim": n, "re": [[...]], "im": [[...]] }.
json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const json &j);

/// Amplitude vector as { "dim": n, "re": [...], "im": [...] }.
json vector_to_json(const ComplexVector &v);
ComplexVector vector_from_json(const json &j);

json pure_state_to_json(const PureState &s);
PureState pure_state_from_json(const json &j);

json density_to_json(const DensityOperator &rho);
DensityOperator density_from_json(const json &j);

json effect_to_json(const Effect &e);
Effect effect_from_json(const json &j);

/// { "dim": n, "atoms": [{ "w": w, "re": [...], "im": [...] }] }.
json classical_state_to_json(const ClassicalState &p);
ClassicalState classical_state_from_json(const json &j);

/// { "dim": n, "vectors": [...], "weights": [...] }.
json frame_to_json(const MinimalICPOVM &frame);
MinimalICPOVM frame_from_json(const json &j);

json pseudo_distribution_to_json(const PseudoDistribution &d);

json update_report_to_json(const UpdateReport &r);

} // namespace fuzzyqm

#endif // FUZZYQM_IO_HPP
