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

#include "fuzzyqm/io.hpp"

namespace fuzzyqm {

json matrix_to_json(const ComplexMatrix &m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("matrix_to_json: matrix is not square");
  const auto n = m.rows();
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index j = 0; j < n; ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"dim", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json &j) {
  const int n = j.at("dim").get<int>();
  const auto &re = j.at("re");
  const auto &im = j.at("im");
  if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
    throw ValidationError("matrix_from_json: row count != dim");
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(re[i].size()) != n ||
        static_cast<int>(im[i].size()) != n)
      throw ValidationError("matrix_from_json: column count != dim");
    for (int k = 0; k < n; ++k)
      m(i, k) = std::complex<double>(re[i][k].get<double>(),
                                     im[i][k].get<double>());
  }
  return m;
}

json vector_to_json(const ComplexVector &v) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v[i].real());
    im.push_back(v[i].imag());
  }
  return json{{"dim", v.size()}, {"re", std::move(re)},
              {"im", std::move(im)}};
}

ComplexVector vector_from_json(const json &j) {
  const int n = j.at("dim").get<int>();
  const auto &re = j.at("re");
  const auto &im = j.at("im");
  if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
    throw ValidationError("vector_from_json: entry count != dim");
  ComplexVector v(n);
  for (int i = 0; i < n; ++i)
    v[i] = std::complex<double>(re[i].get<double>(), im[i].get<double>());
  return v;
}

json pure_state_to_json(const PureState &s) {
  return vector_to_json(s.amplitudes());
}

PureState pure_state_from_json(const json &j) {
  return PureState(vector_from_json(j));
}

json density_to_json(const DensityOperator &rho) {
  return matrix_to_json(rho.matrix());
}

DensityOperator density_from_json(const json &j) {
  return DensityOperator(matrix_from_json(j));
}

json effect_to_json(const Effect &e) { return matrix_to_json(e.matrix()); }

Effect effect_from_json(const json &j) {
  return Effect(matrix_from_json(j));
}

json classical_state_to_json(const ClassicalState &p) {
  json atoms = json::array();
  for (const Atom &a : p.atoms()) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index i = 0; i < a.state.amplitudes().size(); ++i) {
      re.push_back(a.state.amplitudes()[i].real());
      im.push_back(a.state.amplitudes()[i].imag());
    }
    atoms.push_back(
        json{{"w", a.weight}, {"re", std::move(re)}, {"im", std::move(im)}});
  }
  return json{{"dim", p.dim()}, {"atoms", std::move(atoms)}};
}

ClassicalState classical_state_from_json(const json &j) {
  const int n = j.at("dim").get<int>();
  std::vector<Atom> atoms;
  for (const auto &entry : j.at("atoms")) {
    const auto &re = entry.at("re");
    const auto &im = entry.at("im");
    if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
      throw ValidationError("classical_state_from_json: atom dim mismatch");
    ComplexVector v(n);
    for (int i = 0; i < n; ++i)
      v[i] = std::complex<double>(re[i].get<double>(), im[i].get<double>());
    atoms.push_back(Atom{entry.at("w").get<double>(), PureState(v)});
  }
  return ClassicalState(n, std::move(atoms));
}

json frame_to_json(const MinimalICPOVM &frame) {
  json vectors = json::array();
  for (const PureState &v : frame.vectors())
    vectors.push_back(vector_to_json(v.amplitudes()));
  return json{{"dim", frame.dim()},
              {"vectors", std::move(vectors)},
              {"weights", frame.weights()}};
}

MinimalICPOVM frame_from_json(const json &j) {
  std::vector<PureState> vectors;
  for (const auto &entry : j.at("vectors"))
    vectors.push_back(PureState(vector_from_json(entry)));
  return MinimalICPOVM(std::move(vectors),
                       j.at("weights").get<std::vector<double>>());
}

json pseudo_distribution_to_json(const PseudoDistribution &d) {
  return json{{"values", std::vector<double>(d.values.begin(),
                                             d.values.end())},
              {"min_value", d.min_value},
              {"has_negative", d.has_negative}};
}

json update_report_to_json(const UpdateReport &r) {
  return json{{"outcome", r.outcome},
              {"prior", classical_state_to_json(r.prior)},
              {"posterior", classical_state_to_json(r.posterior)},
              {"disturbed", classical_state_to_json(r.disturbed)},
              {"target", density_to_json(r.target)},
              {"residual", r.residual}};
}

} // namespace fuzzyqm
