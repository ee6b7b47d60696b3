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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fuzzyqm/crep.hpp"
#include "fuzzyqm/experiments.hpp"
#include "fuzzyqm/update.hpp"

namespace py = pybind11;
using namespace fuzzyqm;

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

PYBIND11_MODULE(_core, m) {
  m.doc() = "Classical extensions and frame representations of "
            "finite-dimensional quantum mechanics";

  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch",
                                            PyExc_ValueError);
  py::register_exception<ZeroProbabilityOutcome>(m, "ZeroProbabilityOutcome",
                                                 PyExc_ArithmeticError);
  py::register_exception<ZeroEvidence>(m, "ZeroEvidence",
                                       PyExc_ArithmeticError);
  py::register_exception<GramSingular>(m, "GramSingular",
                                       PyExc_ArithmeticError);
  py::register_exception<NotAState>(m, "NotAState", PyExc_ValueError);
  py::register_exception<FrameDegenerate>(m, "FrameDegenerate",
                                          PyExc_RuntimeError);
  py::register_exception<AtomSetMismatch>(m, "AtomSetMismatch",
                                          PyExc_ValueError);

  py::class_<Rng>(m, "Rng", "Seeded random source")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", &Rng::uniform)
      .def("gaussian", &Rng::gaussian)
      .def("fork", &Rng::fork, py::arg("stream"));

  py::class_<PureState>(m, "PureState",
                        "Unit vector identified up to global phase")
      .def(py::init<ComplexVector>(), py::arg("amplitudes"))
      .def_property_readonly("dim", &PureState::dim)
      .def_property_readonly("amplitudes", &PureState::amplitudes)
      .def("projector", &PureState::projector)
      .def("overlap", &PureState::overlap, py::arg("other"));

  py::class_<DensityOperator>(m, "DensityOperator",
                              "Positive unit-trace Hermitian matrix")
      .def(py::init<ComplexMatrix>(), py::arg("matrix"))
      .def_static("pure", &DensityOperator::pure, py::arg("state"))
      .def_static("maximally_mixed", &DensityOperator::maximally_mixed,
                  py::arg("n"))
      .def_property_readonly("dim", &DensityOperator::dim)
      .def_property_readonly("matrix", &DensityOperator::matrix)
      .def("purity", &DensityOperator::purity);

  py::class_<Effect>(m, "Effect",
                     "Hermitian operator with spectrum in [0, 1]")
      .def(py::init<ComplexMatrix>(), py::arg("matrix"))
      .def_static("identity", &Effect::identity, py::arg("n"))
      .def_static("projector", &Effect::projector, py::arg("state"))
      .def_property_readonly("dim", &Effect::dim)
      .def_property_readonly("matrix", &Effect::matrix)
      .def("complement", &Effect::complement);

  py::class_<DiscretePOVM>(m, "DiscretePOVM",
                           "Effects summing to the identity")
      .def(py::init<std::vector<Effect>>(), py::arg("effects"))
      .def_property_readonly("dim", &DiscretePOVM::dim)
      .def("__len__", &DiscretePOVM::size)
      .def("__getitem__",
           [](const DiscretePOVM &p, std::size_t d) {
             if (d >= p.size())
               throw py::index_error();
             return p[d];
           });

  py::class_<KrausOperation>(m, "KrausOperation",
                             "Operators A_d with sum_d A_d* A_d = 1")
      .def(py::init<std::vector<ComplexMatrix>>(), py::arg("operators"))
      .def_property_readonly("dim", &KrausOperation::dim)
      .def("__len__", &KrausOperation::size)
      .def("__getitem__",
           [](const KrausOperation &op, std::size_t d) {
             if (d >= op.size())
               throw py::index_error();
             return op[d];
           })
      .def("effect", &KrausOperation::effect, py::arg("d"))
      .def("povm", &KrausOperation::povm);

  py::class_<Atom>(m, "Atom")
      .def(py::init<double, PureState>(), py::arg("weight"),
           py::arg("state"))
      .def_readonly("weight", &Atom::weight)
      .def_readonly("state", &Atom::state);

  py::class_<ClassicalState>(
      m, "ClassicalState",
      "Finite atomic probability measure over pure states")
      .def(py::init<int, std::vector<Atom>>(), py::arg("dim"),
           py::arg("atoms"))
      .def_static("delta", &ClassicalState::delta, py::arg("state"))
      .def_property_readonly("dim", &ClassicalState::dim)
      .def("__len__", &ClassicalState::size)
      .def_property_readonly("atoms", &ClassicalState::atoms)
      .def_property_readonly("fingerprint", &ClassicalState::fingerprint);

  py::class_<ClassicalEffect>(m, "ClassicalEffect",
                              "Map from pure states to [0, 1]")
      .def_static("induced", &ClassicalEffect::induced, py::arg("effect"))
      .def_static("constant", &ClassicalEffect::constant, py::arg("dim"),
                  py::arg("value"))
      .def_static("tabulated", &ClassicalEffect::tabulated, py::arg("basis"),
                  py::arg("values"))
      .def_static("product", &ClassicalEffect::product, py::arg("a"),
                  py::arg("b"))
      .def_property_readonly("dim", &ClassicalEffect::dim)
      .def_property_readonly("is_tabulated", &ClassicalEffect::is_tabulated)
      .def("value", &ClassicalEffect::value, py::arg("state"));

  py::class_<FuzzyObservable>(m, "FuzzyObservable",
                              "Outcome-indexed classical effects")
      .def(py::init<std::vector<ClassicalEffect>,
                    std::optional<std::vector<double>>>(),
           py::arg("effects"), py::arg("outcome_values") = py::none())
      .def_static("c_representative", &FuzzyObservable::c_representative,
                  py::arg("povm"), py::arg("outcome_values") = py::none())
      .def_property_readonly("dim", &FuzzyObservable::dim)
      .def("__len__", &FuzzyObservable::size)
      .def("effect", &FuzzyObservable::effect, py::arg("d"))
      .def_property_readonly("outcome_values",
                             &FuzzyObservable::outcome_values);

  py::class_<MinimalICPOVM>(m, "MinimalICPOVM",
                            "Minimal informationally complete frame")
      .def(py::init<std::vector<PureState>, std::vector<double>>(),
           py::arg("vectors"), py::arg("weights"))
      .def_property_readonly("dim", &MinimalICPOVM::dim)
      .def("__len__", &MinimalICPOVM::size)
      .def("vector", &MinimalICPOVM::vector, py::arg("i"))
      .def("weight", &MinimalICPOVM::weight, py::arg("i"))
      .def("effect", &MinimalICPOVM::effect, py::arg("i"))
      .def_property_readonly("gram", &MinimalICPOVM::gram)
      .def_property_readonly("gram_condition",
                             &MinimalICPOVM::gram_condition);

  py::class_<PseudoDistribution>(m, "PseudoDistribution")
      .def_readonly("values", &PseudoDistribution::values)
      .def_readonly("min_value", &PseudoDistribution::min_value)
      .def_readonly("has_negative", &PseudoDistribution::has_negative);

  py::class_<UniformPOVMSample>(m, "UniformPOVMSample")
      .def_readonly("dim", &UniformPOVMSample::dim)
      .def_readonly("atoms", &UniformPOVMSample::atoms)
      .def_readonly("weight", &UniformPOVMSample::weight)
      .def_readonly("identity_deviation",
                    &UniformPOVMSample::identity_deviation);

  py::class_<BayesComponent>(m, "BayesComponent")
      .def_readonly("outcome", &BayesComponent::outcome)
      .def_readonly("matrix", &BayesComponent::matrix)
      .def_readonly("weight", &BayesComponent::weight);

  py::class_<Readjustment>(m, "Readjustment")
      .def_readonly("isometry", &Readjustment::isometry)
      .def_readonly("transport_residual", &Readjustment::transport_residual)
      .def_readonly("verified", &Readjustment::verified);

  py::class_<UpdateReport>(m, "UpdateReport")
      .def_readonly("outcome", &UpdateReport::outcome)
      .def_readonly("prior", &UpdateReport::prior)
      .def_readonly("posterior", &UpdateReport::posterior)
      .def_readonly("disturbed", &UpdateReport::disturbed)
      .def_readonly("target", &UpdateReport::target)
      .def_readonly("residual", &UpdateReport::residual);

  py::class_<EffectEigenExpansion>(m, "EffectEigenExpansion")
      .def_readonly("effect", &EffectEigenExpansion::effect)
      .def_readonly("values", &EffectEigenExpansion::values)
      .def_readonly("states", &EffectEigenExpansion::states);

  py::class_<CollapseOutcome>(m, "CollapseOutcome")
      .def_readonly("outcome", &CollapseOutcome::outcome)
      .def_readonly("skipped", &CollapseOutcome::skipped)
      .def_readonly("probability", &CollapseOutcome::probability)
      .def_readonly("bayes_term", &CollapseOutcome::bayes_term)
      .def_readonly("bayes_posterior", &CollapseOutcome::bayes_posterior)
      .def_readonly("readjustment", &CollapseOutcome::readjustment)
      .def_readonly("final_state", &CollapseOutcome::final_state);

  py::class_<CollapseReport>(m, "CollapseReport")
      .def_readonly("outcomes", &CollapseReport::outcomes)
      .def_readonly("mixture_residual", &CollapseReport::mixture_residual);

  py::class_<CHSHScenario>(m, "CHSHScenario")
      .def_readonly("state", &CHSHScenario::state)
      .def_readonly("alice", &CHSHScenario::alice)
      .def_readonly("bob", &CHSHScenario::bob);

  py::enum_<CHSHPath>(m, "CHSHPath")
      .value("quantum", CHSHPath::quantum)
      .value("classical_extension", CHSHPath::classical_extension);

  // --- qcore operations ---
  m.def("born_probability", &born_probability, py::arg("rho"),
        py::arg("effect"), "tr(rho E), tiny negatives clamped to zero");
  m.def("matrix_sqrt", &matrix_sqrt, py::arg("psd"),
        "Unique PSD square root via spectral decomposition");
  m.def(
      "polar_decompose",
      [](const ComplexMatrix &mat) {
        const PolarDecomposition p = polar_decompose(mat);
        return py::make_tuple(p.unitary, p.positive);
      },
      py::arg("matrix"),
      "Polar decomposition (unitary, positive) with m = unitary @ positive");
  m.def(
      "apply_operation",
      [](const DensityOperator &rho, const ComplexMatrix &kraus) {
        const ApplyResult r = apply_operation(rho, kraus);
        return py::make_tuple(r.state, r.probability);
      },
      py::arg("rho"), py::arg("kraus"),
      "Conditional state and probability for one Kraus operator");
  m.def("haar_random_state",
        py::overload_cast<int, std::uint64_t>(&haar_random_state),
        py::arg("n"), py::arg("seed"));
  m.def("haar_random_state", py::overload_cast<int, Rng &>(&haar_random_state),
        py::arg("n"), py::arg("rng"));
  m.def("random_density",
        py::overload_cast<int, std::uint64_t>(&random_density), py::arg("n"),
        py::arg("seed"));
  m.def("random_density", py::overload_cast<int, Rng &>(&random_density),
        py::arg("n"), py::arg("rng"));
  m.def("random_unitary", &random_unitary, py::arg("n"), py::arg("rng"));
  m.def("random_effect", &random_effect, py::arg("n"), py::arg("rng"));
  m.def("random_povm", &random_povm, py::arg("n"), py::arg("outcomes"),
        py::arg("rng"));
  m.def("luders_operation", &luders_operation, py::arg("povm"));
  m.def("twirled_operation", &twirled_operation, py::arg("povm"),
        py::arg("rng"));
  m.def("pure_state_from_bloch", &pure_state_from_bloch, py::arg("x"),
        py::arg("y"), py::arg("z"));

  // --- classical extension ---
  m.def("reduce", &reduce, py::arg("p"),
        "The reduction map: sum_k w_k |w_k><w_k|");
  m.def("induced_effect", &induced_effect, py::arg("effect"),
        "The c-effect e(w) = <w|E|w>");
  m.def("classical_expectation", &classical_expectation, py::arg("p"),
        py::arg("e"));
  m.def("statistics_gap", &statistics_gap, py::arg("p"), py::arg("effect"));
  m.def("eigen_decomposition_state", &eigen_decomposition_state,
        py::arg("rho"));
  m.def("random_decomposition",
        py::overload_cast<const DensityOperator &, int, std::uint64_t>(
            &random_decomposition),
        py::arg("rho"), py::arg("m"), py::arg("seed"));
  m.def("random_decomposition",
        py::overload_cast<const DensityOperator &, int, Rng &>(
            &random_decomposition),
        py::arg("rho"), py::arg("m"), py::arg("rng"));
  m.def("joint_observable", &joint_observable, py::arg("a"), py::arg("b"));
  m.def("dispersion", &dispersion, py::arg("p"), py::arg("observable"));

  // --- classical representations ---
  m.def("sic_qubit", &sic_qubit);
  m.def("random_ic_povm",
        py::overload_cast<int, std::uint64_t>(&random_ic_povm), py::arg("n"),
        py::arg("seed"));
  m.def("random_ic_povm", py::overload_cast<int, Rng &>(&random_ic_povm),
        py::arg("n"), py::arg("rng"));
  m.def("representation_probabilities", &representation_probabilities,
        py::arg("rho"), py::arg("frame"));
  m.def("reconstruct", &reconstruct, py::arg("probabilities"),
        py::arg("frame"));
  m.def("pseudo_distribution", &pseudo_distribution, py::arg("rho"),
        py::arg("frame"));
  m.def("effect_expansion", &effect_expansion, py::arg("effect"),
        py::arg("frame"));
  m.def("uniform_povm_sample",
        py::overload_cast<int, int, std::uint64_t>(&uniform_povm_sample),
        py::arg("n"), py::arg("count"), py::arg("seed"));
  m.def("uniform_density", &uniform_density, py::arg("rho"),
        py::arg("omega"));
  m.def("smearing_kernel", &smearing_kernel, py::arg("omega"),
        py::arg("omega_tilde"));
  m.def(
      "smearing_check",
      [](const ClassicalState &p, const std::vector<PureState> &points) {
        return smearing_check(p, points);
      },
      py::arg("p"), py::arg("test_points"));

  // --- measurement updating ---
  m.def("bayes_component", &bayes_component, py::arg("rho"),
        py::arg("effect"), py::arg("outcome") = -1);
  m.def("readjustment", &readjustment, py::arg("rho"), py::arg("kraus"));
  m.def(
      "classical_bayes_update",
      [](const ClassicalState &p, const ClassicalEffect &e) {
        const BayesUpdateResult r = classical_bayes_update(p, e);
        return py::make_tuple(r.posterior, r.evidence);
      },
      py::arg("p"), py::arg("e"), "Returns (posterior, evidence)");
  m.def("disturbance_map", &disturbance_map, py::arg("kraus"),
        py::arg("omega"), "A_d|w> normalized, or None when annihilated");
  m.def("extension_update", &extension_update, py::arg("p"),
        py::arg("kraus"), py::arg("outcome") = -1);
  m.def("effect_eigen_expansion", &effect_eigen_expansion,
        py::arg("effect"));
  m.def("sigma_map", &sigma_map, py::arg("rho"), py::arg("omega"));
  m.def(
      "representation_update",
      [](const DensityOperator &rho, const Effect &effect,
         const std::vector<PureState> &points) {
        return representation_update(rho, effect, points);
      },
      py::arg("rho"), py::arg("effect"), py::arg("test_points"));
  m.def("full_collapse_decomposition", &full_collapse_decomposition,
        py::arg("rho"), py::arg("operation"));

  // --- experiments ---
  m.def("singlet", &singlet);
  m.def("tensor_effect", &tensor_effect, py::arg("a"), py::arg("b"));
  m.def("dichotomic_plus_effect", &dichotomic_plus_effect,
        py::arg("angle_deg"));
  m.def("chsh_scenario", &chsh_scenario, py::arg("angles_deg"),
        py::arg("state"));
  m.def("chsh_optimal_scenario", &chsh_optimal_scenario);
  m.def("product_state_00", &product_state_00);
  m.def("chsh_correlator", &chsh_correlator, py::arg("scenario"),
        py::arg("i"), py::arg("j"), py::arg("path"));
  m.def("chsh_value", &chsh_value, py::arg("scenario"), py::arg("path"));
  m.attr("CHSH_OPTIMAL_ANGLES") =
      std::vector<double>(kChshOptimalAngles.begin(),
                          kChshOptimalAngles.end());

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
