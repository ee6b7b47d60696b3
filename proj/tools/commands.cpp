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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fuzzyqm/crep.hpp"
#include "fuzzyqm/experiments.hpp"
#include "fuzzyqm/update.hpp"

namespace fuzzyqm::cli {

namespace {

json config_json(const RunConfig &config) {
  return json{{"dim", config.dim},         {"seed", config.seed},
              {"trials", config.trials},   {"samples", config.samples},
              {"points", config.points},   {"format", config.format},
              {"deterministic", config.deterministic}};
}

json wrap_report(const std::string &command, const RunConfig &config,
                 json results, bool pass) {
  json report{{"command", command},
              {"config", config_json(config)},
              {"results", std::move(results)},
              {"pass", pass}};
  if (!config.deterministic) {
    const auto now = std::chrono::system_clock::now();
    report["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                              now.time_since_epoch())
                              .count();
  }
  return report;
}

// Flat metrics table: one header row, one value row.
std::string results_csv(const json &results) {
  std::ostringstream header;
  std::ostringstream row;
  bool first = true;
  for (const auto &[key, value] : results.items()) {
    if (!value.is_number() && !value.is_boolean() && !value.is_string())
      continue;
    if (!first) {
      header << ",";
      row << ",";
    }
    first = false;
    header << key;
    row << value.dump();
  }
  return header.str() + "\n" + row.str() + "\n";
}

std::vector<PureState> haar_points(int n, int count, Rng &rng) {
  std::vector<PureState> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(haar_random_state(n, rng));
  return out;
}

} // namespace

CommandResult cmd_reconstruct(const RunConfig &config,
                              const ReconstructOptions &options) {
  Rng rng(config.seed);
  const MinimalICPOVM frame = options.sic
                                  ? sic_qubit()
                                  : random_ic_povm(config.dim, rng);
  double max_error = 0.0;
  for (int trial = 0; trial < config.trials; ++trial) {
    const DensityOperator rho = random_density(config.dim, rng);
    const DensityOperator back =
        reconstruct(representation_probabilities(rho, frame), frame);
    max_error =
        std::max(max_error, frobenius_distance(back.matrix(), rho.matrix()));
  }
  const bool pass = max_error <= options.tolerance;
  json results{{"frame", options.sic ? "sic" : "random"},
               {"gram_condition", frame.gram_condition()},
               {"trials", config.trials},
               {"max_error", max_error},
               {"tolerance", options.tolerance}};
  CommandResult out;
  out.report = wrap_report("reconstruct", config, results, pass);
  if (config.format == "csv")
    out.csv = results_csv(out.report["results"]);
  out.exit_code = pass ? kExitPass : kExitBreach;
  return out;
}

CommandResult cmd_negativity(const RunConfig &config,
                             const NegativityOptions &options) {
  Rng rng(config.seed);
  const bool use_sic =
      options.frame == "sic" || (options.frame == "auto" && config.dim == 2);
  const MinimalICPOVM frame =
      use_sic ? sic_qubit() : random_ic_povm(config.dim, rng);

  int flagged = 0;
  double most_negative = 0.0;
  json witness;
  for (int i = 0; i < config.trials; ++i) {
    const PureState psi = haar_random_state(config.dim, rng);
    const PseudoDistribution d =
        pseudo_distribution(DensityOperator::pure(psi), frame);
    if (d.has_negative)
      ++flagged;
    if (d.min_value < most_negative) {
      most_negative = d.min_value;
      witness = pure_state_to_json(psi);
    }
  }

  const PseudoDistribution mixed = pseudo_distribution(
      DensityOperator::maximally_mixed(config.dim), frame);

  json results{{"frame", use_sic ? "sic" : "random"},
               {"scanned", config.trials},
               {"fraction_negative", double(flagged) / config.trials},
               {"most_negative", most_negative},
               {"maximally_mixed_min", mixed.min_value},
               {"maximally_mixed_flagged", mixed.has_negative}};
  if (!witness.is_null())
    results["witness_state"] = witness;

  bool pass = flagged > 0 && !mixed.has_negative;

  // Optional analytic witness: the state antipodal to a frame vector.
  if (!options.witness.empty()) {
    const std::string prefix = "antipodal:";
    if (options.witness.rfind(prefix, 0) != 0)
      throw ValidationError("negativity: unknown witness spec '" +
                            options.witness + "'");
    const int index = std::stoi(options.witness.substr(prefix.size()));
    if (config.dim != 2 || !use_sic)
      throw ValidationError(
          "negativity: the antipodal witness needs the qubit SIC frame");
    if (index < 0 || index >= frame.size())
      throw ValidationError("negativity: witness index out of range");
    const ComplexVector &v = frame.vector(index).amplitudes();
    const double x = 2.0 * (std::conj(v[0]) * v[1]).real();
    const double y = 2.0 * (std::conj(v[0]) * v[1]).imag();
    const double z = std::norm(v[0]) - std::norm(v[1]);
    const PseudoDistribution d = pseudo_distribution(
        DensityOperator::pure(pure_state_from_bloch(-x, -y, -z)), frame);
    results["antipodal_index"] = index;
    results["antipodal_min"] = d.min_value;
    pass = pass && std::abs(d.min_value + 1.0) <= options.tolerance;
  }

  CommandResult out;
  out.report = wrap_report("negativity", config, results, pass);
  if (config.format == "csv")
    out.csv = results_csv(out.report["results"]);
  out.exit_code = pass ? kExitPass : kExitBreach;
  return out;
}

CommandResult cmd_update_verify(const RunConfig &config,
                                const UpdateVerifyOptions &options) {
  Rng rng(config.seed);
  double worst_resolution = 0.0;
  double worst_transport = 0.0;
  double worst_extension = 0.0;
  double worst_representation = 0.0;
  json worst_extension_report;

  for (int trial = 0; trial < config.trials; ++trial) {
    const DensityOperator rho = random_density(config.dim, rng);
    const DiscretePOVM povm = random_povm(config.dim, options.outcomes, rng);
    const KrausOperation op = options.kraus == "unitary-twirl"
                                  ? twirled_operation(povm, rng)
                                  : luders_operation(povm);

    // resolution of the state into Bayes components
    ComplexMatrix sum = ComplexMatrix::Zero(config.dim, config.dim);
    for (std::size_t d = 0; d < op.size(); ++d)
      sum += bayes_component(rho, povm[d]).matrix;
    worst_resolution =
        std::max(worst_resolution, (sum - rho.matrix()).norm());

    // readjustment transport per outcome
    for (std::size_t d = 0; d < op.size(); ++d)
      worst_transport = std::max(worst_transport,
                                 readjustment(rho, op[d]).transport_residual);

    // Bayes + disturbance in the extension, across prior shapes
    const ClassicalState eigen_prior = eigen_decomposition_state(rho);
    const int m =
        std::min(10, static_cast<int>(eigen_prior.size()) +
                         2 + static_cast<int>(rng.below(3)));
    const ClassicalState random_prior = random_decomposition(rho, m, rng);
    const ClassicalState atom_prior =
        ClassicalState::delta(haar_random_state(config.dim, rng));
    for (std::size_t d = 0; d < op.size(); ++d) {
      for (const ClassicalState *prior :
           {&eigen_prior, &random_prior, &atom_prior}) {
        const double evidence = classical_expectation(
            *prior, ClassicalEffect::induced(op.effect(d)));
        if (evidence <= 1e-9)
          continue; // outcome effectively impossible for this prior
        const UpdateReport r =
            extension_update(*prior, op[d], static_cast<int>(d));
        if (r.residual >= worst_extension) {
          worst_extension = r.residual;
          worst_extension_report = update_report_to_json(r);
        }
      }
    }

    // Bayes + smearing in the representation
    const auto probes = haar_points(config.dim, config.points, rng);
    for (std::size_t d = 0; d < op.size(); ++d)
      worst_representation =
          std::max(worst_representation,
                   representation_update(rho, povm[d], probes));
  }

  const bool pass = worst_resolution <= options.tol_resolution &&
                    worst_transport <= options.tol_transport &&
                    worst_extension <= options.tol_extension &&
                    worst_representation <= options.tol_representation;
  json results{
      {"kraus", options.kraus},
      {"outcomes", options.outcomes},
      {"resolution_residual", worst_resolution},
      {"resolution_tolerance", options.tol_resolution},
      {"transport_residual", worst_transport},
      {"transport_tolerance", options.tol_transport},
      {"extension_residual", worst_extension},
      {"extension_tolerance", options.tol_extension},
      {"representation_residual", worst_representation},
      {"representation_tolerance", options.tol_representation},
      {"worst_extension_update", std::move(worst_extension_report)}};
  CommandResult out;
  out.report = wrap_report("update-verify", config, results, pass);
  if (config.format == "csv")
    out.csv = results_csv(out.report["results"]);
  out.exit_code = pass ? kExitPass : kExitBreach;
  return out;
}

CommandResult cmd_bell(const RunConfig &config, const BellOptions &options) {
  std::array<double, 4> angles = options.angles;
  DensityOperator state =
      options.state == "product" ? product_state_00() : singlet();
  std::string state_label = options.state;
  if (!options.scenario_file.empty()) {
    std::ifstream stream(options.scenario_file);
    if (!stream)
      throw ValidationError("bell: cannot read scenario file " +
                            options.scenario_file);
    const json spec = json::parse(stream);
    const auto parsed = spec.at("angles").get<std::vector<double>>();
    if (parsed.size() != 4)
      throw ValidationError("bell: scenario needs four angles");
    std::copy(parsed.begin(), parsed.end(), angles.begin());
    state = density_from_json(spec.at("state"));
    state_label = "file:" + options.scenario_file;
  }
  const CHSHScenario scenario = chsh_scenario(angles, state);

  json table = json::array();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      table.push_back(json{
          {"a", i},
          {"b", j},
          {"quantum", chsh_correlator(scenario, i, j, CHSHPath::quantum)},
          {"classical_extension",
           chsh_correlator(scenario, i, j, CHSHPath::classical_extension)}});

  const double s_quantum = chsh_value(scenario, CHSHPath::quantum);
  const double s_classical =
      chsh_value(scenario, CHSHPath::classical_extension);
  const double gap = std::abs(s_quantum - s_classical);
  const bool pass =
      gap <= options.path_tolerance && std::abs(s_quantum) > 2.0;

  json results{{"state", state_label},
               {"angles", angles},
               {"S_quantum", s_quantum},
               {"S_classical_extension", s_classical},
               {"path_gap", gap},
               {"violation_margin", std::abs(s_quantum) - 2.0},
               {"correlators", std::move(table)}};
  CommandResult out;
  out.report = wrap_report("bell", config, results, pass);
  if (config.format == "csv") {
    std::ostringstream csv;
    csv << "a,b,quantum,classical_extension\n";
    for (const auto &row : out.report["results"]["correlators"])
      csv << row["a"] << "," << row["b"] << "," << row["quantum"].dump()
          << "," << row["classical_extension"].dump() << "\n";
    out.csv = csv.str();
  }
  out.exit_code = pass ? kExitPass : kExitBreach;
  return out;
}

CommandResult cmd_smearing(const RunConfig &config,
                           const SmearingOptions &options) {
  Rng rng(config.seed);

  // Exact atomic identity on the eigen-decomposition of a random state.
  const DensityOperator rho = random_density(config.dim, rng);
  const ClassicalState preimage = eigen_decomposition_state(rho);
  const auto probes = haar_points(config.dim, config.points, rng);
  const double atomic = smearing_check(preimage, probes);

  // Monte Carlo completeness of the uniform POVM.
  const UniformPOVMSample sample =
      uniform_povm_sample(config.dim, config.samples, rng);
  const double mc_tolerance =
      options.mc_tolerance > 0.0
          ? options.mc_tolerance
          : 10.0 * std::sqrt(double(config.dim) * (config.dim - 1) /
                             double(config.samples));

  const bool pass = atomic <= options.atomic_tolerance &&
                    sample.identity_deviation <= mc_tolerance;
  json results{{"atomic_max_deviation", atomic},
               {"atomic_tolerance", options.atomic_tolerance},
               {"identity_deviation", sample.identity_deviation},
               {"mc_tolerance", mc_tolerance},
               {"samples", config.samples},
               {"points", config.points}};
  CommandResult out;
  out.report = wrap_report("smearing", config, results, pass);
  if (config.format == "csv") {
    // per-atom table of the sampled uniform POVM: the representation
    // density of rho at each atom
    std::ostringstream csv;
    csv << "index,weight,value\n";
    csv.precision(17);
    for (std::size_t j = 0; j < sample.atoms.size(); ++j)
      csv << j << "," << sample.weight << ","
          << uniform_density(rho, sample.atoms[j]) << "\n";
    out.csv = csv.str();
  }
  out.exit_code = pass ? kExitPass : kExitBreach;
  return out;
}

int emit(const RunConfig &config, const CommandResult &result) {
  const std::string payload = config.format == "csv"
                                  ? result.csv
                                  : result.report.dump(2) + "\n";
  if (config.out.empty()) {
    std::cout << payload;
    return result.exit_code;
  }
  const std::filesystem::path target(config.out);
  const std::filesystem::path tmp(config.out + ".tmp");
  {
    std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
    if (!stream)
      throw Error("cannot open output file " + tmp.string());
    stream << payload;
  }
  std::filesystem::rename(tmp, target);
  return result.exit_code;
}

} // namespace fuzzyqm::cli
