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

#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

namespace {

using namespace fuzzyqm::cli;

void add_common_options(CLI::App *cmd, RunConfig &config) {
  cmd->add_option("--dim", config.dim, "System dimension")
      ->check(CLI::Range(2, 16));
  cmd->add_option("--seed", config.seed, "RNG seed")
      ->envname("FUZZYQM_SEED");
  cmd->add_option("--trials", config.trials, "Number of random instances")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--samples", config.samples,
                  "Monte Carlo sample count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--points", config.points,
                  "Number of test points for pointwise identities")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", config.out, "Report output path (default stdout)");
  cmd->add_option("--format", config.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--deterministic", config.deterministic,
                "Strip timestamps for byte-identical reruns");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"fuzzyqm: classical extensions and frame representations of "
               "finite-dimensional quantum mechanics"};
  app.require_subcommand(1);

  RunConfig config;

  ReconstructOptions reconstruct_options;
  CLI::App *reconstruct_cmd = app.add_subcommand(
      "reconstruct", "Frame tomography roundtrip on random states");
  add_common_options(reconstruct_cmd, config);
  reconstruct_cmd->add_flag("--sic", reconstruct_options.sic,
                            "Use the qubit SIC frame (dim 2 only)");
  reconstruct_cmd->add_option("--tol", reconstruct_options.tolerance,
                              "Max roundtrip Frobenius error");

  NegativityOptions negativity_options;
  CLI::App *negativity_cmd = app.add_subcommand(
      "negativity", "Scan pure states for negative frame coefficients");
  add_common_options(negativity_cmd, config);
  negativity_cmd
      ->add_option("--frame", negativity_options.frame, "Frame choice")
      ->check(CLI::IsMember({"auto", "sic", "random"}));
  negativity_cmd->add_option(
      "--state", negativity_options.witness,
      "Extra analytic witness, e.g. antipodal:0 (qubit SIC)");
  negativity_cmd->add_option("--tol", negativity_options.tolerance,
                             "Tolerance for the analytic witness value");

  UpdateVerifyOptions update_options;
  CLI::App *update_cmd = app.add_subcommand(
      "update-verify",
      "Verify the collapse decomposition and Bayes-update identities");
  add_common_options(update_cmd, config);
  update_cmd->add_option("--outcomes", update_options.outcomes,
                         "POVM outcome count")
      ->check(CLI::Range(1, 16));
  update_cmd->add_option("--kraus", update_options.kraus,
                         "Operation choice for a given POVM")
      ->check(CLI::IsMember({"luders", "unitary-twirl"}));
  update_cmd->add_option("--tol-resolution", update_options.tol_resolution,
                         "Bound for the Bayes-component resolution");
  update_cmd->add_option("--tol-transport", update_options.tol_transport,
                         "Bound for the readjustment transport");
  update_cmd->add_option("--tol-extension", update_options.tol_extension,
                         "Bound for the extension update residual");
  update_cmd->add_option("--tol-representation",
                         update_options.tol_representation,
                         "Bound for the representation update residual");

  BellOptions bell_options;
  CLI::App *bell_cmd = app.add_subcommand(
      "bell", "CHSH value along the quantum and classical-extension paths");
  add_common_options(bell_cmd, config);
  bell_cmd
      ->add_option("--angles", bell_options.angles,
                   "Observable angles a0,a1,b0,b1 in degrees")
      ->delimiter(',');
  bell_cmd->add_option("--state", bell_options.state, "Scenario state")
      ->check(CLI::IsMember({"singlet", "product"}));
  bell_cmd->add_option("--scenario", bell_options.scenario_file,
                       "Scenario JSON file {\"angles\": [...], \"state\": "
                       "{...}}; overrides --angles/--state");
  bell_cmd->add_option("--tol", bell_options.path_tolerance,
                       "Max allowed gap between the two paths");

  SmearingOptions smearing_options;
  CLI::App *smearing_cmd = app.add_subcommand(
      "smearing",
      "Smearing relation on atoms plus uniform-POVM Monte Carlo");
  add_common_options(smearing_cmd, config);
  smearing_cmd->add_option("--tol", smearing_options.atomic_tolerance,
                           "Bound for the exact atomic identity");
  smearing_cmd->add_option("--mc-tol", smearing_options.mc_tolerance,
                           "Bound for the Monte Carlo identity deviation "
                           "(default scales with dim and samples)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    CommandResult result;
    if (*reconstruct_cmd) {
      if (reconstruct_options.sic && config.dim != 2)
        throw fuzzyqm::ValidationError(
            "reconstruct: --sic requires --dim 2");
      result = cmd_reconstruct(config, reconstruct_options);
    } else if (*negativity_cmd) {
      if (negativity_options.frame == "sic" && config.dim != 2)
        throw fuzzyqm::ValidationError(
            "negativity: --frame sic requires --dim 2");
      result = cmd_negativity(config, negativity_options);
    } else if (*update_cmd) {
      result = cmd_update_verify(config, update_options);
    } else if (*bell_cmd) {
      result = cmd_bell(config, bell_options);
    } else if (*smearing_cmd) {
      result = cmd_smearing(config, smearing_options);
    }
    return emit(config, result);
  } catch (const fuzzyqm::ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const fuzzyqm::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
