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

#ifndef FUZZYQM_COMMANDS_HPP
#define FUZZYQM_COMMANDS_HPP

#include <cstdint>
#include <string>

#include "fuzzyqm/io.hpp"

namespace fuzzyqm::cli {

// Exit codes: 0 pass, 1 usage/config error, 2 tolerance breach.
inline constexpr int kExitPass = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitBreach = 2;

struct RunConfig {
  int dim = 2;
  std::uint64_t seed = 0;
  int trials = 100;
  int samples = 100000;
  int points = 100;
  bool deterministic = false;
  std::string out;            // empty: stdout
  std::string format = "json"; // json | csv
};

struct CommandResult {
  json report;
  std::string csv; // populated when format == "csv"
  int exit_code = kExitPass;
};

struct ReconstructOptions {
  bool sic = false;
  double tolerance = 1e-10;
};

struct NegativityOptions {
  std::string frame = "auto"; // auto | sic | random
  std::string witness;        // "", or "antipodal:<index>"
  double tolerance = 1e-10;
};

struct UpdateVerifyOptions {
  int outcomes = 3;
  std::string kraus = "luders"; // luders | unitary-twirl
  double tol_resolution = 1e-12;
  double tol_transport = 1e-10;
  double tol_extension = 1e-10;
  double tol_representation = 1e-10;
};

struct BellOptions {
  std::array<double, 4> angles = {0.0, 270.0, 135.0, 225.0};
  std::string state = "singlet"; // singlet | product
  std::string scenario_file;     // JSON {"angles": [...], "state": {...}}
  double path_tolerance = 1e-12;
};

struct SmearingOptions {
  double atomic_tolerance = 1e-12;
  double mc_tolerance = 0.0; // 0: derived from dim and sample count
};

CommandResult cmd_reconstruct(const RunConfig &config,
                              const ReconstructOptions &options);
CommandResult cmd_negativity(const RunConfig &config,
                             const NegativityOptions &options);
CommandResult cmd_update_verify(const RunConfig &config,
                                const UpdateVerifyOptions &options);
CommandResult cmd_bell(const RunConfig &config, const BellOptions &options);
CommandResult cmd_smearing(const RunConfig &config,
                           const SmearingOptions &options);

/// Writes the result to config.out (atomically) or stdout; returns the exit
/// code to propagate.
int emit(const RunConfig &config, const CommandResult &result);

} // namespace fuzzyqm::cli

#endif // FUZZYQM_COMMANDS_HPP
