// Copyright 2026 The peigen Authors
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

// peigen: probabilistic eigenstate preparation driver.

#include <iostream>

#include "CLI11.hpp"
#include "peigen/cli/commands.hpp"

namespace {

using namespace peigen::cli;

void add_common(CLI::App* app, CommonOptions& opts, std::string& format) {
  app->add_option("--config", opts.config, "experiment config (JSON)")->required();
  app->add_option("--out", opts.out, "output directory (overrides output.dir)");
  app->add_option("--seed", opts.seed, "RNG seed (overrides run.seed)");
  app->add_option("--format", format, "json|csv|both")
      ->check(CLI::IsMember({"json", "csv", "both"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"peigen: ancilla-assisted probabilistic eigenstate preparation"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  std::string run_format;
  auto* run = app.add_subcommand("run", "run one experiment and write its trace");
  add_common(run, run_opts, run_format);

  CommonOptions spec_opts;
  std::string spec_format;
  auto* spectrum = app.add_subcommand("spectrum", "list the exact spectrum of the model");
  add_common(spectrum, spec_opts, spec_format);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--only", verify_opts.only, "run only the named check(s)");
  verify->add_option("--out", verify_opts.out, "write verify_report.json here");
  verify->add_flag("--debug-wrong-circuit", verify_opts.force_wrong_circuit,
                   "replace the circuits by broken ones (negative control)");

  SweepOptions sweep_opts;
  std::string sweep_format;
  auto* sweep = app.add_subcommand("sweep", "scan one numeric config field");
  add_common(sweep, sweep_opts.common, sweep_format);
  sweep->add_option("--param", sweep_opts.parameter, "dotted config path, e.g. run.tau")
      ->required();
  sweep->add_option("--values", sweep_opts.values, "comma-separated values")
      ->delimiter(',')
      ->required();
  sweep->add_option("--seeds", sweep_opts.seeds, "trajectories per value (0: none)");
  sweep->add_option("--max-shots", sweep_opts.max_shots, "shot budget per trajectory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const auto apply_format = [](CommonOptions& o, const std::string& f) {
    if (!f.empty()) o.format = peigen::cli::parse_format(f);
  };
  if (run->parsed()) {
    apply_format(run_opts, run_format);
    return cmd_run(run_opts, std::cout, std::cerr);
  }
  if (spectrum->parsed()) {
    apply_format(spec_opts, spec_format);
    return cmd_spectrum(spec_opts, std::cout, std::cerr);
  }
  if (verify->parsed()) return cmd_verify(verify_opts, std::cout, std::cerr);
  apply_format(sweep_opts.common, sweep_format);
  return cmd_sweep(sweep_opts, std::cout, std::cerr);
}
