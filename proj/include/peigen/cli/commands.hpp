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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "peigen/cli/config.hpp"

namespace peigen::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitPostSelection = 2,
  kExitNotConverged = 3,
  kExitVerifyFailed = 4,
};

struct CommonOptions {
  std::string config;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<OutputFormat> format;
};

struct VerifyOptions {
  std::vector<std::string> only;
  std::optional<std::string> out;
  bool force_wrong_circuit = false;
};

struct SweepOptions {
  CommonOptions common;
  std::string parameter;  // dotted config path, e.g. run.tau
  std::vector<double> values;
  int seeds = 0;
  long max_shots = 1000000;
};

/// Pool size: PEIGEN_THREADS if set (>= 1), else hardware concurrency.
int worker_count();

int cmd_run(const CommonOptions& opts, std::ostream& out, std::ostream& err);
int cmd_spectrum(const CommonOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace peigen::cli
