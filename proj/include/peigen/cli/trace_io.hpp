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

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "peigen/cli/config.hpp"
#include "peigen/eigensolver.hpp"

namespace peigen::cli {

/// printf("%.9g"), the CSV number format.
std::string format_number(double v);

nlohmann::json trace_to_json(const CoolingTrace& trace, const ExperimentConfig& config,
                             const std::optional<TrajectoryResult>& trajectory = std::nullopt);

/// Header stage,tau,energy,p0,p_success,trial_count and one row per stage.
std::string trace_to_csv(const CoolingTrace& trace);

/// Creates parent directories as needed.
void write_file(const std::string& path, const std::string& content);

/// Minimal reader for our own CSV output: header names plus numeric rows.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
/// Numeric view of a CSV file. Booleans read as 0/1, other text as NaN.
CsvTable parse_csv(const std::string& text);

}  // namespace peigen::cli
