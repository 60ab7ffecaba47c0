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

#include <string>
#include <variant>

#include "json.hpp"
#include "peigen/eigensolver.hpp"
#include "peigen/models.hpp"

namespace peigen::cli {

inline constexpr int kSchemaVersion = 1;

/// Config problem. what() is "<source>:<line>: <field>: <message>" when the
/// offending key can be located in the text.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::string field) : Error(what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ThermalInit {
  double nbar = 0.0;
};
struct BasisInit {
  std::string label;
};
struct GroundOfInit {
  ModelSpec model;
};
struct AmplitudesInit {
  ComplexVector amplitudes;
};
using InitialStateSpec = std::variant<ThermalInit, BasisInit, GroundOfInit, AmplitudesInit>;

enum class OutputFormat { Json, Csv, Both };

struct OutputSpec {
  std::string dir = "out";
  OutputFormat format = OutputFormat::Both;
  double unit_divisor = 1.0;  // plots divide energies by this
  std::string unit = "1";
};

struct ExperimentConfig {
  ModelSpec model;
  RunConfig run;
  InitialStateSpec initial;
  int target_level = 0;
  OutputSpec output;
  nlohmann::json source;  // the parsed document, echoed into traces
};

ExperimentConfig parse_config(const std::string& text, const std::string& source_name = "<config>");
ExperimentConfig load_config(const std::string& path);

/// Parses an already-loaded document (used by sweeps after editing a field).
ExperimentConfig parse_config_json(const nlohmann::json& doc, const std::string& text,
                                   const std::string& source_name);

ModelSpec parse_model(const nlohmann::json& j, const std::string& path);
nlohmann::json model_to_json(const ModelSpec& spec);

OutputFormat parse_format(const std::string& s);

/// Initial state for `h`; checks dimension compatibility.
QuantumState build_initial_state(const ExperimentConfig& config, const SumHamiltonian& h);

}  // namespace peigen::cli
