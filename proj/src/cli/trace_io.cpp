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

#include "peigen/cli/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "peigen/detail/overloaded.hpp"

namespace peigen::cli {

using nlohmann::json;

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

json trace_to_json(const CoolingTrace& trace, const ExperimentConfig& config,
                   const std::optional<TrajectoryResult>& trajectory) {
  json stages = json::array();
  for (const auto& s : trace.stages) {
    json st{{"k", s.k},
            {"kind", s.kind == StageKind::Eject ? "eject" : "cool"},
            {"tau", s.tau},
            {"energy", s.energy},
            {"p0", s.p0},
            {"p_success", s.p_success}};
    if (s.kind == StageKind::Eject) {
      st["ejected_energy"] = s.ejected_energy;
      st["ejected_energy_source"] = "exact_spectrum";
    }
    json trials = json::array();
    for (const auto& t : s.trials) {
      trials.push_back({{"trial", t.trial_index},
                        {"tau", t.tau},
                        // infeasible trials carry no energy
                        {"energy", t.p0 > 0.0 ? json(t.energy) : json(nullptr)},
                        {"p0", t.p0}});
    }
    st["trials"] = std::move(trials);
    stages.push_back(std::move(st));
  }

  const RunConfig& rc = config.run;
  json run{{"epsilon", rc.epsilon},
           {"max_stages", rc.max_stages},
           {"gamma_policy", describe(rc.gamma_policy)},
           {"fidelity_tol", rc.fidelity_tol},
           {"eject_energies", rc.eject_energies == EjectEnergies::Raw ? "raw" : "shifted"}};
  std::visit(detail::overloaded{[&](const FixedStep& f) {
                                  run["mode"] = "fixed";
                                  run["tau"] = f.tau;
                                },
                                [&](const VariationalMode& v) {
                                  run["mode"] = "variational";
                                  run["optimizer"] = {{"tau_lo", v.optimizer.tau_lo},
                                                      {"tau_hi", v.optimizer.tau_hi},
                                                      {"x_tol", v.optimizer.x_tol},
                                                      {"max_evals", v.optimizer.max_evals},
                                                      {"coarse_grid", v.optimizer.coarse_grid}};
                                }},
             rc.mode);
  std::visit(detail::overloaded{[&](const ExactW&) { run["operator"] = {{"kind", "exact"}}; },
                                [&](const TrotterW& t) {
                                  run["operator"] = {{"kind", "trotter"}, {"steps", t.steps}};
                                }},
             rc.operator_mode);
  if (rc.seed) run["seed"] = *rc.seed;

  int trial_total = 0;
  for (const auto& s : trace.stages) trial_total += static_cast<int>(s.trials.size());

  json out{{"schema", kSchemaVersion},
           {"model", model_to_json(config.model)},
           {"run", run},
           {"gamma", trace.gamma},
           {"initial_energy", trace.initial_energy},
           {"converged", trace.converged},
           {"stages", std::move(stages)},
           {"schedule", trace.schedule()},
           {"final_energy", trace.final_energy()},
           {"final_success_probability", trace.final_success_probability()},
           {"total_trials", trial_total},
           {"warnings", trace.warnings},
           {"units", {{"energy", config.output.unit}, {"unit_divisor", config.output.unit_divisor}}}};
  out["sector"] = trace.sector_info ? json(*trace.sector_info) : json(nullptr);
  if (trace.target) {
    out["target"] = {{"level", trace.target->level},
                     {"energy", trace.target->energy},
                     {"fidelity", trace.target->fidelity},
                     {"reached", trace.target->reached}};
  }
  if (trajectory) {
    out["trajectory"] = {{"success", trajectory->success},
                         {"restarts", trajectory->restarts},
                         {"shots_used", trajectory->shots_used},
                         {"measurements", trajectory->measurements}};
  }
  return out;
}

std::string trace_to_csv(const CoolingTrace& trace) {
  std::ostringstream os;
  os << "stage,tau,energy,p0,p_success,trial_count\n";
  for (const auto& s : trace.stages) {
    os << s.k << ',' << format_number(s.tau) << ',' << format_number(s.energy) << ','
       << format_number(s.p0) << ',' << format_number(s.p_success) << ',' << s.trials.size()
       << '\n';
  }
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

namespace {

// Numbers as written by format_number; booleans as 0/1; anything else is NaN.
double cell_value(const std::string& c) {
  if (c == "true") return 1.0;
  if (c == "false") return 0.0;
  char* end = nullptr;
  const double v = std::strtod(c.c_str(), &end);
  return (c.empty() || *end != '\0') ? std::nan("") : v;
}

}  // namespace

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.emplace_back();
    if (first) {
      t.header = std::move(cells);
      first = false;
      continue;
    }
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(cell_value(c));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace peigen::cli
