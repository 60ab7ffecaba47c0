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

#include "peigen/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "peigen/cli/trace_io.hpp"
#include "peigen/cli/verify_suite.hpp"
#include "peigen/eigensolver.hpp"

namespace peigen::cli {
namespace {

using nlohmann::json;

ExperimentConfig load_with_overrides(const CommonOptions& opts) {
  ExperimentConfig cfg = load_config(opts.config);
  if (opts.seed) cfg.run.seed = *opts.seed;
  if (opts.format) cfg.output.format = *opts.format;
  if (opts.out) cfg.output.dir = *opts.out;
  return cfg;
}

bool wants_json(OutputFormat f) { return f != OutputFormat::Csv; }
bool wants_csv(OutputFormat f) { return f != OutputFormat::Json; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open config file", "<file>");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunOutcome {
  CoolingTrace trace;
  std::optional<TrajectoryResult> trajectory;
};

RunOutcome execute(const ExperimentConfig& cfg, long max_shots = 1000000) {
  const SumHamiltonian h = build_model(cfg.model);
  const QuantumState init = build_initial_state(cfg, h);
  RunOutcome r{prepare_eigenstate(cfg.target_level, init, h, cfg.run), std::nullopt};
  if (r.trace.final_state) r.trace.sector_info = sector_info(cfg.model, *r.trace.final_state);
  if (cfg.run.seed) {
    std::vector<double> p0s;
    for (const auto& s : r.trace.stages) p0s.push_back(s.p0);
    r.trajectory = sample_restarts(p0s, *cfg.run.seed, max_shots);
  }
  return r;
}

}  // namespace

int worker_count() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PEIGEN_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1) return static_cast<int>(n);
    return 1;
  }
  return static_cast<int>(hw);
}

int cmd_run(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const ExperimentConfig cfg = load_with_overrides(opts);
    const RunOutcome r = execute(cfg);
    const std::string dir = cfg.output.dir;
    if (wants_json(cfg.output.format)) {
      write_file(dir + "/trace.json", trace_to_json(r.trace, cfg, r.trajectory).dump(2) + "\n");
    }
    if (wants_csv(cfg.output.format)) write_file(dir + "/trace.csv", trace_to_csv(r.trace));

    for (const auto& w : r.trace.warnings) err << "warning: " << w << '\n';
    out << "stages=" << r.trace.stages.size() << " energy=" << format_number(r.trace.final_energy())
        << " p_success=" << format_number(r.trace.final_success_probability())
        << " converged=" << (r.trace.converged ? "true" : "false");
    if (r.trace.target && cfg.target_level > 0) {
      out << " target_fidelity=" << format_number(r.trace.target->fidelity);
    }
    if (r.trajectory) out << " restarts=" << r.trajectory->restarts;
    out << '\n';
    if (!r.trace.converged) {
      err << "not converged after " << cfg.run.max_stages << " stages\n";
      return kExitNotConverged;
    }
    return kExitOk;
  } catch (const PostSelectionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPostSelection;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_spectrum(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const ExperimentConfig cfg = load_with_overrides(opts);
    const SumHamiltonian h = build_model(cfg.model);
    const Spectrum s = exact_spectrum(h);

    json gammas = json::object();
    gammas["exact"] = gamma_for(h, GammaExact{}).value;
    gammas["norm_bound"] = gamma_for(h, GammaNormBound{}).value;
    gammas["configured"] = {{"policy", describe(cfg.run.gamma_policy)},
                            {"value", gamma_for(h, cfg.run.gamma_policy).value}};
    std::vector<double> values(s.values.data(), s.values.data() + s.values.size());
    // First gap above the (possibly degenerate) ground level.
    std::optional<double> gap;
    for (double v : values) {
      if (v - values.front() > 1e-9 * std::max(1.0, std::abs(values.front()))) {
        gap = v - values.front();
        break;
      }
    }

    out << "dim " << s.values.size() << '\n';
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << "E[" << i << "] = " << format_number(values[i]) << '\n';
    }
    out << "gap = " << (gap ? format_number(*gap) : std::string("none")) << '\n';
    out << "gamma exact = " << format_number(gammas["exact"].get<double>()) << '\n';
    out << "gamma norm_bound = " << format_number(gammas["norm_bound"].get<double>()) << '\n';
    out << "gamma " << describe(cfg.run.gamma_policy) << " = "
        << format_number(gammas["configured"]["value"].get<double>()) << '\n';

    if (wants_json(cfg.output.format)) {
      json doc{{"schema", kSchemaVersion},
               {"model", model_to_json(cfg.model)},
               {"eigenvalues", values},
               {"gap", gap ? json(*gap) : json(nullptr)},
               {"gamma", gammas}};
      write_file(cfg.output.dir + "/spectrum.json", doc.dump(2) + "\n");
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  const auto& all = verify_check_names();
  std::vector<std::string> selected;
  if (opts.only.empty()) {
    selected = all;
  } else {
    for (const auto& name : opts.only) {
      if (std::find(all.begin(), all.end(), name) == all.end()) {
        err << "error: unknown check '" << name << "'; available:";
        for (const auto& n : all) err << ' ' << n;
        err << '\n';
        return kExitUsage;
      }
      selected.push_back(name);
    }
  }

  json report{{"schema", kSchemaVersion}, {"checks", json::array()}};
  bool all_passed = true;
  for (const auto& name : selected) {
    CheckReport rep;
    try {
      rep = run_check(name, opts.force_wrong_circuit);
    } catch (const std::exception& e) {
      rep = CheckReport{name, false, std::string("error: ") + e.what(), json::object()};
    }
    all_passed = all_passed && rep.passed;
    out << (rep.passed ? "PASS " : "FAIL ") << rep.name << ": " << rep.summary << '\n';
    report["checks"].push_back(
        {{"name", rep.name}, {"passed", rep.passed}, {"summary", rep.summary}, {"details", rep.details}});
  }
  report["passed"] = all_passed;
  if (opts.out) {
    try {
      write_file(*opts.out + "/verify_report.json", report.dump(2) + "\n");
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  if (!all_passed) {
    for (const auto& c : report["checks"]) {
      if (!c["passed"].get<bool>()) err << "verification failed: " << c["name"].get<std::string>() << '\n';
    }
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    if (opts.values.empty()) {
      err << "error: sweep needs at least one value\n";
      return kExitUsage;
    }
    if (opts.seeds < 0) {
      err << "error: --seeds must be >= 0\n";
      return kExitUsage;
    }
    const std::string text = read_text(opts.common.config);
    const ExperimentConfig base = load_with_overrides(opts.common);

    // Resolve the parameter to its parent object and key.
    std::vector<std::string> parts;
    {
      std::stringstream ss(opts.parameter);
      std::string p;
      while (std::getline(ss, p, '.')) parts.push_back(p);
    }
    if (parts.empty() || std::any_of(parts.begin(), parts.end(), [](auto& p) { return p.empty(); })) {
      err << "error: unknown parameter '" << opts.parameter << "'\n";
      return kExitUsage;
    }
    const json* parent = &base.source;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      if (!parent->is_object() || !parent->contains(parts[i])) {
        err << "error: unknown parameter '" << opts.parameter << "'\n";
        return kExitUsage;
      }
      parent = &(*parent)[parts[i]];
    }
    if (!parent->is_object() || !parent->contains(parts.back()) ||
        !(*parent)[parts.back()].is_number()) {
      err << "error: unknown parameter '" << opts.parameter
          << "' (must name a numeric field present in the config)\n";
      return kExitUsage;
    }
    const bool integral = (*parent)[parts.back()].is_number_integer();

    std::vector<ExperimentConfig> configs;
    for (double v : opts.values) {
      json doc = base.source;
      json* node = &doc;
      for (std::size_t i = 0; i + 1 < parts.size(); ++i) node = &(*node)[parts[i]];
      if (integral) {
        if (v != std::floor(v)) {
          err << "error: parameter '" << opts.parameter << "' takes integer values\n";
          return kExitUsage;
        }
        (*node)[parts.back()] = static_cast<long long>(v);
      } else {
        (*node)[parts.back()] = v;
      }
      ExperimentConfig cfg = parse_config_json(doc, text, opts.common.config);
      cfg.run.seed.reset();
      configs.push_back(std::move(cfg));
    }
    const std::uint64_t seed0 = opts.common.seed ? *opts.common.seed : base.run.seed.value_or(0);

    struct Item {
      CoolingTrace trace;
      std::vector<TrajectoryResult> trajectories;
      std::string error;
      bool post_selection = false;
    };
    std::vector<Item> items(configs.size());
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
      for (std::size_t i = next++; i < configs.size(); i = next++) {
        try {
          items[i].trace = execute(configs[i]).trace;
          std::vector<double> p0s;
          for (const auto& s : items[i].trace.stages) p0s.push_back(s.p0);
          for (int k = 0; k < opts.seeds; ++k) {
            items[i].trajectories.push_back(sample_restarts(p0s, seed0 + k, opts.max_shots));
          }
        } catch (const PostSelectionError& e) {
          items[i].error = e.what();
          items[i].post_selection = true;
        } catch (const std::exception& e) {
          items[i].error = e.what();
        }
      }
    };
    {
      const int n = std::min<int>(worker_count(), static_cast<int>(configs.size()));
      std::vector<std::jthread> pool;
      for (int t = 0; t < n; ++t) pool.emplace_back(work);
    }

    std::ostringstream csv;
    csv << "parameter,value,seed,converged,stages,final_energy,p_success,restarts,shots_used\n";
    for (std::size_t i = 0; i < items.size(); ++i) {
      const Item& it = items[i];
      if (!it.error.empty()) {
        err << "error: " << opts.parameter << "=" << format_number(opts.values[i]) << ": "
            << it.error << '\n';
        return it.post_selection ? kExitPostSelection : kExitUsage;
      }
      const auto prefix = [&] {
        std::ostringstream os;
        os << opts.parameter << ',' << format_number(opts.values[i]) << ',';
        return os.str();
      };
      const auto stats = [&] {
        std::ostringstream os;
        os << (it.trace.converged ? 1 : 0) << ',' << it.trace.stages.size() << ','
           << format_number(it.trace.final_energy()) << ','
           << format_number(it.trace.final_success_probability());
        return os.str();
      };
      if (opts.seeds == 0) {
        csv << prefix() << ',' << stats() << ",,\n";
      } else {
        for (int k = 0; k < opts.seeds; ++k) {
          const TrajectoryResult& tr = it.trajectories[static_cast<std::size_t>(k)];
          csv << prefix() << seed0 + k << ',' << stats() << ','
              << (tr.success ? std::to_string(tr.restarts) : std::string()) << ','
              << tr.shots_used << '\n';
        }
      }
    }
    const std::string path = base.output.dir + "/sweep.csv";
    write_file(path, csv.str());
    out << "wrote " << path << " (" << opts.values.size() * std::max(1, opts.seeds) << " rows)\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace peigen::cli
