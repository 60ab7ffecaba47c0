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

#include "peigen/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "peigen/detail/overloaded.hpp"

namespace peigen::cli {
namespace {

using nlohmann::json;

struct Source {
  const std::string& text;
  const std::string& name;
};

// Line of the key named by a dotted path, found by scanning for each quoted
// component in turn. 0 when it cannot be located.
int locate(const std::string& text, const std::string& path) {
  std::size_t pos = 0;
  bool found_any = false;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (auto b = part.find('['); b != std::string::npos) part.resize(b);
    if (part.empty()) continue;
    const auto at = text.find('"' + part + '"', pos);
    if (at == std::string::npos) break;
    pos = at;
    found_any = true;
  }
  if (!found_any) return 0;
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + pos, '\n'));
}

[[noreturn]] void fail(const Source& src, const std::string& path, const std::string& msg) {
  std::ostringstream os;
  os << src.name;
  if (const int line = locate(src.text, path); line > 0) os << ':' << line;
  os << ": " << path << ": " << msg;
  throw ConfigError(os.str(), path);
}

std::string join(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

// Typed access to one JSON object; every key must be consumed.
class Reader {
 public:
  Reader(const json& j, std::string path, const Source& src)
      : j_(j), path_(std::move(path)), src_(src) {
    if (!j_.is_object()) fail(src_, path_.empty() ? "<root>" : path_, "expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    if (!j_.contains(key)) fail(src_, join(path_, key), "required field is missing");
    return j_.at(key);
  }

  double number(const std::string& key, std::optional<double> def = std::nullopt) {
    if (!has(key) && def) {
      seen_.insert(key);
      return *def;
    }
    const json& v = raw(key);
    if (!v.is_number()) fail(src_, join(path_, key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(src_, join(path_, key), "must be finite");
    return d;
  }

  long long integer(const std::string& key, std::optional<long long> def = std::nullopt) {
    if (!has(key) && def) {
      seen_.insert(key);
      return *def;
    }
    const json& v = raw(key);
    if (!v.is_number_integer()) fail(src_, join(path_, key), "expected an integer");
    return v.get<long long>();
  }

  std::string string(const std::string& key, std::optional<std::string> def = std::nullopt) {
    if (!has(key) && def) {
      seen_.insert(key);
      return *def;
    }
    const json& v = raw(key);
    if (!v.is_string()) fail(src_, join(path_, key), "expected a string");
    return v.get<std::string>();
  }

  std::string child(const std::string& key) const { return join(path_, key); }
  const Source& source() const { return src_; }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.count(key)) fail(src_, join(path_, key), "unknown key");
    }
  }

 private:
  const json& j_;
  std::string path_;
  const Source& src_;
  std::set<std::string> seen_;
};

int to_int(const Reader& r, const std::string& key, long long v) {
  if (v < -1000000000LL || v > 1000000000LL) fail(r.source(), r.child(key), "out of range");
  return static_cast<int>(v);
}

ComplexMatrix read_matrix(const json& j, const std::string& path, const Source& src) {
  if (!j.is_array() || j.empty()) fail(src, path, "expected a non-empty array of rows");
  const auto n = static_cast<Index>(j.size());
  ComplexMatrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      fail(src, path, "expected a square matrix");
    }
    for (Index c = 0; c < n; ++c) {
      const json& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) fail(src, path, "matrix entries must be numbers");
      m(r, c) = v.get<double>();
    }
  }
  return m;
}

ComplexVector read_vector(const json& j, const std::string& path, const Source& src) {
  if (!j.is_array() || j.empty()) fail(src, path, "expected a non-empty array");
  ComplexVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) fail(src, path, "entries must be numbers");
    v(static_cast<Index>(i)) = j[i].get<double>();
  }
  return v;
}

ModelSpec read_model(const json& j, const std::string& path, const Source& src) {
  Reader r(j, path, src);
  const std::string type = r.string("type");
  ModelSpec spec;
  if (type == "harmonic") {
    HarmonicOscillator h;
    h.omega = r.number("omega", h.omega);
    h.cutoff = to_int(r, "cutoff", r.integer("cutoff", h.cutoff));
    spec = h;
  } else if (type == "rabi") {
    Rabi m;
    m.omega0 = r.number("omega0", m.omega0);
    m.omega = r.number("omega", m.omega);
    m.g = r.number("g", m.g);
    m.cutoff = to_int(r, "cutoff", r.integer("cutoff", m.cutoff));
    spec = m;
  } else if (type == "hubbard") {
    Hubbard1D m;
    m.sites = to_int(r, "sites", r.integer("sites", m.sites));
    m.t = r.number("t", m.t);
    m.u = r.number("u", m.u);
    spec = m;
  } else if (type == "custom") {
    const json& terms = r.raw("terms");
    const std::string tpath = r.child("terms");
    if (!terms.is_array() || terms.empty()) fail(src, tpath, "expected a non-empty array");
    CustomModel m;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string ipath = tpath + "[" + std::to_string(i) + "]";
      Reader tr(terms[i], ipath, src);
      const std::string label = tr.string("label", "H" + std::to_string(i + 1));
      ComplexMatrix mat = read_matrix(tr.raw("real"), tr.child("real"), src);
      if (tr.has("imag")) {
        const ComplexMatrix im = read_matrix(tr.raw("imag"), tr.child("imag"), src);
        if (im.rows() != mat.rows()) fail(src, tr.child("imag"), "shape differs from real part");
        mat += Complex(0.0, 1.0) * im.real().cast<Complex>();
      }
      tr.finish();
      try {
        m.terms.push_back(Term{label, HermitianOperator(std::move(mat))});
      } catch (const Error& e) {
        fail(src, ipath, e.what());
      }
    }
    spec = std::move(m);
  } else {
    fail(src, r.child("type"), "unknown model type '" + type + "' (harmonic|rabi|hubbard|custom)");
  }
  r.finish();
  try {
    validate_model(spec);
  } catch (const Error& e) {
    fail(src, path, e.what());
  }
  return spec;
}

GammaPolicy read_gamma(const json& j, const std::string& path, const Source& src) {
  Reader r(j, path, src);
  const std::string policy = r.string("policy");
  GammaPolicy out;
  if (policy == "exact") {
    out = GammaExact{};
  } else if (policy == "norm_bound") {
    out = GammaNormBound{};
  } else if (policy == "fixed") {
    out = GammaFixed{r.number("value")};
  } else if (policy == "target_level") {
    const int level = to_int(r, "level", r.integer("level"));
    if (level < 0) fail(src, r.child("level"), "must be >= 0");
    out = GammaTargetLevel{level};
  } else {
    fail(src, r.child("policy"),
         "unknown gamma policy '" + policy + "' (exact|norm_bound|fixed|target_level)");
  }
  r.finish();
  return out;
}

RunConfig read_run(const json& j, const std::string& path, const Source& src) {
  Reader r(j, path, src);
  RunConfig rc;
  const std::string mode = r.string("mode");
  if (mode == "fixed") {
    const double tau = r.number("tau");
    if (!(tau > 0.0)) fail(src, r.child("tau"), "must be > 0");
    rc.mode = FixedStep{tau};
  } else if (mode == "variational") {
    OptimizerConfig opt;
    if (r.has("optimizer")) {
      Reader o(r.raw("optimizer"), r.child("optimizer"), src);
      opt.tau_lo = o.number("tau_lo", opt.tau_lo);
      opt.tau_hi = o.number("tau_hi", opt.tau_hi);
      opt.x_tol = o.number("x_tol", opt.x_tol);
      opt.max_evals = to_int(o, "max_evals", o.integer("max_evals", opt.max_evals));
      opt.coarse_grid = to_int(o, "coarse_grid", o.integer("coarse_grid", opt.coarse_grid));
      o.finish();
      try {
        opt.validate();
      } catch (const Error& e) {
        fail(src, r.child("optimizer"), e.what());
      }
    }
    rc.mode = VariationalMode{opt};
  } else {
    fail(src, r.child("mode"), "unknown run mode '" + mode + "' (fixed|variational)");
  }

  if (r.has("gamma")) rc.gamma_policy = read_gamma(r.raw("gamma"), r.child("gamma"), src);

  rc.epsilon = r.number("epsilon", rc.epsilon);
  if (!(rc.epsilon > 0.0)) fail(src, r.child("epsilon"), "must be > 0");

  rc.max_stages = to_int(r, "max_stages", r.integer("max_stages", rc.max_stages));
  if (rc.max_stages < 1) fail(src, r.child("max_stages"), "must be >= 1");

  rc.fidelity_tol = r.number("fidelity_tol", rc.fidelity_tol);
  if (!(rc.fidelity_tol > 0.0 && rc.fidelity_tol < 1.0)) {
    fail(src, r.child("fidelity_tol"), "must lie in (0, 1)");
  }

  if (r.has("operator")) {
    Reader o(r.raw("operator"), r.child("operator"), src);
    const std::string kind = o.string("kind");
    if (kind == "exact") {
      rc.operator_mode = ExactW{};
    } else if (kind == "trotter") {
      const int steps = to_int(o, "steps", o.integer("steps", 3));
      if (steps < 1) fail(src, o.child("steps"), "must be >= 1");
      rc.operator_mode = TrotterW{steps};
    } else {
      fail(src, o.child("kind"), "unknown operator kind '" + kind + "' (exact|trotter)");
    }
    o.finish();
  }

  if (r.has("seed")) {
    const json& s = r.raw("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      fail(src, r.child("seed"), "expected a non-negative integer");
    }
    rc.seed = s.get<std::uint64_t>();
  }

  const std::string ej = r.string("eject_energies", "raw");
  if (ej == "raw") {
    rc.eject_energies = EjectEnergies::Raw;
  } else if (ej == "shifted") {
    rc.eject_energies = EjectEnergies::Shifted;
  } else {
    fail(src, r.child("eject_energies"), "expected 'raw' or 'shifted'");
  }
  r.finish();
  return rc;
}

InitialStateSpec read_initial(const json& j, const std::string& path, const Source& src) {
  Reader r(j, path, src);
  const std::string type = r.string("type");
  InitialStateSpec out;
  if (type == "thermal") {
    const double nbar = r.number("nbar");
    if (nbar < 0.0) fail(src, r.child("nbar"), "must be >= 0");
    out = ThermalInit{nbar};
  } else if (type == "basis") {
    out = BasisInit{r.string("label")};
  } else if (type == "ground_of") {
    out = GroundOfInit{read_model(r.raw("model"), r.child("model"), src)};
  } else if (type == "amplitudes") {
    ComplexVector v = read_vector(r.raw("real"), r.child("real"), src);
    if (r.has("imag")) {
      const ComplexVector im = read_vector(r.raw("imag"), r.child("imag"), src);
      if (im.size() != v.size()) fail(src, r.child("imag"), "length differs from real part");
      v += Complex(0.0, 1.0) * im.real().cast<Complex>();
    }
    out = AmplitudesInit{std::move(v)};
  } else {
    fail(src, r.child("type"),
         "unknown initial state type '" + type + "' (thermal|basis|ground_of|amplitudes)");
  }
  r.finish();
  return out;
}

OutputSpec read_output(const json& j, const std::string& path, const Source& src) {
  Reader r(j, path, src);
  OutputSpec o;
  o.dir = r.string("dir", o.dir);
  try {
    o.format = parse_format(r.string("format", "both"));
  } catch (const Error& e) {
    fail(src, r.child("format"), e.what());
  }
  o.unit_divisor = r.number("unit_divisor", o.unit_divisor);
  if (!(o.unit_divisor > 0.0)) fail(src, r.child("unit_divisor"), "must be > 0");
  o.unit = r.string("unit", o.unit);
  r.finish();
  return o;
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "both") return OutputFormat::Both;
  throw Error("unknown format '" + s + "' (json|csv|both)");
}

ModelSpec parse_model(const nlohmann::json& j, const std::string& path) {
  static const std::string kEmpty;
  static const std::string kName = "<model>";
  return read_model(j, path, Source{kEmpty, kName});
}

nlohmann::json model_to_json(const ModelSpec& spec) {
  return std::visit(
      detail::overloaded{
          [](const HarmonicOscillator& m) {
            return json{{"type", "harmonic"}, {"omega", m.omega}, {"cutoff", m.cutoff}};
          },
          [](const Rabi& m) {
            return json{{"type", "rabi"},   {"omega0", m.omega0}, {"omega", m.omega},
                        {"g", m.g},         {"cutoff", m.cutoff}};
          },
          [](const Hubbard1D& m) {
            return json{{"type", "hubbard"}, {"sites", m.sites}, {"t", m.t}, {"u", m.u}};
          },
          [](const CustomModel& m) {
            json terms = json::array();
            for (const auto& t : m.terms) {
              const ComplexMatrix& a = t.op.matrix();
              json re = json::array();
              json im = json::array();
              for (Index i = 0; i < a.rows(); ++i) {
                json rr = json::array();
                json ii = json::array();
                for (Index k = 0; k < a.cols(); ++k) {
                  rr.push_back(a(i, k).real());
                  ii.push_back(a(i, k).imag());
                }
                re.push_back(rr);
                im.push_back(ii);
              }
              terms.push_back({{"label", t.label}, {"real", re}, {"imag", im}});
            }
            return json{{"type", "custom"}, {"terms", terms}};
          }},
      spec);
}

ExperimentConfig parse_config_json(const nlohmann::json& doc, const std::string& text,
                                   const std::string& source_name) {
  const Source src{text, source_name};
  Reader r(doc, "", src);
  const json& schema = r.raw("schema");
  if (!schema.is_number_integer() || schema.get<long long>() != kSchemaVersion) {
    fail(src, "schema", "unsupported schema version (expected " +
                            std::to_string(kSchemaVersion) + ")");
  }

  ExperimentConfig cfg;
  cfg.model = read_model(r.raw("model"), "model", src);
  cfg.run = read_run(r.raw("run"), "run", src);
  cfg.initial = read_initial(r.raw("initial_state"), "initial_state", src);
  cfg.target_level = to_int(r, "target_level", r.integer("target_level", 0));
  if (cfg.target_level < 0) fail(src, "target_level", "must be >= 0");
  if (r.has("output")) cfg.output = read_output(r.raw("output"), "output", src);
  r.finish();

  if (std::holds_alternative<ThermalInit>(cfg.initial) &&
      !std::holds_alternative<HarmonicOscillator>(cfg.model)) {
    fail(src, "initial_state.type", "thermal initial states need a harmonic model");
  }
  if (cfg.target_level > 0 && cfg.run.eject_energies == EjectEnergies::Raw) {
    // Raw ejection of a zero-energy level is undefined; catch it before running.
    const SumHamiltonian h = build_model(cfg.model);
    const Spectrum s = exact_spectrum(h);
    if (cfg.target_level >= s.values.size()) fail(src, "target_level", "exceeds the model dimension");
    for (int j = 0; j < cfg.target_level; ++j) {
      if (s.values(j) == 0.0) {
        fail(src, "run.eject_energies",
             "level " + std::to_string(j) +
                 " has zero energy; raw ejection is undefined, use \"shifted\"");
      }
    }
  }
  try {
    cfg.run.validate();
  } catch (const Error& e) {
    fail(src, "run", e.what());
  }
  cfg.source = doc;
  return cfg;
}

ExperimentConfig parse_config(const std::string& text, const std::string& source_name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source_name + ": " + e.what(), "<syntax>");
  }
  return parse_config_json(doc, text, source_name);
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open config file", "<file>");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

QuantumState build_initial_state(const ExperimentConfig& config, const SumHamiltonian& h) {
  QuantumState state = std::visit(
      detail::overloaded{
          [&](const ThermalInit& t) {
            return thermal_state(std::get<HarmonicOscillator>(config.model), t.nbar);
          },
          [&](const BasisInit& b) { return basis_state_from_label(config.model, b.label); },
          [&](const GroundOfInit& g) {
            const Spectrum s = exact_spectrum(build_model(g.model));
            return QuantumState::from_amplitudes(s.vectors.col(0));
          },
          [&](const AmplitudesInit& a) {
            ComplexVector v = a.amplitudes;
            const double n = v.norm();
            if (n == 0.0) throw ConfigError("initial_state: amplitudes are all zero", "initial_state");
            return QuantumState::from_amplitudes(v / n);
          }},
      config.initial);
  if (state.dim() != h.dim()) {
    throw ConfigError("initial_state: dimension " + std::to_string(state.dim()) +
                          " does not match the model dimension " + std::to_string(h.dim()),
                      "initial_state");
  }
  return state;
}

}  // namespace peigen::cli
