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

#include "peigen/cli/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "peigen/circuits.hpp"
#include "peigen/eigensolver.hpp"
#include "peigen/random_instances.hpp"
#include "peigen/trotter.hpp"

namespace peigen::cli {

using nlohmann::json;

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names{"xxx-circuit", "dipole-circuit", "trotter-order",
                                              "cooling-inequality"};
  return names;
}

CheckReport check_xxx_circuit(bool force_wrong) {
  CheckReport rep{"xxx-circuit", true, "", json::object()};
  json sweep = json::array();
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / 100.0;
    const double d = verify_xxx_circuit(phi, force_wrong);
    worst = std::max(worst, d);
    sweep.push_back({{"phi", phi}, {"distance", d}});
  }
  const double control = verify_xxx_circuit(0.7, true);
  rep.passed = worst <= 1e-10 && control > 1e-2;
  rep.details = {{"max_distance", worst},
                 {"tolerance", 1e-10},
                 {"negative_control_distance", control},
                 {"sweep", sweep}};
  std::ostringstream os;
  os << "max distance " << worst << " over 100 phi; dropped-CNOT control " << control;
  rep.summary = os.str();
  return rep;
}

CheckReport check_dipole_circuit(bool force_wrong) {
  CheckReport rep{"dipole-circuit", true, "", json::object()};
  constexpr int kCutoff = 24;
  json points = json::array();
  double worst = 0.0;
  try {
    for (double phi : {0.1, 0.5, 1.0}) {
      const double d = verify_dipole_circuit(phi, kCutoff, force_wrong);
      worst = std::max(worst, d);
      points.push_back({{"phi", phi}, {"distance", d}});
    }
    const double control = verify_dipole_circuit(0.5, kCutoff, true);
    rep.passed = worst <= 1e-8 && control > 1e-2;
    rep.details = {{"cutoff", kCutoff},
                   {"max_distance", worst},
                   {"tolerance", 1e-8},
                   {"negative_control_distance", control},
                   {"points", points}};
    std::ostringstream os;
    os << "max subspace distance " << worst << " at cutoff " << kCutoff
       << "; dropped-CNOT control " << control;
    rep.summary = os.str();
  } catch (const InconclusiveError& e) {
    rep.passed = false;
    rep.summary = std::string("inconclusive: ") + e.what();
  }
  return rep;
}

double trotter_error(const SumHamiltonian& h, double tau, int r) {
  return operator_norm(trotter_W(h, tau, r).matrix() - exact_W(h, tau, false).matrix());
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CheckReport check_trotter_order() {
  CheckReport rep{"trotter-order", true, "", json::object()};
  const std::vector<std::pair<std::string, ModelSpec>> models{
      {"rabi", Rabi{}}, {"hubbard-2", Hubbard1D{2, 1.0, 2.0}}, {"hubbard-3", Hubbard1D{3, 1.0, 2.0}}};
  const std::vector<double> rs{1, 2, 4, 8};
  json slopes = json::object();
  std::ostringstream os;
  for (const auto& [name, spec] : models) {
    const SumHamiltonian h = build_model(spec);
    std::vector<double> errs;
    for (double r : rs) errs.push_back(trotter_error(h, 0.3, static_cast<int>(r)));
    const double slope = loglog_slope(rs, errs);
    const bool ok = slope >= -2.2 && slope <= -1.8;
    rep.passed = rep.passed && ok;
    slopes[name] = {{"slope", slope}, {"errors", errs}, {"passed", ok}};
    os << name << " slope " << slope << "; ";
  }

  // Rabi from |down,0> at tau = 0.3: r = 3 against exact W.
  const Rabi rabi;
  const SumHamiltonian h = build_rabi(rabi);
  const QuantumState init = basis_state_from_label(rabi, "d,0");
  RunConfig cfg;
  cfg.mode = FixedStep{0.3};
  const double e_exact = run_cooling(init, h, cfg).final_energy();
  cfg.operator_mode = TrotterW{3};
  const double e_trot = run_cooling(init, h, cfg).final_energy();
  const double diff = std::abs(e_exact - e_trot);
  rep.passed = rep.passed && diff <= 5e-3;
  rep.details = {{"tau", 0.3},
                 {"r", rs},
                 {"models", slopes},
                 {"rabi_cooling", {{"exact", e_exact}, {"trotter_r3", e_trot}, {"difference", diff}}}};
  os << "rabi r=3 vs exact final energy difference " << diff;
  rep.summary = os.str();
  return rep;
}

CheckReport check_cooling_inequality(std::uint64_t seed, int instances) {
  CheckReport rep{"cooling-inequality", true, "", json::object()};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_dist(2, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  int violations = 0;
  int eigen_failures = 0;
  double worst_closure = 0.0;
  double worst_eigen = 0.0;
  for (int n = 0; n < instances; ++n) {
    const Index dim = dim_dist(rng);
    const HermitianOperator op = random_hermitian(dim, rng);
    const auto& eig = op.eigen();
    const double gamma = -eig.values(0);
    const SumHamiltonian h(std::vector<Term>{Term{"H", op}}, gamma);
    const double norm = std::max(std::abs(eig.values(dim - 1) + gamma), 1e-12);
    const double tau = (1.0 - unit(rng)) * 0.1 / norm;  // (0, 0.1/||H+gamma||]

    const QuantumState psi = random_pure_state(dim, rng);
    const CoolingStepResult step = cooling_step(psi, h, tau);
    const double e = expectation(psi, op);
    const double e0 = expectation(*step.state0, op);
    const double e1 = expectation(*step.state1, op);
    const double slack = 1e-12 * std::max(1.0, std::abs(e));
    if (!(e0 <= e + slack && e < e1)) ++violations;
    worst_closure = std::max(worst_closure, std::abs(step.p0 + step.p1 - 1.0));

    // Eigenstate input: nothing moves.
    const Index j = std::uniform_int_distribution<Index>(0, dim - 1)(rng);
    const QuantumState v = QuantumState::from_amplitudes(eig.vectors.col(j));
    const CoolingStepResult es = cooling_step(v, h, tau);
    const double ev = eig.values(j);
    double dev = std::abs(expectation(*es.state0, op) - ev);
    if (es.state1) dev = std::max(dev, std::abs(expectation(*es.state1, op) - ev));
    worst_eigen = std::max(worst_eigen, dev);
    if (dev > 1e-10) ++eigen_failures;
  }
  rep.passed = violations == 0 && eigen_failures == 0 && worst_closure <= 1e-10;
  rep.details = {{"instances", instances},
                 {"seed", seed},
                 {"violations", violations},
                 {"eigenstate_failures", eigen_failures},
                 {"max_eigenstate_deviation", worst_eigen},
                 {"max_branch_closure_error", worst_closure}};
  std::ostringstream os;
  os << instances << " instances, " << violations << " violations, eigenstate deviation "
     << worst_eigen;
  rep.summary = os.str();
  return rep;
}

CheckReport run_check(const std::string& name, bool force_wrong) {
  if (name == "xxx-circuit") return check_xxx_circuit(force_wrong);
  if (name == "dipole-circuit") return check_dipole_circuit(force_wrong);
  if (name == "trotter-order") return check_trotter_order();
  if (name == "cooling-inequality") return check_cooling_inequality();
  throw Error("unknown check '" + name + "'");
}

}  // namespace peigen::cli
