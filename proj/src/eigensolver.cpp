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

#include "peigen/eigensolver.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "peigen/detail/overloaded.hpp"
#include "peigen/trotter.hpp"
#include "peigen/variational.hpp"

namespace peigen {
namespace {

QuantumState normalized(const QuantumState& s, double weight) {
  if (s.is_pure()) return QuantumState(QuantumState::Pure{s.amplitudes() / std::sqrt(weight)});
  ComplexMatrix rho = s.density_matrix() / weight;
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return QuantumState(QuantumState::Mixed{std::move(rho)});
}

// Kraus pair (<0|W|0>, <1|W|0>) on the system.
std::pair<ComplexMatrix, ComplexMatrix> branch_operators(const SumHamiltonian& h, double tau,
                                                         const OperatorMode& mode) {
  return std::visit(
      detail::overloaded{
          [&](const ExactW&) {
            const double g = h.gamma();
            ComplexMatrix k0 = hermitian_matfunc(
                h.total(), [&](double e) { return Complex(std::cos((e + g) * tau), 0.0); });
            ComplexMatrix k1 = hermitian_matfunc(
                h.total(), [&](double e) { return Complex(0.0, -std::sin((e + g) * tau)); });
            return std::pair{std::move(k0), std::move(k1)};
          },
          [&](const TrotterW& t) {
            const JointUnitary w = trotter_W(h, tau, t.steps) *
                                   ancilla_rx(h.dim(), 2.0 * h.gamma() * tau);
            return std::pair{w.ancilla_block(0, 0), w.ancilla_block(1, 0)};
          }},
      mode);
}

GammaChoice resolve_gamma(const SumHamiltonian& h, const RunConfig& config,
                          CoolingTrace& trace) {
  GammaChoice choice = gamma_for(h, config.gamma_policy);
  trace.gamma = choice.value;
  if (choice.warning) trace.warnings.push_back(*choice.warning);
  return choice;
}

// Shared cooling loop. `trace` may already hold ejection stages.
void cool(QuantumState state, const SumHamiltonian& shifted, const RunConfig& config,
          CoolingTrace& trace) {
  double previous = expectation(state, shifted.total());
  double p_success = trace.stages.empty() ? 1.0 : trace.stages.back().p_success;
  int cool_stages = 0;

  while (cool_stages < config.max_stages) {
    StageRecord rec;
    rec.k = static_cast<int>(trace.stages.size()) + 1;
    rec.kind = StageKind::Cool;

    if (const auto* fixed = std::get_if<FixedStep>(&config.mode)) {
      rec.tau = fixed->tau;
    } else {
      const auto& var = std::get<VariationalMode>(config.mode);
      ScalarMinimum best = minimize_stage(state, shifted, var.optimizer, config.operator_mode);
      if (best.budget_exhausted) {
        std::ostringstream os;
        os << "stage " << rec.k << ": optimizer evaluation budget exhausted";
        trace.warnings.push_back(os.str());
      }
      rec.tau = best.tau;
      rec.trials = std::move(best.trials);
    }

    CoolingStepResult step = cooling_step(state, shifted, rec.tau, config.operator_mode);
    if (!step.state0) {
      std::ostringstream os;
      os << "cooling stage " << rec.k << " at tau=" << rec.tau
         << " has zero probability of the |0> outcome";
      throw PostSelectionError(os.str(), -1);
    }
    state = std::move(*step.state0);
    rec.p0 = step.p0;
    p_success *= step.p0;
    rec.p_success = p_success;
    rec.energy = expectation(state, shifted.total());
    trace.stages.push_back(std::move(rec));
    ++cool_stages;

    const double energy = trace.stages.back().energy;
    if (std::abs(previous - energy) <= config.epsilon) {
      trace.converged = true;
      break;
    }
    previous = energy;
  }
  trace.final_state = std::move(state);
}

}  // namespace

void RunConfig::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error("run.epsilon must be > 0");
  if (max_stages < 1) throw Error("run.max_stages must be >= 1");
  if (!(fidelity_tol > 0.0) || fidelity_tol >= 1.0) {
    throw Error("run.fidelity_tol must lie in (0, 1)");
  }
  std::visit(detail::overloaded{[](const FixedStep& f) {
                                  if (!(f.tau > 0.0) || !std::isfinite(f.tau)) {
                                    throw Error("run.tau must be > 0");
                                  }
                                },
                                [](const VariationalMode& v) { v.optimizer.validate(); }},
             mode);
  if (const auto* t = std::get_if<TrotterW>(&operator_mode); t && t->steps < 1) {
    throw Error("run.operator.steps must be >= 1");
  }
}

std::vector<double> CoolingTrace::schedule() const {
  std::vector<double> out;
  for (const auto& s : stages) {
    if (s.kind == StageKind::Cool) out.push_back(s.tau);
  }
  return out;
}

double CoolingTrace::final_energy() const {
  return stages.empty() ? initial_energy : stages.back().energy;
}

double CoolingTrace::final_success_probability() const {
  return stages.empty() ? 1.0 : stages.back().p_success;
}

CoolingStepResult cooling_step(const QuantumState& state, const SumHamiltonian& h, double tau,
                               const OperatorMode& mode) {
  require_same_dim(state.dim(), h.dim(), "cooling_step");
  if (!std::isfinite(tau)) throw Error("cooling_step: tau must be finite");

  const auto [k0, k1] = branch_operators(h, tau, mode);
  const QuantumState s0 = state.transformed(k0);
  const QuantumState s1 = state.transformed(k1);

  CoolingStepResult out;
  out.p0 = std::max(0.0, s0.weight());
  out.p1 = std::max(0.0, s1.weight());
  if (out.p0 < kNegligibleProbability && out.p1 < kNegligibleProbability) {
    throw StateError("cooling_step: both ancilla outcomes vanish; input state is not normalized");
  }
  if (out.p0 >= kNegligibleProbability) out.state0 = normalized(s0, out.p0);
  if (out.p1 >= kNegligibleProbability) out.state1 = normalized(s1, out.p1);
  return out;
}

EjectResult eject(const QuantumState& state, const SumHamiltonian& h, double e_s,
                  EjectEnergies energies) {
  require_same_dim(state.dim(), h.dim(), "eject");
  const double shift = energies == EjectEnergies::Shifted ? h.gamma() : 0.0;
  const double denom = e_s + shift;
  if (denom == 0.0 || !std::isfinite(denom)) {
    throw Error("eject: the ejected energy is zero, the ejection angle pi/(2 E_s) is undefined");
  }
  const ComplexMatrix k = hermitian_matfunc(h.total(), [&](double e) {
    return Complex(std::cos(std::numbers::pi * (e + shift) / (2.0 * denom)), 0.0);
  });
  const QuantumState s = state.transformed(k);
  EjectResult out;
  out.probability = std::max(0.0, s.weight());
  if (out.probability >= kNegligibleProbability) out.state = normalized(s, out.probability);
  return out;
}

CoolingTrace fixed_step_run(const QuantumState& initial, const SumHamiltonian& h,
                            const RunConfig& config) {
  if (!std::holds_alternative<FixedStep>(config.mode)) {
    throw Error("fixed_step_run: config.mode must be fixed");
  }
  return run_cooling(initial, h, config);
}

double success_probability(const CoolingTrace& trace, int k) {
  if (k < 0 || k > static_cast<int>(trace.stages.size())) {
    throw Error("success_probability: stage index out of range");
  }
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= trace.stages[i].p0;
  return p;
}

CoolingTrace run_cooling(const QuantumState& initial, const SumHamiltonian& h,
                         const RunConfig& config) {
  config.validate();
  require_same_dim(initial.dim(), h.dim(), "run_cooling");
  CoolingTrace trace;
  const GammaChoice g = resolve_gamma(h, config, trace);
  const SumHamiltonian shifted = h.with_gamma(g.value);
  trace.initial_energy = expectation(initial, shifted.total());
  cool(initial, shifted, config, trace);
  return trace;
}

CoolingTrace prepare_eigenstate(int level, const QuantumState& initial, const SumHamiltonian& h,
                                const RunConfig& config) {
  config.validate();
  require_same_dim(initial.dim(), h.dim(), "prepare_eigenstate");
  if (level < 0 || level >= h.dim()) throw Error("prepare_eigenstate: level out of range");

  CoolingTrace trace;
  const GammaChoice g = resolve_gamma(h, config, trace);
  const SumHamiltonian shifted = h.with_gamma(g.value);
  const Spectrum spec = exact_spectrum(h);
  trace.initial_energy = expectation(initial, shifted.total());

  QuantumState state = initial;
  double p_success = 1.0;
  for (int j = 0; j < level; ++j) {
    const double e_s = spec.values(j);
    EjectResult ej = eject(state, shifted, e_s, config.eject_energies);
    if (!ej.state) {
      std::ostringstream os;
      os << "ejection of level " << j << " (E=" << e_s
         << ") has zero success probability; the state lies entirely in that level";
      throw PostSelectionError(os.str(), j);
    }
    state = std::move(*ej.state);
    p_success *= ej.probability;

    StageRecord rec;
    rec.k = static_cast<int>(trace.stages.size()) + 1;
    rec.kind = StageKind::Eject;
    const double shift = config.eject_energies == EjectEnergies::Shifted ? g.value : 0.0;
    rec.tau = std::numbers::pi / (2.0 * (e_s + shift));
    rec.ejected_energy = e_s;
    rec.energy = expectation(state, shifted.total());
    rec.p0 = ej.probability;
    rec.p_success = p_success;
    trace.stages.push_back(std::move(rec));
  }

  cool(std::move(state), shifted, config, trace);

  TargetCheck check;
  check.level = level;
  check.energy = spec.values(level);
  const double scale = std::max(1.0, std::abs(check.energy));
  const RealVector pops = trace.final_state->populations(spec.vectors);
  for (Index i = 0; i < pops.size(); ++i) {
    if (std::abs(spec.values(i) - check.energy) <= 1e-9 * scale) check.fidelity += pops(i);
  }
  check.reached = trace.converged && check.fidelity >= 1.0 - config.fidelity_tol;
  trace.target = check;
  return trace;
}

TrajectoryResult sample_restarts(const std::vector<double>& stage_p0, std::uint64_t seed,
                                 long max_shots) {
  TrajectoryResult out;
  if (stage_p0.empty()) {
    out.success = true;
    return out;
  }
  std::mt19937_64 rng(seed);
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  for (long shot = 0; shot < max_shots; ++shot) {
    ++out.shots_used;
    bool ok = true;
    for (double p : stage_p0) {
      ++out.measurements;
      const double u = static_cast<double>(rng() >> 11) * kScale;
      if (u >= p) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.success = true;
      return out;
    }
    ++out.restarts;
  }
  return out;
}

TrajectoryResult stochastic_trajectory(const QuantumState& initial, const SumHamiltonian& h,
                                       const RunConfig& config, const std::vector<double>& schedule,
                                       long max_shots) {
  if (!config.seed) throw Error("stochastic_trajectory: a seed is required");
  if (max_shots < 1) throw Error("stochastic_trajectory: max_shots must be >= 1");
  require_same_dim(initial.dim(), h.dim(), "stochastic_trajectory");

  const SumHamiltonian shifted = h.with_gamma(gamma_for(h, config.gamma_policy).value);
  std::vector<double> p0s;
  p0s.reserve(schedule.size());
  QuantumState state = initial;
  for (double tau : schedule) {
    CoolingStepResult step = cooling_step(state, shifted, tau, config.operator_mode);
    p0s.push_back(step.p0);
    if (!step.state0) break;  // this stage always fails; sampling exhausts the budget
    state = std::move(*step.state0);
  }
  return sample_restarts(p0s, *config.seed, max_shots);
}

}  // namespace peigen
