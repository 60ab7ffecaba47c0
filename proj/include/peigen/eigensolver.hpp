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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "peigen/models.hpp"
#include "peigen/operator_core.hpp"
#include "peigen/optimizer.hpp"

namespace peigen {

/// Branches below this probability are treated as never occurring.
inline constexpr double kNegligibleProbability = 1e-14;

/// Post-selection produced a branch that cannot occur (ejection of an input
/// that lives entirely in the ejected level, or a corrupted state).
class PostSelectionError : public Error {
 public:
  PostSelectionError(const std::string& what, int level) : Error(what), level_(level) {}
  /// Ejected level that failed, or -1.
  int level() const { return level_; }

 private:
  int level_;
};

struct ExactW {};
struct TrotterW {
  int steps = 3;
};
using OperatorMode = std::variant<ExactW, TrotterW>;

struct FixedStep {
  double tau = 0.3;
};
struct VariationalMode {
  OptimizerConfig optimizer;
};
using RunMode = std::variant<FixedStep, VariationalMode>;

/// How the ejection operator scales its argument.
///  Raw:     cos(pi E_j / (2 E_s))
///  Shifted: cos(pi (E_j + gamma) / (2 (E_s + gamma)))
enum class EjectEnergies { Raw, Shifted };

struct RunConfig {
  RunMode mode = FixedStep{};
  GammaPolicy gamma_policy = GammaExact{};
  double epsilon = 1e-3;
  int max_stages = 200;
  OperatorMode operator_mode = ExactW{};
  std::optional<std::uint64_t> seed;
  EjectEnergies eject_energies = EjectEnergies::Raw;
  double fidelity_tol = 1e-3;

  void validate() const;
};

struct CoolingStepResult {
  std::optional<QuantumState> state0;  // absent when p0 < kNegligibleProbability
  double p0 = 0.0;
  std::optional<QuantumState> state1;
  double p1 = 0.0;
};

enum class StageKind { Eject, Cool };

struct StageRecord {
  int k = 0;
  StageKind kind = StageKind::Cool;
  double tau = 0.0;       // ejections: pi / (2 E_s), the effective evolution time
  double ejected_energy = 0.0;
  double energy = 0.0;    // <H> after post-selection
  double p0 = 0.0;
  double p_success = 0.0; // product of p0 up to and including this stage
  std::vector<TrialRecord> trials;
};

struct TargetCheck {
  int level = 0;
  double energy = 0.0;  // oracle eigenvalue E_level
  double fidelity = 0.0;
  bool reached = false;
};

struct CoolingTrace {
  std::vector<StageRecord> stages;
  bool converged = false;
  std::optional<QuantumState> final_state;
  std::optional<std::string> sector_info;
  double gamma = 0.0;
  double initial_energy = 0.0;
  std::vector<std::string> warnings;
  std::optional<TargetCheck> target;

  /// tau of every cooling stage, in order.
  std::vector<double> schedule() const;
  double final_energy() const;
  double final_success_probability() const;
};

/// One application of W_gamma(tau) with the ancilla in |0>, followed by a
/// projective ancilla measurement. `h` carries gamma.
CoolingStepResult cooling_step(const QuantumState& state, const SumHamiltonian& h, double tau,
                               const OperatorMode& mode = ExactW{});

struct EjectResult {
  std::optional<QuantumState> state;
  double probability = 0.0;
};

/// |0>_A branch of exp(-i pi/(2 E_s) H sx_A): amplitudes scale by
/// cos(pi E_j / (2 E_s)). Throws Error when the (shifted) E_s is zero.
EjectResult eject(const QuantumState& state, const SumHamiltonian& h, double e_s,
                  EjectEnergies energies = EjectEnergies::Raw);

/// Deterministic expectation-mode loop at constant tau, always following the
/// |0>_A branch. Non-convergence is reported through `converged`, not thrown.
CoolingTrace fixed_step_run(const QuantumState& initial, const SumHamiltonian& h,
                            const RunConfig& config);

/// Product of p0 over stages 1..k (1-based).
double success_probability(const CoolingTrace& trace, int k);

/// Ejects levels 0..j-1 (energies from the exact oracle), then cools with the
/// configured mode. Throws PostSelectionError naming the level whose ejection
/// has zero probability.
CoolingTrace prepare_eigenstate(int level, const QuantumState& initial, const SumHamiltonian& h,
                                const RunConfig& config);

/// Fixed-step or variational cooling depending on config.mode.
CoolingTrace run_cooling(const QuantumState& initial, const SumHamiltonian& h,
                         const RunConfig& config);

struct TrajectoryResult {
  bool success = false;       // false: shot budget exhausted
  long restarts = 0;          // failed attempts before success
  long shots_used = 0;        // attempts started
  long measurements = 0;      // ancilla measurements performed
};

/// Samples the ancilla outcomes of a schedule with restart-on-failure.
/// `schedule` lists tau_k; an attempt succeeds when all outcomes are 0.
TrajectoryResult stochastic_trajectory(const QuantumState& initial, const SumHamiltonian& h,
                                       const RunConfig& config, const std::vector<double>& schedule,
                                       long max_shots = 1000000);

/// Same sampling from precomputed per-stage probabilities.
TrajectoryResult sample_restarts(const std::vector<double>& stage_p0, std::uint64_t seed,
                                 long max_shots);

}  // namespace peigen
