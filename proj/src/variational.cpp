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

#include "peigen/variational.hpp"

namespace peigen {

ObjectiveValue stage_objective(const QuantumState& state, const SumHamiltonian& h, double tau,
                               const OperatorMode& mode) {
  const CoolingStepResult step = cooling_step(state, h, tau, mode);
  if (!step.state0) return ObjectiveValue{kInfeasibleEnergy, 0.0};
  return ObjectiveValue{expectation(*step.state0, h.total()), step.p0};
}

ScalarMinimum minimize_stage(const QuantumState& state, const SumHamiltonian& h,
                             const OptimizerConfig& opt, const OperatorMode& mode) {
  opt.validate();
  return minimize_bounded([&](double tau) { return stage_objective(state, h, tau, mode); }, opt);
}

CoolingTrace variational_run(const QuantumState& initial, const SumHamiltonian& h,
                             const RunConfig& config) {
  if (!std::holds_alternative<VariationalMode>(config.mode)) {
    throw Error("variational_run: config.mode must be variational");
  }
  return run_cooling(initial, h, config);
}

}  // namespace peigen
