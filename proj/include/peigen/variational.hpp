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

#include "peigen/eigensolver.hpp"
#include "peigen/optimizer.hpp"

namespace peigen {

/// <H> of the post-selected |0>_A branch after one cooling step, and its
/// probability. A vanishing branch reports kInfeasibleEnergy with p0 = 0.
ObjectiveValue stage_objective(const QuantumState& state, const SumHamiltonian& h, double tau,
                               const OperatorMode& mode = ExactW{});

/// Classical outer loop for one stage: bounded search over tau.
ScalarMinimum minimize_stage(const QuantumState& state, const SumHamiltonian& h,
                             const OptimizerConfig& opt, const OperatorMode& mode = ExactW{});

/// Cooling with a per-stage optimized tau. Trial logs are kept on each stage.
CoolingTrace variational_run(const QuantumState& initial, const SumHamiltonian& h,
                             const RunConfig& config);

}  // namespace peigen
