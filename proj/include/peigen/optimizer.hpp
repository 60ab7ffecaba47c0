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

#include <functional>
#include <limits>
#include <vector>

#include "peigen/operator_core.hpp"

namespace peigen {

/// Energy reported for a trial whose post-selection probability vanished.
inline constexpr double kInfeasibleEnergy = std::numeric_limits<double>::max();

/// Bounded scalar search for the per-stage step tau.
///
/// With coarse_grid >= 3 the interval is first sampled on a uniform grid and the
/// refinement runs inside the bracket around the best grid point; otherwise the
/// refinement covers [tau_lo, tau_hi] directly.
struct OptimizerConfig {
  double tau_lo = 0.01;
  double tau_hi = 1.0;
  double x_tol = 1e-2;
  int max_evals = 25;
  int coarse_grid = 0;

  void validate() const;
};

struct TrialRecord {
  int trial_index = 0;
  double tau = 0.0;
  double energy = 0.0;
  double p0 = 0.0;
};

struct ObjectiveValue {
  double energy = 0.0;
  double p0 = 0.0;
};

struct ScalarMinimum {
  double tau = 0.0;
  double energy = 0.0;
  double p0 = 0.0;
  std::vector<TrialRecord> trials;
  bool budget_exhausted = false;
};

/// Brent's bounded minimization (golden section with parabolic steps) of
/// `objective` over tau. Every evaluation is logged in order; the returned tau
/// is the best evaluated point, with ties going to the smaller tau.
ScalarMinimum minimize_bounded(const std::function<ObjectiveValue(double)>& objective,
                               const OptimizerConfig& config);

}  // namespace peigen
