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
#include <string>
#include <vector>

#include "json.hpp"
#include "peigen/models.hpp"

namespace peigen::cli {

struct CheckReport {
  std::string name;
  bool passed = false;
  std::string summary;
  nlohmann::json details;
};

/// Names accepted by `peigen verify --only`.
const std::vector<std::string>& verify_check_names();

/// 100-point phi sweep of the CNOT-ladder circuit (<= 1e-10), plus the
/// dropped-CNOT negative control. `force_wrong` swaps in the broken circuit.
CheckReport check_xxx_circuit(bool force_wrong = false);

/// phi in {0.1, 0.5, 1.0} at cutoff 24 (<= 1e-8 on n < 12), plus negative control.
CheckReport check_dipole_circuit(bool force_wrong = false);

/// ||W_exact - W_trotter|| at tau = 0.3.
double trotter_error(const SumHamiltonian& h, double tau, int r);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Error slope over r in {1,2,4,8} for the multi-term paper models, and Rabi
/// cooling with r = 3 against exact W.
CheckReport check_trotter_order();

/// Randomized cooling-inequality suite: <H>_0 <= <H> < <H>_1 for small tau,
/// equality for eigenstate inputs.
CheckReport check_cooling_inequality(std::uint64_t seed = 20260101, int instances = 1000);

CheckReport run_check(const std::string& name, bool force_wrong);

}  // namespace peigen::cli
