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
#include <random>

#include "peigen/models.hpp"
#include "peigen/operator_core.hpp"

namespace peigen {

// Seeded random instances for property checks. All draws go through
// std::mt19937_64, whose output sequence is fixed by the standard.

/// Gaussian Hermitian matrix (GUE-like), scaled so entries are O(scale).
HermitianOperator random_hermitian(Index dim, std::mt19937_64& rng, double scale = 1.0);

/// Haar-like random pure state.
QuantumState random_pure_state(Index dim, std::mt19937_64& rng);

/// Random full-rank density matrix G G^dagger / Tr.
QuantumState random_mixed_state(Index dim, std::mt19937_64& rng);

/// Sum of `terms` random Hermitian terms of dimension `dim`.
SumHamiltonian random_sum_hamiltonian(Index dim, int terms, std::mt19937_64& rng);

}  // namespace peigen
