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

#include "peigen/random_instances.hpp"

#include <string>

namespace peigen {
namespace {

ComplexMatrix gaussian(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = n(rng);
      const double im = n(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

HermitianOperator random_hermitian(Index dim, std::mt19937_64& rng, double scale) {
  const ComplexMatrix g = gaussian(dim, dim, rng);
  return HermitianOperator((0.5 * scale) * (g + g.adjoint()));
}

QuantumState random_pure_state(Index dim, std::mt19937_64& rng) {
  ComplexVector v = gaussian(dim, 1, rng).col(0);
  v.normalize();
  return QuantumState::from_amplitudes(std::move(v));
}

QuantumState random_mixed_state(Index dim, std::mt19937_64& rng) {
  const ComplexMatrix g = gaussian(dim, dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return QuantumState::from_density(std::move(rho));
}

SumHamiltonian random_sum_hamiltonian(Index dim, int terms, std::mt19937_64& rng) {
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    out.push_back(Term{"H" + std::to_string(k + 1), random_hermitian(dim, rng)});
  }
  return SumHamiltonian(std::move(out));
}

}  // namespace peigen
