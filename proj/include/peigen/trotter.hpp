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

#include "peigen/models.hpp"
#include "peigen/operator_core.hpp"

namespace peigen {

/// Unitary on system (x) ancilla, ancilla factor last (joint index = 2*s + a).
class JointUnitary {
 public:
  /// Checks U U^dagger = I within 1e-10.
  static JointUnitary from_matrix(ComplexMatrix m);

  Index dim() const { return matrix_.rows(); }
  Index system_dim() const { return matrix_.rows() / 2; }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// System block <out|_A U |in>_A.
  ComplexMatrix ancilla_block(int out, int in) const;

  JointUnitary operator*(const JointUnitary& rhs) const;

 private:
  explicit JointUnitary(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// Assembles A (x) |+><+| + B (x) |-><-| for system unitaries A and B.
JointUnitary from_sigma_x_branches(const ComplexMatrix& plus, const ComplexMatrix& minus);

/// exp(-i (H + gamma) sx_A tau) built from the exact spectrum of H.
/// `include_gamma` false gives W(tau) = exp(-i H sx_A tau).
JointUnitary exact_W(const SumHamiltonian& h, double tau, bool include_gamma = true);

/// Symmetric second-order product on the system space,
/// [e^{-i H_1 s/2r} ... e^{-i H_M s/r} ... e^{-i H_1 s/2r}]^r.
ComplexMatrix trotter_system_product(const SumHamiltonian& h, double s, int r);

/// Second-order Trotter-Suzuki approximation of W(tau) = exp(-i H sx_A tau)
/// (gamma excluded). The sx_A = +1 branch carries the product at +tau and the
/// sx_A = -1 branch at -tau, so the result is exactly unitary.
JointUnitary trotter_W(const SumHamiltonian& h, double tau, int r);

/// I (x) R_x(theta) with R_x(theta) = exp(-i theta sx / 2).
JointUnitary ancilla_rx(Index system_dim, double theta);

struct WGammaParts {
  JointUnitary w;
  double ancilla_rotation_angle = 0.0;

  /// W(tau) R_x(2 gamma tau).
  JointUnitary compose() const;
};

/// W_gamma(tau) = W(tau) R_x^A(2 gamma tau).
WGammaParts wgamma_decompose(const SumHamiltonian& h, double tau);

}  // namespace peigen
