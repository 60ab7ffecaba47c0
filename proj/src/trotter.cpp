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

#include "peigen/trotter.hpp"

#include <cmath>
#include <sstream>

namespace peigen {
namespace {

const Complex kI(0.0, 1.0);

ComplexMatrix propagator(const HermitianOperator& h, double s) {
  return hermitian_matfunc(h, [s](double lambda) { return std::exp(-kI * lambda * s); });
}

}  // namespace

JointUnitary JointUnitary::from_matrix(ComplexMatrix m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
    throw DimensionError("JointUnitary: expected an even, square matrix");
  }
  require_finite(m, "JointUnitary");
  const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
  const double dev = (m * m.adjoint() - id).cwiseAbs().maxCoeff();
  if (dev > 1e-10) {
    std::ostringstream os;
    os << "JointUnitary: matrix is not unitary (max |U U^dagger - I| = " << dev << ")";
    throw NumericalError(os.str());
  }
  return JointUnitary(std::move(m));
}

ComplexMatrix JointUnitary::ancilla_block(int out, int in) const {
  if (out < 0 || out > 1 || in < 0 || in > 1) {
    throw DimensionError("ancilla_block: ancilla index must be 0 or 1");
  }
  const Index n = system_dim();
  ComplexMatrix block(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) block(i, j) = matrix_(2 * i + out, 2 * j + in);
  }
  return block;
}

JointUnitary JointUnitary::operator*(const JointUnitary& rhs) const {
  require_same_dim(dim(), rhs.dim(), "JointUnitary product");
  return JointUnitary(matrix_ * rhs.matrix_);
}

JointUnitary from_sigma_x_branches(const ComplexMatrix& plus, const ComplexMatrix& minus) {
  require_same_dim(plus.rows(), minus.rows(), "from_sigma_x_branches");
  ComplexMatrix proj_plus(2, 2);
  proj_plus << 0.5, 0.5, 0.5, 0.5;
  ComplexMatrix proj_minus(2, 2);
  proj_minus << 0.5, -0.5, -0.5, 0.5;
  return JointUnitary::from_matrix(tensor_product(plus, proj_plus) +
                                   tensor_product(minus, proj_minus));
}

JointUnitary exact_W(const SumHamiltonian& h, double tau, bool include_gamma) {
  const double shift = include_gamma ? h.gamma() : 0.0;
  const auto branch = [&](double sign) {
    return hermitian_matfunc(h.total(), [=](double lambda) {
      return std::exp(-kI * sign * (lambda + shift) * tau);
    });
  };
  return from_sigma_x_branches(branch(1.0), branch(-1.0));
}

ComplexMatrix trotter_system_product(const SumHamiltonian& h, double s, int r) {
  if (r < 1) throw Error("Trotter steps r must be >= 1");
  const auto& terms = h.terms();
  const double dt = s / r;
  const std::size_t m = terms.size();

  ComplexMatrix step = ComplexMatrix::Identity(h.dim(), h.dim());
  std::vector<ComplexMatrix> halves;
  halves.reserve(m - 1);
  for (std::size_t k = 0; k + 1 < m; ++k) halves.push_back(propagator(terms[k].op, 0.5 * dt));
  for (const auto& u : halves) step = step * u;
  step = step * propagator(terms.back().op, dt);
  for (auto it = halves.rbegin(); it != halves.rend(); ++it) step = step * *it;

  ComplexMatrix out = ComplexMatrix::Identity(h.dim(), h.dim());
  for (int k = 0; k < r; ++k) out = out * step;
  return out;
}

JointUnitary trotter_W(const SumHamiltonian& h, double tau, int r) {
  return from_sigma_x_branches(trotter_system_product(h, tau, r),
                               trotter_system_product(h, -tau, r));
}

JointUnitary ancilla_rx(Index system_dim, double theta) {
  ComplexMatrix rx(2, 2);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  rx << c, -kI * s, -kI * s, c;
  return JointUnitary::from_matrix(
      tensor_product(ComplexMatrix::Identity(system_dim, system_dim), rx));
}

JointUnitary WGammaParts::compose() const {
  return w * ancilla_rx(w.system_dim(), ancilla_rotation_angle);
}

WGammaParts wgamma_decompose(const SumHamiltonian& h, double tau) {
  return WGammaParts{exact_W(h, tau, false), 2.0 * h.gamma() * tau};
}

}  // namespace peigen
