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

#include "peigen/operator_core.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace peigen {

void require_finite(const ComplexMatrix& m, std::string_view what) {
  if (!m.allFinite()) {
    throw NumericalError(std::string(what) + ": matrix has non-finite entries");
  }
}

void require_same_dim(Index a, Index b, std::string_view what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

HermitianOperator::HermitianOperator(ComplexMatrix matrix)
    : matrix_(std::move(matrix)), cache_(std::make_shared<Cache>()) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    std::ostringstream os;
    os << "HermitianOperator: expected a non-empty square matrix, got " << matrix_.rows()
       << "x" << matrix_.cols();
    throw DimensionError(os.str());
  }
  require_finite(matrix_, "HermitianOperator");
  const double asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol) {
    std::ostringstream os;
    os << "HermitianOperator: matrix is not Hermitian (max |H - H^dagger| = " << asym << ")";
    throw NumericalError(os.str());
  }
}

const EigenDecomposition& HermitianOperator::eigen() const {
  std::call_once(cache_->once, [this] {
    // Symmetrize exactly so the solver sees a Hermitian input.
    const ComplexMatrix sym = 0.5 * (matrix_ + matrix_.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
      std::ostringstream os;
      os << "eigen-decomposition did not converge (dim " << dim()
         << ", max |H_ij| = " << sym.cwiseAbs().maxCoeff() << ")";
      throw NumericalError(os.str());
    }
    cache_->data.values = solver.eigenvalues();
    cache_->data.vectors = solver.eigenvectors();
  });
  return cache_->data;
}

double HermitianOperator::operator_norm() const {
  const auto& e = eigen();
  return std::max(std::abs(e.values(0)), std::abs(e.values(e.values.size() - 1)));
}

ComplexMatrix hermitian_matfunc(const HermitianOperator& h,
                                const std::function<Complex(double)>& f) {
  const auto& e = h.eigen();
  ComplexVector fv(e.values.size());
  for (Index j = 0; j < fv.size(); ++j) {
    fv(j) = f(e.values(j));
  }
  ComplexMatrix out = e.vectors * fv.asDiagonal() * e.vectors.adjoint();
  require_finite(out, "hermitian_matfunc");
  return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b, Index dim_limit) {
  const Index rows = a.rows() * b.rows();
  const Index cols = a.cols() * b.cols();
  if (rows > dim_limit || cols > dim_limit) {
    std::ostringstream os;
    os << "tensor_product: result " << rows << "x" << cols << " exceeds limit " << dim_limit;
    throw DimensionError(os.str());
  }
  ComplexMatrix out(rows, cols);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

QuantumState QuantumState::from_amplitudes(ComplexVector amplitudes, double tol) {
  return validate_and_normalize(QuantumState(Pure{std::move(amplitudes)}), tol);
}

QuantumState QuantumState::from_density(ComplexMatrix density, double tol) {
  return validate_and_normalize(QuantumState(Mixed{std::move(density)}), tol);
}

QuantumState QuantumState::basis(Index dim, Index index) {
  if (index < 0 || index >= dim) {
    throw DimensionError("QuantumState::basis: index out of range");
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return QuantumState(Pure{std::move(v)});
}

Index QuantumState::dim() const {
  return std::visit(
      [](const auto& f) -> Index {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Pure>) {
          return f.amplitudes.size();
        } else {
          return f.density.rows();
        }
      },
      form_);
}

const ComplexVector& QuantumState::amplitudes() const {
  if (const auto* p = std::get_if<Pure>(&form_)) return p->amplitudes;
  throw StateError("QuantumState: amplitudes requested from a mixed state");
}

const ComplexMatrix& QuantumState::density_matrix() const {
  if (const auto* m = std::get_if<Mixed>(&form_)) return m->density;
  throw StateError("QuantumState: density matrix requested from a pure state");
}

ComplexMatrix QuantumState::as_density() const {
  if (const auto* p = std::get_if<Pure>(&form_)) {
    return p->amplitudes * p->amplitudes.adjoint();
  }
  return std::get<Mixed>(form_).density;
}

RealVector QuantumState::populations(const ComplexMatrix& basis) const {
  require_same_dim(basis.rows(), dim(), "populations");
  if (const auto* p = std::get_if<Pure>(&form_)) {
    return (basis.adjoint() * p->amplitudes).cwiseAbs2();
  }
  const auto& rho = std::get<Mixed>(form_).density;
  return (basis.adjoint() * rho * basis).diagonal().real();
}

QuantumState QuantumState::transformed(const ComplexMatrix& k) const {
  require_same_dim(k.cols(), dim(), "transformed");
  if (const auto* p = std::get_if<Pure>(&form_)) {
    return QuantumState(Pure{k * p->amplitudes});
  }
  const auto& rho = std::get<Mixed>(form_).density;
  return QuantumState(Mixed{k * rho * k.adjoint()});
}

double QuantumState::weight() const {
  if (const auto* p = std::get_if<Pure>(&form_)) return p->amplitudes.squaredNorm();
  return std::get<Mixed>(form_).density.trace().real();
}

double expectation(const QuantumState& state, const ComplexMatrix& h) {
  require_same_dim(h.rows(), state.dim(), "expectation");
  Complex value;
  if (state.is_pure()) {
    const auto& psi = state.amplitudes();
    value = psi.dot(h * psi);
  } else {
    value = (state.density_matrix() * h).trace();
  }
  if (std::abs(value.imag()) > 1e-9) {
    std::ostringstream os;
    os << "expectation: imaginary residue " << value.imag() << " exceeds 1e-9";
    throw NumericalError(os.str());
  }
  return value.real();
}

double expectation(const QuantumState& state, const HermitianOperator& h) {
  return expectation(state, h.matrix());
}

QuantumState validate_and_normalize(const QuantumState& state, double tol) {
  if (state.is_pure()) {
    const auto& psi = state.amplitudes();
    if (psi.size() == 0) throw StateError("state has dimension 0");
    if (!psi.allFinite()) throw StateError("state has non-finite amplitudes");
    const double n2 = psi.squaredNorm();
    if (std::abs(n2 - 1.0) > tol) {
      std::ostringstream os;
      os << "state norm^2 " << n2 << " deviates from 1 by more than " << tol;
      throw StateError(os.str());
    }
    return QuantumState(QuantumState::Pure{psi / std::sqrt(n2)});
  }

  const auto& rho = state.density_matrix();
  if (rho.rows() == 0 || rho.rows() != rho.cols()) {
    throw StateError("density matrix must be square and non-empty");
  }
  if (!rho.allFinite()) throw StateError("density matrix has non-finite entries");
  const double asym = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol) {
    std::ostringstream os;
    os << "density matrix is not Hermitian (max deviation " << asym << ")";
    throw StateError(os.str());
  }
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    std::ostringstream os;
    os << "density matrix trace " << tr << " deviates from 1 by more than " << tol;
    throw StateError(os.str());
  }
  ComplexMatrix sym = 0.5 * (rho + rho.adjoint()) / tr;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("validate_and_normalize: eigenvalue computation failed");
  }
  if (solver.eigenvalues()(0) < -1e-10) {
    std::ostringstream os;
    os << "density matrix is not positive semidefinite (min eigenvalue "
       << solver.eigenvalues()(0) << ")";
    throw StateError(os.str());
  }
  return QuantumState(QuantumState::Mixed{std::move(sym)});
}

double fidelity_with(const QuantumState& state, const ComplexVector& target) {
  require_same_dim(target.size(), state.dim(), "fidelity_with");
  if (state.is_pure()) return std::norm(target.dot(state.amplitudes()));
  return target.dot(state.density_matrix() * target).real();
}

}  // namespace peigen
