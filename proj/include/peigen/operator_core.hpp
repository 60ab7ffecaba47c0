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

#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <Eigen/Dense>

namespace peigen {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Element-wise tolerance for Hermiticity checks.
inline constexpr double kHermitianTol = 1e-12;
/// Tolerance on state norm / trace.
inline constexpr double kNormTol = 1e-10;
/// Largest dimension a tensor product may produce.
inline constexpr Index kMaxDimension = Index{1} << 20;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch or a dimension beyond the configured limit.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Eigen-decomposition failure or non-finite numbers.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A state that violates normalization or positivity.
class StateError : public Error {
 public:
  using Error::Error;
};

void require_finite(const ComplexMatrix& m, std::string_view what);
void require_same_dim(Index a, Index b, std::string_view what);

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are eigenvectors
};

/// A dense Hermitian matrix with a lazily computed, shared eigen-decomposition.
///
/// Copies share the decomposition cache. The cache is filled at most once and
/// readers either trigger the fill or see the completed result.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix matrix);

  Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const EigenDecomposition& eigen() const;

  /// Largest |eigenvalue|.
  double operator_norm() const;

 private:
  struct Cache {
    std::once_flag once;
    EigenDecomposition data;
  };

  ComplexMatrix matrix_;
  std::shared_ptr<Cache> cache_;
};

/// f(H) = V diag(f(lambda)) V^dagger.
ComplexMatrix hermitian_matfunc(const HermitianOperator& h,
                                const std::function<Complex(double)>& f);

/// Kronecker product A (x) B.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             Index dim_limit = kMaxDimension);

/// Largest singular value of A.
double operator_norm(const ComplexMatrix& a);

/// System state, pure or mixed.
class QuantumState {
 public:
  struct Pure {
    ComplexVector amplitudes;
  };
  struct Mixed {
    ComplexMatrix density;
  };

  // Unchecked constructors. Use validate_and_normalize (or the factories
  // below) to obtain a state whose invariants are guaranteed.
  explicit QuantumState(Pure p) : form_(std::move(p)) {}
  explicit QuantumState(Mixed m) : form_(std::move(m)) {}

  static QuantumState from_amplitudes(ComplexVector amplitudes, double tol = kNormTol);
  static QuantumState from_density(ComplexMatrix density, double tol = kNormTol);
  static QuantumState basis(Index dim, Index index);

  Index dim() const;
  bool is_pure() const { return std::holds_alternative<Pure>(form_); }
  const ComplexVector& amplitudes() const;
  const ComplexMatrix& density_matrix() const;
  /// rho for mixed states, |psi><psi| for pure ones.
  ComplexMatrix as_density() const;

  /// Populations <v_j| rho |v_j> for the columns of `basis`.
  RealVector populations(const ComplexMatrix& basis) const;

  /// Applies K: psi -> K psi or rho -> K rho K^dagger, without normalizing.
  QuantumState transformed(const ComplexMatrix& k) const;

  /// Squared norm for pure states, trace for mixed ones.
  double weight() const;

  const std::variant<Pure, Mixed>& form() const { return form_; }

 private:
  std::variant<Pure, Mixed> form_;
};

/// <psi|H|psi> or Tr(rho H). Throws NumericalError if the imaginary residue
/// exceeds 1e-9.
double expectation(const QuantumState& state, const HermitianOperator& h);
double expectation(const QuantumState& state, const ComplexMatrix& h);

/// Checks normalization (and Hermiticity/positivity for mixed states) within
/// `tol` and returns an exactly normalized copy.
QuantumState validate_and_normalize(const QuantumState& state, double tol = kNormTol);

/// |<phi|psi>|^2 generalized to <phi|rho|phi>.
double fidelity_with(const QuantumState& state, const ComplexVector& target);

}  // namespace peigen
