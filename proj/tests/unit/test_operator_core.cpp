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

#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "peigen/operator_core.hpp"
#include "peigen/random_instances.hpp"

using namespace peigen;

namespace {

const Complex kI(0.0, 1.0);

ComplexMatrix diag(std::initializer_list<double> d) {
  ComplexMatrix m = ComplexMatrix::Zero(d.size(), d.size());
  Index i = 0;
  for (double v : d) m(i, i) = v, ++i;
  return m;
}

}  // namespace

TEST(HermitianOperator, RejectsNonHermitian) {
  ComplexMatrix m(2, 2);
  m << 0, 1, 0, 0;
  EXPECT_THROW(HermitianOperator{m}, NumericalError);
}

TEST(HermitianOperator, RejectsNonSquareAndNonFinite) {
  EXPECT_THROW(HermitianOperator{ComplexMatrix::Zero(2, 3)}, DimensionError);
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(HermitianOperator{m}, Error);
}

TEST(HermitianOperator, AcceptsRoundoffAsymmetry) {
  ComplexMatrix m(2, 2);
  m << 1, Complex(0.5, 1e-14), Complex(0.5, 0), 2;
  EXPECT_NO_THROW(HermitianOperator{m});
}

TEST(HermitianOperator, EigenvaluesAscendingAndTraceIdentity) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 20; ++n) {
    const HermitianOperator h = random_hermitian(2 + n % 7, rng);
    const auto& e = h.eigen();
    for (Index i = 1; i < e.values.size(); ++i) EXPECT_LE(e.values(i - 1), e.values(i));
    EXPECT_NEAR(e.values.sum(), h.matrix().trace().real(), 1e-9);
  }
}

TEST(HermitianOperator, OperatorNormIsLargestMagnitudeEigenvalue) {
  EXPECT_NEAR(HermitianOperator(diag({-3, 1, 2})).operator_norm(), 3.0, 1e-14);
  EXPECT_NEAR(operator_norm(diag({-3, 1, 2})), 3.0, 1e-12);
}

TEST(HermitianOperator, ConcurrentEigenCallsShareOneDecomposition) {
  std::mt19937_64 rng(5);
  const HermitianOperator h = random_hermitian(40, rng);
  std::vector<const EigenDecomposition*> seen(8);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 8; ++t) pool.emplace_back([&, t] { seen[t] = &h.eigen(); });
  }
  for (const auto* p : seen) EXPECT_EQ(p, seen.front());
}

TEST(MatFunc, PropagatorMatchesTaylorOracle) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 10; ++n) {
    const HermitianOperator h = random_hermitian(5, rng);
    const double t = 0.37 * (n + 1);
    const ComplexMatrix ours =
        hermitian_matfunc(h, [t](double e) { return std::exp(-kI * e * t); });
    const ComplexMatrix ref = oracle::expm(-kI * t * h.matrix());
    EXPECT_LT((ours - ref).cwiseAbs().maxCoeff(), 1e-11);
  }
}

TEST(MatFunc, CosSquaredPlusSinSquaredIsIdentity) {
  std::mt19937_64 rng(4);
  const HermitianOperator h = random_hermitian(6, rng);
  const ComplexMatrix c = hermitian_matfunc(h, [](double e) { return Complex(std::cos(0.8 * e)); });
  const ComplexMatrix s = hermitian_matfunc(h, [](double e) { return Complex(std::sin(0.8 * e)); });
  EXPECT_LT((c * c + s * s - ComplexMatrix::Identity(6, 6)).norm(), 1e-12);
}

TEST(TensorProduct, DimensionsAndLimit) {
  const ComplexMatrix a = ComplexMatrix::Identity(3, 3);
  const ComplexMatrix b = ComplexMatrix::Identity(4, 4);
  EXPECT_EQ(tensor_product(a, b).rows(), 12);
  EXPECT_TRUE(tensor_product(a, b).isApprox(oracle::kron(a, b)));
  EXPECT_THROW(tensor_product(a, b, 10), DimensionError);
}

TEST(QuantumState, FactoriesValidate) {
  ComplexVector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(QuantumState::from_amplitudes(v), StateError);
  ComplexMatrix rho(2, 2);
  rho << 1.2, 0, 0, -0.2;  // trace 1, not positive
  EXPECT_THROW(QuantumState::from_density(rho), StateError);
  EXPECT_THROW(QuantumState::basis(3, 3), DimensionError);
}

TEST(QuantumState, PureAndMixedAgree) {
  std::mt19937_64 rng(7);
  const QuantumState psi = random_pure_state(6, rng);
  const QuantumState rho = QuantumState::from_density(psi.as_density());
  const HermitianOperator h = random_hermitian(6, rng);
  EXPECT_NEAR(expectation(psi, h), expectation(rho, h), 1e-12);
  const auto& basis = h.eigen().vectors;
  EXPECT_LT((psi.populations(basis) - rho.populations(basis)).norm(), 1e-12);
  EXPECT_NEAR(fidelity_with(psi, psi.amplitudes()), 1.0, 1e-12);
  EXPECT_NEAR(fidelity_with(rho, psi.amplitudes()), 1.0, 1e-12);
}

TEST(QuantumState, TransformedIsUnnormalized) {
  ComplexVector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const QuantumState s = QuantumState::from_amplitudes(v);
  EXPECT_NEAR(s.transformed(diag({1, 0})).weight(), 0.5, 1e-15);
}

TEST(Expectation, NonHermitianObservableThrows) {
  ComplexMatrix m(2, 2);
  m << 0, kI, kI, 0;  // anti-Hermitian off-diagonal
  ComplexVector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  EXPECT_THROW(expectation(QuantumState::from_amplitudes(v), m), NumericalError);
}

TEST(ValidateAndNormalize, RenormalizesWithinTolerance) {
  ComplexVector v(2);
  v << 1.0 + 1e-12, 0.0;
  const QuantumState s = validate_and_normalize(QuantumState(QuantumState::Pure{v}));
  EXPECT_NEAR(s.weight(), 1.0, 1e-15);
  EXPECT_THROW(validate_and_normalize(QuantumState(QuantumState::Pure{2.0 * v})), StateError);
}
