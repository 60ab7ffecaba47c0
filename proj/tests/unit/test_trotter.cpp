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

#include <random>

#include "oracles.hpp"
#include "peigen/cli/verify_suite.hpp"
#include "peigen/random_instances.hpp"
#include "peigen/trotter.hpp"

using namespace peigen;

namespace {

const Complex kI(0.0, 1.0);

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(ExactW, MatchesTaylorOracleOnJointSpace) {
  const SumHamiltonian h = build_harmonic({1.0, 6}).with_gamma(2.0);
  const ComplexMatrix shifted =
      h.total().matrix() + 2.0 * ComplexMatrix::Identity(6, 6);
  const ComplexMatrix ref = oracle::expm(-kI * 0.3 * oracle::kron(shifted, oracle::sigma_x()));
  EXPECT_LT(max_abs(exact_W(h, 0.3).matrix() - ref), 1e-12);
}

TEST(ExactW, AncillaBlocksAreCosAndSin) {
  std::mt19937_64 rng(1);
  const SumHamiltonian h = random_sum_hamiltonian(4, 2, rng).with_gamma(0.3);
  const JointUnitary w = exact_W(h, 0.7);
  const double g = h.gamma();
  const ComplexMatrix c =
      hermitian_matfunc(h.total(), [&](double e) { return Complex(std::cos((e + g) * 0.7)); });
  const ComplexMatrix s =
      hermitian_matfunc(h.total(), [&](double e) { return Complex(std::sin((e + g) * 0.7)); });
  EXPECT_LT(max_abs(w.ancilla_block(0, 0) - c), 1e-12);
  EXPECT_LT(max_abs(w.ancilla_block(1, 0) + kI * s), 1e-12);
}

TEST(TrotterW, SingleTermIsExact) {
  const SumHamiltonian h = build_harmonic({1.0, 8});
  for (int r : {1, 2, 5}) {
    EXPECT_LT(max_abs(trotter_W(h, 0.9, r).matrix() - exact_W(h, 0.9, false).matrix()), 1e-12);
  }
}

TEST(TrotterW, ZeroTimeIsIdentityAndAlwaysUnitary) {
  const SumHamiltonian h = build_rabi({1.2, 0.8, 1.0, 10});
  const JointUnitary id = trotter_W(h, 0.0, 3);
  EXPECT_LT(max_abs(id.matrix() - ComplexMatrix::Identity(40, 40)), 1e-14);
  std::mt19937_64 rng(3);
  const SumHamiltonian rnd = random_sum_hamiltonian(6, 4, rng);
  const ComplexMatrix u = trotter_W(rnd, 1.3, 2).matrix();
  EXPECT_LT(max_abs(u * u.adjoint() - ComplexMatrix::Identity(12, 12)), 1e-10);
  EXPECT_THROW(trotter_W(h, 0.3, 0), Error);
}

TEST(TrotterW, MatchesExplicitJointSpaceProduct) {
  // Build the product directly from joint-space exponentials of H_m (x) sx.
  const SumHamiltonian h = build_rabi({1.2, 0.8, 1.0, 6});
  const double tau = 0.3;
  const int r = 3;
  const double dt = tau / r;
  const auto w = [&](int m, double x) {
    return oracle::expm(-kI * x * oracle::kron(h.terms()[m].op.matrix(), oracle::sigma_x()));
  };
  const ComplexMatrix step = w(0, dt / 2) * w(1, dt) * w(0, dt / 2);
  ComplexMatrix ref = ComplexMatrix::Identity(24, 24);
  for (int k = 0; k < r; ++k) ref = ref * step;
  EXPECT_LT(max_abs(trotter_W(h, tau, r).matrix() - ref), 1e-12);
}

TEST(TrotterW, SecondOrderErrorRatio) {
  const SumHamiltonian h = build_rabi({1.2, 0.8, 1.0, 20});
  const double ratio = cli::trotter_error(h, 0.3, 3) / cli::trotter_error(h, 0.3, 6);
  EXPECT_GE(ratio, 3.4);
  EXPECT_LE(ratio, 4.6);
}

TEST(WGamma, DecompositionRecomposes) {
  const SumHamiltonian h = build_harmonic({1.0, 6}).with_gamma(2.0);
  const WGammaParts parts = wgamma_decompose(h, 0.3);
  EXPECT_NEAR(parts.ancilla_rotation_angle, 1.2, 1e-15);
  EXPECT_LT(max_abs(parts.compose().matrix() - exact_W(h, 0.3).matrix()), 1e-10);

  const WGammaParts zero = wgamma_decompose(h.with_gamma(0.0), 0.3);
  EXPECT_EQ(zero.ancilla_rotation_angle, 0.0);
}

TEST(WGamma, WCommutesWithAncillaRotation) {
  std::mt19937_64 rng(6);
  const SumHamiltonian h = random_sum_hamiltonian(3, 2, rng);
  const ComplexMatrix w = trotter_W(h, 0.8, 2).matrix();
  for (double theta : {0.1, 1.0, 2.5}) {
    const ComplexMatrix rx = ancilla_rx(3, theta).matrix();
    EXPECT_LT(max_abs(w * rx - rx * w), 1e-12);
  }
}

TEST(JointUnitary, RejectsNonUnitary) {
  EXPECT_THROW(JointUnitary::from_matrix(2.0 * ComplexMatrix::Identity(4, 4)), NumericalError);
  EXPECT_THROW(JointUnitary::from_matrix(ComplexMatrix::Identity(3, 3)), DimensionError);
}

TEST(TrotterOrder, SlopesForMultiTermModels) {
  const std::vector<double> rs{1, 2, 4, 8};
  for (const ModelSpec& spec : {ModelSpec{Rabi{}}, ModelSpec{Hubbard1D{2, 1.0, 2.0}}}) {
    const SumHamiltonian h = build_model(spec);
    std::vector<double> errs;
    for (double r : rs) errs.push_back(cli::trotter_error(h, 0.3, static_cast<int>(r)));
    const double slope = cli::loglog_slope(rs, errs);
    EXPECT_GE(slope, -2.2);
    EXPECT_LE(slope, -1.8);
  }
}
