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

// Reference computations that share no code path with the library: a Taylor
// series exponential, a fermionic Hubbard Hamiltonian built from explicit
// ladder operators, and dense 1-D scans.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// exp(A) by scaling and squaring around a 30-term Taylor series.
inline Matrix expm(const Matrix& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const Matrix x = a / std::pow(2.0, squarings);
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = (term * x / static_cast<double>(k)).eval();
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = (sum * sum).eval();
  return sum;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

/// Annihilation operator of mode k on n modes in the occupation basis.
/// Basis index bits: mode 0 is the most significant bit and bit value 0 means
/// the mode is occupied (matching "up" = index 0 of each spin).
inline Matrix annihilate(int k, int n) {
  const int dim = 1 << n;
  Matrix c = Matrix::Zero(dim, dim);
  const auto occupied = [n](int state, int mode) { return ((state >> (n - 1 - mode)) & 1) == 0; };
  for (int s = 0; s < dim; ++s) {
    if (!occupied(s, k)) continue;
    int parity = 0;
    for (int m = 0; m < k; ++m) parity += occupied(s, m) ? 1 : 0;
    const int t = s | (1 << (n - 1 - k));  // empty the mode
    c(t, s) = (parity % 2 == 0) ? 1.0 : -1.0;
  }
  return c;
}

/// -t sum_{i,sigma} (c+_{i,sigma} c_{i+1,sigma} + h.c.) + U sum_i n_up n_dn with
/// mode(site, spin) = spin * L + site.
inline Matrix hubbard(int sites, double t, double u) {
  const int n = 2 * sites;
  const int dim = 1 << n;
  std::vector<Matrix> c;
  for (int k = 0; k < n; ++k) c.push_back(annihilate(k, n));
  Matrix h = Matrix::Zero(dim, dim);
  for (int spin = 0; spin < 2; ++spin) {
    for (int i = 0; i + 1 < sites; ++i) {
      const Matrix& a = c[spin * sites + i];
      const Matrix& b = c[spin * sites + i + 1];
      h -= t * (a.adjoint() * b + b.adjoint() * a);
    }
  }
  for (int i = 0; i < sites; ++i) {
    const Matrix nu = c[i].adjoint() * c[i];
    const Matrix nd = c[sites + i].adjoint() * c[sites + i];
    h += u * nu * nd;
  }
  return h;
}

/// Minimum of f on a uniform grid of `points` in [lo, hi], returned as (x, f(x)).
inline std::pair<double, double> dense_scan(const std::function<double(double)>& f, double lo,
                                            double hi, int points) {
  double best_x = lo;
  double best_f = f(lo);
  for (int i = 1; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    const double v = f(x);
    if (v < best_f) {
      best_f = v;
      best_x = x;
    }
  }
  return {best_x, best_f};
}

}  // namespace oracle
