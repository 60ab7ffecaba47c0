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

#include "peigen/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace peigen {

void OptimizerConfig::validate() const {
  std::ostringstream os;
  if (!(tau_lo > 0.0) || !std::isfinite(tau_lo)) {
    os << "optimizer.tau_lo must be > 0 (got " << tau_lo << ")";
  } else if (!(tau_hi > tau_lo) || !std::isfinite(tau_hi)) {
    os << "optimizer.tau_hi must exceed tau_lo (got " << tau_hi << ")";
  } else if (!(x_tol > 0.0)) {
    os << "optimizer.x_tol must be > 0 (got " << x_tol << ")";
  } else if (max_evals < 3) {
    os << "optimizer.max_evals must be >= 3 (got " << max_evals << ")";
  } else if (coarse_grid < 0 || coarse_grid >= max_evals) {
    os << "optimizer.coarse_grid must be in [0, max_evals) (got " << coarse_grid << ")";
  } else {
    return;
  }
  throw Error(os.str());
}

namespace {

class TrialLog {
 public:
  TrialLog(const std::function<ObjectiveValue(double)>& f, int budget)
      : f_(f), budget_(budget) {}

  double operator()(double tau) {
    const ObjectiveValue v = f_(tau);
    trials_.push_back({static_cast<int>(trials_.size()), tau, v.energy, v.p0});
    return v.energy;
  }

  int used() const { return static_cast<int>(trials_.size()); }
  int remaining() const { return budget_ - used(); }
  const std::vector<TrialRecord>& trials() const { return trials_; }
  std::vector<TrialRecord> take() { return std::move(trials_); }

 private:
  const std::function<ObjectiveValue(double)>& f_;
  int budget_;
  std::vector<TrialRecord> trials_;
};

// Brent's method restricted to [a, b], following the classic FMIN routine.
// Returns true when the tolerance was met before the budget ran out.
bool brent_bounded(TrialLog& log, double a, double b, double x_tol) {
  const double sqrt_eps = std::sqrt(2.2e-16);
  const double golden_mean = 0.5 * (3.0 - std::sqrt(5.0));

  double fulc = a + golden_mean * (b - a);
  double nfc = fulc;
  double xf = fulc;
  double rat = 0.0;
  double e = 0.0;
  double fx = log(xf);
  double ffulc = fx;
  double fnfc = fx;
  double xm = 0.5 * (a + b);
  double tol1 = sqrt_eps * std::abs(xf) + x_tol / 3.0;
  double tol2 = 2.0 * tol1;

  while (std::abs(xf - xm) > (tol2 - 0.5 * (b - a))) {
    if (log.remaining() <= 0) return false;
    bool golden = true;
    if (std::abs(e) > tol1) {
      golden = false;
      double r = (xf - nfc) * (fx - ffulc);
      double q = (xf - fulc) * (fx - fnfc);
      double p = (xf - fulc) * q - (xf - nfc) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      r = e;
      e = rat;
      if (std::abs(p) < std::abs(0.5 * q * r) && p > q * (a - xf) && p < q * (b - xf)) {
        rat = p / q;
        const double x = xf + rat;
        if ((x - a) < tol2 || (b - x) < tol2) {
          rat = xm >= xf ? tol1 : -tol1;
        }
      } else {
        golden = true;
      }
    }
    if (golden) {
      e = xf >= xm ? a - xf : b - xf;
      rat = golden_mean * e;
    }
    const double step = std::max(std::abs(rat), tol1);
    const double x = rat >= 0.0 ? xf + step : xf - step;
    const double fu = log(x);

    if (fu <= fx) {
      if (x >= xf) {
        a = xf;
      } else {
        b = xf;
      }
      fulc = nfc;
      ffulc = fnfc;
      nfc = xf;
      fnfc = fx;
      xf = x;
      fx = fu;
    } else {
      if (x < xf) {
        a = x;
      } else {
        b = x;
      }
      if (fu <= fnfc || nfc == xf) {
        fulc = nfc;
        ffulc = fnfc;
        nfc = x;
        fnfc = fu;
      } else if (fu <= ffulc || fulc == xf || fulc == nfc) {
        fulc = x;
        ffulc = fu;
      }
    }
    xm = 0.5 * (a + b);
    tol1 = sqrt_eps * std::abs(xf) + x_tol / 3.0;
    tol2 = 2.0 * tol1;
  }
  return true;
}

}  // namespace

ScalarMinimum minimize_bounded(const std::function<ObjectiveValue(double)>& objective,
                               const OptimizerConfig& config) {
  config.validate();
  TrialLog log(objective, config.max_evals);

  double lo = config.tau_lo;
  double hi = config.tau_hi;
  if (config.coarse_grid >= 3) {
    const int n = config.coarse_grid;
    const double h = (hi - lo) / (n - 1);
    int best = 0;
    double best_f = 0.0;
    for (int i = 0; i < n; ++i) {
      const double f = log(lo + i * h);
      if (i == 0 || f < best_f) {
        best = i;
        best_f = f;
      }
    }
    const double center = lo + best * h;
    lo = std::max(config.tau_lo, center - h);
    hi = std::min(config.tau_hi, center + h);
  }

  const bool met = brent_bounded(log, lo, hi, config.x_tol);

  ScalarMinimum out;
  out.trials = log.take();
  const TrialRecord* best = &out.trials.front();
  for (const auto& t : out.trials) {
    if (t.energy < best->energy || (t.energy == best->energy && t.tau < best->tau)) best = &t;
  }
  out.tau = best->tau;
  out.energy = best->energy;
  out.p0 = best->p0;
  out.budget_exhausted = !met;
  return out;
}

}  // namespace peigen
