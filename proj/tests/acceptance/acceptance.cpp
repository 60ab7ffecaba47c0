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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "peigen/cli/commands.hpp"
#include "peigen/cli/config.hpp"
#include "peigen/cli/verify_suite.hpp"
#include "peigen/eigensolver.hpp"
#include "peigen/random_instances.hpp"

using namespace peigen;
namespace fs = std::filesystem;

namespace {

const std::string kSource = PEIGEN_SOURCE_DIR;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Loaded {
  cli::ExperimentConfig cfg;
  SumHamiltonian h;
  QuantumState initial;
};

Loaded load(const std::string& name) {
  cli::ExperimentConfig cfg = cli::load_config(kSource + "/configs/" + name + ".json");
  SumHamiltonian h = build_model(cfg.model);
  QuantumState initial = cli::build_initial_state(cfg, h);
  return {std::move(cfg), std::move(h), std::move(initial)};
}

CoolingTrace run(const Loaded& l) {
  return prepare_eigenstate(l.cfg.target_level, l.initial, l.h, l.cfg.run);
}

int total_trials(const CoolingTrace& t) {
  int n = 0;
  for (const auto& s : t.stages) n += static_cast<int>(s.trials.size());
  return n;
}

int cool_stages(const CoolingTrace& t) {
  int n = 0;
  for (const auto& s : t.stages) n += s.kind == StageKind::Cool ? 1 : 0;
  return n;
}

bool monotone_success(const CoolingTrace& t) {
  for (std::size_t i = 1; i < t.stages.size(); ++i) {
    if (t.stages[i].p_success > t.stages[i - 1].p_success + 1e-15) return false;
  }
  return true;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Rabi ground energy from an independently assembled matrix at a large cutoff.
double rabi_oracle_ground(double omega0, double omega, double g, int cutoff) {
  using oracle::Matrix;
  Matrix sz = Matrix::Zero(2, 2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  Matrix a = Matrix::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Matrix id_f = Matrix::Identity(cutoff, cutoff);
  const Matrix id_q = Matrix::Identity(2, 2);
  const Matrix h = 0.5 * omega0 * oracle::kron(sz, id_f) +
                   omega * oracle::kron(id_q, a.adjoint() * a) +
                   g * oracle::kron(oracle::sigma_x(), a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  return es.eigenvalues()(0);
}

// Lowest Hubbard energy among occupation states with the same (N_up, N_dn) as
// basis state `index`, from the fermionic oracle.
double hubbard_sector_minimum(int sites, double t, double u, Eigen::Index index) {
  const int n = 2 * sites;
  const auto counts = [&](Eigen::Index s) {
    int up = 0, dn = 0;
    for (int mode = 0; mode < n; ++mode) {
      if (((s >> (n - 1 - mode)) & 1) == 0) (mode < sites ? up : dn) += 1;
    }
    return std::pair{up, dn};
  };
  const oracle::Matrix h = oracle::hubbard(sites, t, u);
  const auto want = counts(index);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index s = 0; s < h.rows(); ++s) {
    if (counts(s) == want) keep.push_back(s);
  }
  oracle::Matrix block(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) block(i, j) = h(keep[i], keep[j]);
  Eigen::SelfAdjointEigenSolver<oracle::Matrix> es(block);
  return es.eigenvalues()(0);
}

Eigen::Index basis_index(const QuantumState& s) {
  Eigen::Index idx = 0;
  s.amplitudes().cwiseAbs().maxCoeff(&idx);
  return idx;
}

// --- criteria ---------------------------------------------------------------

void harmonic_fixed(Outcome& o) {
  const Loaded l = load("harmonic_fixed");
  const auto t0 = std::chrono::steady_clock::now();
  const CoolingTrace t = run(l);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const int k = cool_stages(t);
  const double p = t.final_success_probability();
  o.detail << "stages=" << k << " energy=" << t.final_energy() << " p_success=" << p
           << " time=" << secs << "s";
  o.require(t.converged, "converged");
  o.require(std::abs(k - 18) <= 2, "18 +- 2 iterations");
  o.require(t.final_energy() <= 2e-3, "final energy <= 2e-3");
  o.require(monotone_success(t), "P_suc non-increasing");
  o.require(p >= 0.60 && p <= 0.667, "P_suc in [0.60, 0.667]");
  o.require(secs < 1.0, "runtime < 1 s");
}

void harmonic_variational(Outcome& o) {
  const Loaded l = load("harmonic_variational");
  const auto t0 = std::chrono::steady_clock::now();
  const CoolingTrace t = run(l);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const int k = cool_stages(t);
  const int trials = total_trials(t);
  const double p = t.final_success_probability();
  o.detail << "stages=" << k << " trials=" << trials << " energy=" << t.final_energy()
           << " p_success=" << p << " time=" << secs << "s";
  o.require(t.converged, "converged");
  o.require(std::abs(k - 8) <= 2, "8 +- 2 stages");
  o.require(trials >= 50 && trials <= 120, "trials in [50, 120]");
  o.require(t.final_energy() <= 2e-3, "final energy <= 2e-3");
  o.require(p >= 0.60 && p <= 0.667, "P_suc in [0.60, 0.667]");
  for (double tau : t.schedule()) o.require(tau > 0.0 && tau <= 1.0, "tau in (0, 1]");
  o.require(secs < 5.0, "runtime < 5 s");
}

void rabi_variational(Outcome& o) {
  const Loaded l = load("rabi_variational");
  const auto& spec = std::get<Rabi>(l.cfg.model);
  const double e0 = rabi_oracle_ground(spec.omega0, spec.omega, spec.g, 80);
  const auto t0 = std::chrono::steady_clock::now();
  const CoolingTrace t = run(l);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const int k = cool_stages(t);
  const double p = t.final_success_probability();
  o.detail << "stages=" << k << " energy=" << t.final_energy() << " oracle=" << e0
           << " p_success=" << p << " time=" << secs << "s";
  o.require(t.converged, "converged");
  o.require(std::abs(k - 4) <= 1, "4 +- 1 stages");
  o.require(std::abs(t.final_energy() - e0) <= 5e-3, "energy within 5e-3 of oracle");
  o.require(p >= 0.50 && p <= 0.70, "P_suc in [0.50, 0.70]");
  o.require(secs < 30.0, "runtime < 30 s");
}

void hubbard(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  {
    const Loaded l = load("hubbard2_variational");
    const auto& spec = std::get<Hubbard1D>(l.cfg.model);
    const double e_min = hubbard_sector_minimum(spec.sites, spec.t, spec.u, basis_index(l.initial));
    const CoolingTrace t = run(l);
    const int k = cool_stages(t);
    const double p = t.final_success_probability();
    o.detail << "L=2: stages=" << k << " energy=" << t.final_energy() << " oracle=" << e_min
             << " p_success=" << p << "; ";
    o.require(t.converged, "L=2 converged");
    o.require(std::abs(e_min - (1.0 - std::sqrt(5.0))) < 1e-9, "L=2 sector holds the ground state");
    o.require(std::abs(t.final_energy() - e_min) <= 1e-2, "L=2 energy within 1e-2");
    o.require(k <= 10, "L=2 <= 10 stages");
    o.require(p >= 0.08 && p <= 0.25, "L=2 P_suc in [0.08, 0.25]");
  }
  {
    const Loaded l = load("hubbard3_variational");
    const auto& spec = std::get<Hubbard1D>(l.cfg.model);
    const double e_min = hubbard_sector_minimum(spec.sites, spec.t, spec.u, basis_index(l.initial));
    const CoolingTrace t = run(l);
    const int k = cool_stages(t);
    o.detail << "L=3: stages=" << k << " energy=" << t.final_energy() << " oracle=" << e_min;
    o.require(t.converged, "L=3 converged");
    o.require(std::abs(t.final_energy() - e_min) <= 1e-2, "L=3 energy within 1e-2");
    o.require(k <= 10, "L=3 <= 10 stages");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.detail << " time=" << secs << "s";
  o.require(secs < 120.0, "runtime < 2 min");
}

void cooling_inequality(Outcome& o) {
  const cli::CheckReport r = cli::check_cooling_inequality(20260101, 1000);
  o.detail << r.summary;
  o.require(r.passed, "all instances");
}

void spectral_weight(Outcome& o) {
  std::mt19937_64 rng(777);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Index dim = 2 + static_cast<Index>(rng() % 7);
    const SumHamiltonian h0 = random_sum_hamiltonian(dim, 2, rng);
    const double gamma = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    const SumHamiltonian h = h0.with_gamma(gamma);
    const double tau = std::uniform_real_distribution<double>(0.01, 1.5)(rng);
    const QuantumState psi = random_pure_state(dim, rng);

    const CoolingStepResult r = cooling_step(psi, h, tau);

    Eigen::SelfAdjointEigenSolver<oracle::Matrix> es(h0.total().matrix());
    const oracle::Matrix& v = es.eigenvectors();
    const Eigen::VectorXcd c = v.adjoint() * psi.amplitudes();
    Eigen::VectorXcd c0(dim);
    for (Index j = 0; j < dim; ++j) c0(j) = c(j) * std::cos((es.eigenvalues()(j) + gamma) * tau);
    const double p0 = c0.squaredNorm();
    if (p0 < 1e-12) continue;
    c0 /= std::sqrt(p0);

    worst = std::max(worst, std::abs(r.p0 - p0));
    if (!r.state0) {
      o.require(false, "branch 0 present");
      continue;
    }
    const Eigen::VectorXcd got = v.adjoint() * r.state0->amplitudes();
    worst = std::max(worst, (got - c0).cwiseAbs().maxCoeff());
  }
  o.detail << "max coefficient deviation=" << worst;
  o.require(worst <= 1e-10, "coefficients within 1e-10");
}

void trotter_order(Outcome& o) {
  const cli::CheckReport r = cli::check_trotter_order();
  o.detail << r.summary;
  o.require(r.passed, "slopes and Rabi r=3 agreement");
}

void circuits(Outcome& o) {
  const cli::CheckReport a = cli::check_xxx_circuit(false);
  const cli::CheckReport b = cli::check_dipole_circuit(false);
  const cli::CheckReport a_bad = cli::check_xxx_circuit(true);
  const cli::CheckReport b_bad = cli::check_dipole_circuit(true);
  o.detail << a.summary << "; " << b.summary;
  o.require(a.passed, "xxx circuit");
  o.require(b.passed, "dipole circuit");
  o.require(!a_bad.passed, "xxx negative control fails");
  o.require(!b_bad.passed, "dipole negative control fails");
}

void excited_state(Outcome& o) {
  const Loaded l = load("harmonic_excited");
  const CoolingTrace t = run(l);
  const Spectrum spec = exact_spectrum(l.h);
  const double f = fidelity_with(*t.final_state, spec.vectors.col(1));
  const double p = t.final_success_probability();
  o.detail << "energy=" << t.final_energy() << " fidelity=" << f << " p_success=" << p;
  o.require(std::abs(t.final_energy() - 1.0) <= 1e-3, "energy 1 +- 1e-3");
  o.require(f >= 0.999, "fidelity >= 0.999");
  o.require(p <= 2.0 / 9.0 + 1e-9, "P_suc <= 2/9 + 1e-9");

  std::mt19937_64 rng(4242);
  double worst = 0.0;
  int done = 0;
  while (done < 100) {
    const Index dim = 2 + static_cast<Index>(rng() % 7);
    const SumHamiltonian h(std::vector<Term>{{"H", random_hermitian(dim, rng)}});
    const Spectrum s = exact_spectrum(h);
    const Index level = static_cast<Index>(rng() % dim);
    if (std::abs(s.values(level)) < 1e-3) continue;
    const QuantumState psi = random_pure_state(dim, rng);
    const EjectResult e = eject(psi, h, s.values(level));
    if (!e.state) continue;
    worst = std::max(worst, std::abs(s.vectors.col(level).dot(e.state->amplitudes())));
    ++done;
  }
  o.detail << " max ejected overlap=" << worst;
  o.require(worst <= 1e-12, "ejected overlap <= 1e-12");
}

void determinism(Outcome& o) {
  const fs::path dir = fs::temp_directory_path() / "peigen_acceptance_determinism";
  fs::remove_all(dir);
  std::ostringstream sink;
  bool identical = true;
  for (const std::string name : {"harmonic_variational", "rabi_fixed"}) {
    for (const char* sub : {"a", "b"}) {
      cli::CommonOptions opts;
      opts.config = kSource + "/configs/" + name + ".json";
      opts.out = (dir / name / sub).string();
      opts.seed = 2026;
      opts.format = cli::OutputFormat::Both;
      o.require(cli::cmd_run(opts, sink, sink) == cli::kExitOk, name + " run");
    }
    for (const char* file : {"trace.json", "trace.csv"}) {
      const std::string a = slurp(dir / name / "a" / file);
      const std::string b = slurp(dir / name / "b" / file);
      identical = identical && !a.empty() && a == b;
    }
  }
  fs::remove_all(dir);
  o.detail << (identical ? "trace files identical" : "trace files differ");
  o.require(identical, "byte-identical traces");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"harmonic fixed-step", harmonic_fixed},
      {"harmonic variational", harmonic_variational},
      {"rabi variational", rabi_variational},
      {"hubbard 2- and 3-site", hubbard},
      {"cooling inequality suite", cooling_inequality},
      {"spectral-weight equivalence", spectral_weight},
      {"trotter order", trotter_order},
      {"circuit identities", circuits},
      {"excited-state pipeline", excited_state},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
              << criteria[i].first << ": " << o.detail.str() << std::endl;
    failures += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
