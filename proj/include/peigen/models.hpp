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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "peigen/operator_core.hpp"

namespace peigen {

struct HarmonicOscillator {
  double omega = 1.0;
  int cutoff = 30;
};

/// H1 = (omega0/2) sz + omega a^dagger a,  H2 = g (a + a^dagger) sx on qubit (x) Fock.
struct Rabi {
  double omega0 = 1.2;
  double omega = 0.8;
  double g = 1.0;
  int cutoff = 20;
};

/// Open-chain Fermi-Hubbard model, Jordan-Wigner mapped to 2L spins.
struct Hubbard1D {
  int sites = 2;
  double t = 1.0;
  double u = 2.0;
};

struct Term {
  std::string label;
  HermitianOperator op;
};

struct CustomModel {
  std::vector<Term> terms;
};

using ModelSpec = std::variant<HarmonicOscillator, Rabi, Hubbard1D, CustomModel>;

/// Invalid model parameters (cutoff < 2, L < 1, non-finite couplings, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

void validate_model(const ModelSpec& spec);

/// An ordered sum of non-commuting terms plus a spectral shift gamma.
class SumHamiltonian {
 public:
  explicit SumHamiltonian(std::vector<Term> terms, double gamma = 0.0);

  const std::vector<Term>& terms() const { return terms_; }
  double gamma() const { return gamma_; }
  Index dim() const { return total_.dim(); }
  /// Sum of the terms, without gamma.
  const HermitianOperator& total() const { return total_; }

  SumHamiltonian with_gamma(double gamma) const;

 private:
  std::vector<Term> terms_;
  double gamma_;
  HermitianOperator total_;
};

SumHamiltonian build_harmonic(const HarmonicOscillator& spec);
SumHamiltonian build_rabi(const Rabi& spec);
SumHamiltonian build_hubbard_jw(const Hubbard1D& spec);
SumHamiltonian build_model(const ModelSpec& spec);

/// Thermal Fock-state mixture with mean occupation `nbar`, truncated at the cutoff.
/// nbar == 0 yields the pure vacuum.
QuantumState thermal_state(const HarmonicOscillator& spec, double nbar);

// Spin/mode conventions shared by the Hubbard and Rabi builders: a spin's basis
// index 0 is "up" (sigma^z = +1, occupied mode), index 1 is "down".

enum class Spin { Up = 0, Down = 1 };

/// Jordan-Wigner mode (= spin-chain position) for (site, spin). Spin-major:
/// all up modes by site, then all down modes.
int hubbard_mode(const Hubbard1D& spec, int site, Spin spin);

/// Tensor product of single-qubit Paulis, e.g. "XZIY" (qubit 0 leftmost).
ComplexMatrix pauli_string(std::string_view ops);

/// n_{site,spin} = (1 + sz)/2 on the corresponding spin.
ComplexMatrix hubbard_number_operator(const Hubbard1D& spec, int site, Spin spin);
ComplexMatrix hubbard_total_number(const Hubbard1D& spec);

/// Basis state from a text label:
///  - harmonic: Fock index, e.g. "0"
///  - rabi: "<u|d>,<n>", e.g. "d,0"
///  - hubbard: one u/d character per spin in mode order, e.g. "udud"
QuantumState basis_state_from_label(const ModelSpec& spec, std::string_view label);

/// Short description of the symmetry sector of `state`, if the model has one.
std::optional<std::string> sector_info(const ModelSpec& spec, const QuantumState& state);

struct Spectrum {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns
};

/// Full spectrum of the sum of terms (gamma excluded).
Spectrum exact_spectrum(const SumHamiltonian& h);

struct GammaExact {};
struct GammaNormBound {};
struct GammaFixed {
  double value = 0.0;
};
struct GammaTargetLevel {
  int level = 0;
};
using GammaPolicy = std::variant<GammaExact, GammaNormBound, GammaFixed, GammaTargetLevel>;

struct GammaChoice {
  double value = 0.0;
  std::optional<std::string> warning;
};

/// Exact: -E0. NormBound: sum of term 2-norms. Fixed: as given. TargetLevel(j): -E_j.
/// Carries a warning when E0 + gamma < 0.
GammaChoice gamma_for(const SumHamiltonian& h, const GammaPolicy& policy);

std::string describe(const GammaPolicy& policy);

}  // namespace peigen
