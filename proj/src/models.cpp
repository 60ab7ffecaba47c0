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

#include "peigen/models.hpp"

#include "peigen/detail/overloaded.hpp"

#include <cmath>
#include <sstream>

namespace peigen {

using detail::overloaded;

namespace {

// Hubbard models beyond 12 spins are too large for the dense path.
constexpr int kMaxHubbardSpins = 12;

void require_finite_param(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw ModelError(std::string("model parameter '") + name + "' must be finite");
  }
}

void require_cutoff(int cutoff) {
  if (cutoff < 2) {
    throw ModelError("Fock cutoff must be >= 2 (got " + std::to_string(cutoff) + ")");
  }
}

ComplexMatrix pauli(char c) {
  ComplexMatrix m(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw ModelError(std::string("unknown Pauli '") + c + "'");
  }
  return m;
}

ComplexMatrix number_diag(int cutoff) {
  ComplexMatrix n = ComplexMatrix::Zero(cutoff, cutoff);
  for (int k = 0; k < cutoff; ++k) n(k, k) = k;
  return n;
}

ComplexMatrix annihilation(int cutoff) {
  ComplexMatrix a = ComplexMatrix::Zero(cutoff, cutoff);
  for (int k = 1; k < cutoff; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

std::string spin_ops(int n, std::initializer_list<std::pair<int, char>> ops) {
  std::string s(static_cast<std::size_t>(n), 'I');
  for (auto [pos, c] : ops) s[static_cast<std::size_t>(pos)] = c;
  return s;
}

}  // namespace

void validate_model(const ModelSpec& spec) {
  std::visit(overloaded{
                 [](const HarmonicOscillator& s) {
                   require_finite_param(s.omega, "omega");
                   require_cutoff(s.cutoff);
                 },
                 [](const Rabi& s) {
                   require_finite_param(s.omega0, "omega0");
                   require_finite_param(s.omega, "omega");
                   require_finite_param(s.g, "g");
                   require_cutoff(s.cutoff);
                 },
                 [](const Hubbard1D& s) {
                   require_finite_param(s.t, "t");
                   require_finite_param(s.u, "u");
                   if (s.sites < 1) throw ModelError("Hubbard model needs at least one site");
                   if (2 * s.sites > kMaxHubbardSpins) {
                     throw DimensionError("Hubbard model with " + std::to_string(s.sites) +
                                          " sites exceeds the dense limit of " +
                                          std::to_string(kMaxHubbardSpins) + " spins");
                   }
                 },
                 [](const CustomModel& s) {
                   if (s.terms.empty()) throw ModelError("custom model has no terms");
                 },
             },
             spec);
}

SumHamiltonian::SumHamiltonian(std::vector<Term> terms, double gamma)
    : terms_(std::move(terms)), gamma_(gamma), total_([this] {
        if (terms_.empty()) throw ModelError("SumHamiltonian needs at least one term");
        ComplexMatrix sum = terms_.front().op.matrix();
        for (std::size_t m = 1; m < terms_.size(); ++m) {
          require_same_dim(terms_[m].op.dim(), sum.rows(), "SumHamiltonian term");
          sum += terms_[m].op.matrix();
        }
        return HermitianOperator(std::move(sum));
      }()) {
  if (!std::isfinite(gamma_)) throw ModelError("gamma must be finite");
}

SumHamiltonian SumHamiltonian::with_gamma(double gamma) const {
  SumHamiltonian copy = *this;
  if (!std::isfinite(gamma)) throw ModelError("gamma must be finite");
  copy.gamma_ = gamma;
  return copy;
}

SumHamiltonian build_harmonic(const HarmonicOscillator& spec) {
  validate_model(spec);
  std::vector<Term> terms;
  terms.push_back({"omega*n", HermitianOperator(spec.omega * number_diag(spec.cutoff))});
  return SumHamiltonian(std::move(terms), 0.0);
}

SumHamiltonian build_rabi(const Rabi& spec) {
  validate_model(spec);
  const ComplexMatrix id_f = ComplexMatrix::Identity(spec.cutoff, spec.cutoff);
  const ComplexMatrix a = annihilation(spec.cutoff);
  const ComplexMatrix x = a + a.adjoint();
  ComplexMatrix h1 = tensor_product(0.5 * spec.omega0 * pauli('Z'), id_f) +
                     tensor_product(pauli('I'), spec.omega * number_diag(spec.cutoff));
  ComplexMatrix h2 = tensor_product(spec.g * pauli('X'), x);
  std::vector<Term> terms;
  terms.push_back({"H1: omega0/2 sz + omega n", HermitianOperator(std::move(h1))});
  terms.push_back({"H2: g (a + a^dagger) sx", HermitianOperator(std::move(h2))});
  return SumHamiltonian(std::move(terms), 0.0);
}

int hubbard_mode(const Hubbard1D& spec, int site, Spin spin) {
  if (site < 0 || site >= spec.sites) throw ModelError("Hubbard site index out of range");
  return static_cast<int>(spin) * spec.sites + site;
}

ComplexMatrix pauli_string(std::string_view ops) {
  if (ops.empty()) throw ModelError("empty Pauli string");
  ComplexMatrix out = pauli(ops.front());
  for (std::size_t k = 1; k < ops.size(); ++k) out = tensor_product(out, pauli(ops[k]));
  return out;
}

SumHamiltonian build_hubbard_jw(const Hubbard1D& spec) {
  validate_model(spec);
  const int n = 2 * spec.sites;
  std::vector<Term> terms;

  // With spin-major ordering, same-species neighbours are adjacent spins and
  // the Jordan-Wigner strings cancel:
  //   c+_a c_{a+1} + h.c. = (X_a X_{a+1} + Y_a Y_{a+1}) / 2.
  for (int i = 0; i + 1 < spec.sites; ++i) {
    for (Spin s : {Spin::Up, Spin::Down}) {
      const int a = hubbard_mode(spec, i, s);
      const char* tag = s == Spin::Up ? "up" : "dn";
      for (char p : {'X', 'Y'}) {
        std::ostringstream label;
        label << "hop " << i << "-" << i + 1 << " " << tag << " " << p << p;
        ComplexMatrix m = -0.5 * spec.t * pauli_string(spin_ops(n, {{a, p}, {a + 1, p}}));
        terms.push_back({label.str(), HermitianOperator(std::move(m))});
      }
    }
  }

  // U n_up n_dn = U/4 (1 + Z_up + Z_dn + Z_up Z_dn).
  for (int i = 0; i < spec.sites; ++i) {
    const int up = hubbard_mode(spec, i, Spin::Up);
    const int dn = hubbard_mode(spec, i, Spin::Down);
    const double c = 0.25 * spec.u;
    const std::string site = std::to_string(i);
    terms.push_back({"U " + site + " ZZ", HermitianOperator(c * pauli_string(spin_ops(n, {{up, 'Z'}, {dn, 'Z'}})))});
    terms.push_back({"U " + site + " Z up", HermitianOperator(c * pauli_string(spin_ops(n, {{up, 'Z'}})))});
    terms.push_back({"U " + site + " Z dn", HermitianOperator(c * pauli_string(spin_ops(n, {{dn, 'Z'}})))});
    terms.push_back({"U " + site + " I", HermitianOperator(c * pauli_string(spin_ops(n, {})))});
  }
  return SumHamiltonian(std::move(terms), 0.0);
}

SumHamiltonian build_model(const ModelSpec& spec) {
  return std::visit(overloaded{
                        [](const HarmonicOscillator& s) { return build_harmonic(s); },
                        [](const Rabi& s) { return build_rabi(s); },
                        [](const Hubbard1D& s) { return build_hubbard_jw(s); },
                        [](const CustomModel& s) {
                          validate_model(s);
                          return SumHamiltonian(s.terms, 0.0);
                        },
                    },
                    spec);
}

QuantumState thermal_state(const HarmonicOscillator& spec, double nbar) {
  validate_model(spec);
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw ModelError("thermal_state: nbar must be a finite value >= 0");
  }
  if (nbar == 0.0) return QuantumState::basis(spec.cutoff, 0);

  const double ratio = nbar / (1.0 + nbar);
  // Weight of the untruncated geometric distribution above the cutoff.
  const double tail = std::pow(ratio, spec.cutoff);
  if (tail > 1e-6) {
    std::ostringstream os;
    os << "thermal_state: cutoff " << spec.cutoff << " drops weight " << tail
       << " > 1e-6 for nbar = " << nbar;
    throw ModelError(os.str());
  }
  ComplexMatrix rho = ComplexMatrix::Zero(spec.cutoff, spec.cutoff);
  double total = 0.0;
  for (int k = 0; k < spec.cutoff; ++k) {
    const double p = std::pow(ratio, k);
    rho(k, k) = p;
    total += p;
  }
  return QuantumState::from_density(rho / total);
}

ComplexMatrix hubbard_number_operator(const Hubbard1D& spec, int site, Spin spin) {
  validate_model(spec);
  const int n = 2 * spec.sites;
  const int mode = hubbard_mode(spec, site, spin);
  return 0.5 * (pauli_string(spin_ops(n, {})) + pauli_string(spin_ops(n, {{mode, 'Z'}})));
}

ComplexMatrix hubbard_total_number(const Hubbard1D& spec) {
  const Index dim = Index{1} << (2 * spec.sites);
  ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < spec.sites; ++i) {
    total += hubbard_number_operator(spec, i, Spin::Up);
    total += hubbard_number_operator(spec, i, Spin::Down);
  }
  return total;
}

QuantumState basis_state_from_label(const ModelSpec& spec, std::string_view label) {
  validate_model(spec);
  auto bad = [&](const std::string& why) {
    return ModelError("basis label '" + std::string(label) + "': " + why);
  };
  auto parse_index = [&](std::string_view s) {
    if (s.empty()) throw bad("missing index");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw bad("index must be a non-negative integer");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  auto spin_index = [&](char c) -> int {
    if (c == 'u') return 0;
    if (c == 'd') return 1;
    throw bad("spin must be 'u' or 'd'");
  };

  return std::visit(
      overloaded{
          [&](const HarmonicOscillator& s) {
            const int k = parse_index(label);
            if (k >= s.cutoff) throw bad("Fock index beyond cutoff");
            return QuantumState::basis(s.cutoff, k);
          },
          [&](const Rabi& s) {
            const auto comma = label.find(',');
            if (comma != 1) throw bad("expected '<u|d>,<n>'");
            const int spin = spin_index(label[0]);
            const int k = parse_index(label.substr(2));
            if (k >= s.cutoff) throw bad("Fock index beyond cutoff");
            return QuantumState::basis(2 * s.cutoff, Index{spin} * s.cutoff + k);
          },
          [&](const Hubbard1D& s) {
            if (label.size() != static_cast<std::size_t>(2 * s.sites)) {
              throw bad("expected " + std::to_string(2 * s.sites) + " spin characters");
            }
            Index index = 0;
            for (char c : label) index = 2 * index + spin_index(c);
            return QuantumState::basis(Index{1} << (2 * s.sites), index);
          },
          [&](const CustomModel& s) {
            const int k = parse_index(label);
            const Index dim = s.terms.front().op.dim();
            if (k >= dim) throw bad("index beyond dimension");
            return QuantumState::basis(dim, k);
          },
      },
      spec);
}

std::optional<std::string> sector_info(const ModelSpec& spec, const QuantumState& state) {
  const auto* hub = std::get_if<Hubbard1D>(&spec);
  if (hub == nullptr) return std::nullopt;
  double n_up = 0.0;
  double n_dn = 0.0;
  for (int i = 0; i < hub->sites; ++i) {
    n_up += expectation(state, hubbard_number_operator(*hub, i, Spin::Up));
    n_dn += expectation(state, hubbard_number_operator(*hub, i, Spin::Down));
  }
  std::ostringstream os;
  os << "N_up=" << n_up << " N_down=" << n_dn << " (spin-major Jordan-Wigner ordering)";
  return os.str();
}

Spectrum exact_spectrum(const SumHamiltonian& h) {
  const auto& e = h.total().eigen();
  return Spectrum{e.values, e.vectors};
}

GammaChoice gamma_for(const SumHamiltonian& h, const GammaPolicy& policy) {
  const auto& values = h.total().eigen().values;
  GammaChoice choice;
  choice.value = std::visit(
      overloaded{
          [&](const GammaExact&) { return -values(0); },
          [&](const GammaNormBound&) {
            double sum = 0.0;
            for (const auto& term : h.terms()) sum += term.op.operator_norm();
            return sum;
          },
          [&](const GammaFixed& f) { return f.value; },
          [&](const GammaTargetLevel& t) {
            if (t.level < 0 || t.level >= values.size()) {
              throw ModelError("gamma target level " + std::to_string(t.level) + " out of range");
            }
            return -values(t.level);
          },
      },
      policy);
  // Rounding in -E0 + E0 can land a hair below zero.
  if (values(0) + choice.value < -1e-9) {
    std::ostringstream os;
    os << "E0 + gamma = " << values(0) + choice.value
       << " < 0: the monotone cooling guarantee does not apply";
    choice.warning = os.str();
  }
  return choice;
}

std::string describe(const GammaPolicy& policy) {
  return std::visit(overloaded{
                        [](const GammaExact&) { return std::string("exact"); },
                        [](const GammaNormBound&) { return std::string("norm_bound"); },
                        [](const GammaFixed& f) {
                          std::ostringstream os;
                          os << "fixed(" << f.value << ")";
                          return os.str();
                        },
                        [](const GammaTargetLevel& t) {
                          return "target_level(" + std::to_string(t.level) + ")";
                        },
                    },
                    policy);
}

}  // namespace peigen
