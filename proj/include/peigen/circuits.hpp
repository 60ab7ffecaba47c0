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
#include <variant>
#include <vector>

#include "peigen/operator_core.hpp"
#include "peigen/trotter.hpp"

namespace peigen {

/// Qubit index that refers to the ancilla in gates and couplings.
inline constexpr int kAncilla = -1;

/// Register layout: system qubits (qubit 0 most significant), then an optional
/// bosonic mode, then the ancilla qubit.
struct RegisterLayout {
  int qubits = 0;
  std::optional<int> mode_cutoff;

  Index dim() const;
  void validate() const;
};

class InconclusiveError : public Error {
 public:
  using Error::Error;
};

// The four primitive system-ancilla couplings.
struct ZX {
  int qubit = 0;
};  // sz_i sx_A
struct NumberX {};  // a^dagger a sx_A
struct XXX {
  int q1 = 0;
  int q2 = 1;
};  // sx_i1 sx_i2 sx_A
struct DipoleXX {
  int qubit = 0;
};  // (a + a^dagger) sx_i sx_A
using Coupling = std::variant<ZX, NumberX, XXX, DipoleXX>;

/// Hermitian coupling operator O on the full register.
ComplexMatrix coupling_operator(const Coupling& kind, const RegisterLayout& layout);

/// exp(-i (phi/2) O) for the named coupling.
JointUnitary primitive_unitary(const Coupling& kind, double phi, const RegisterLayout& layout);

enum class Axis { X, Y, Z };

struct CNOT {
  int control = 0;
  int target = 0;
};
/// exp(-i angle sigma_axis / 2)
struct SingleQubitRotation {
  Axis axis = Axis::Z;
  double angle = 0.0;
  int qubit = 0;
};
/// exp(-i angle sx_q1 sx_q2 / 2)
struct MS {
  double angle = 0.0;
  int q1 = 0;
  int q2 = 1;
};
/// exp(-i (phi/2) (a + a^dagger) sx_A)
struct AnalogBlockUR {
  double phi = 0.0;
};
using Gate = std::variant<CNOT, SingleQubitRotation, MS, AnalogBlockUR>;

struct CircuitSpec {
  RegisterLayout layout;
  std::vector<Gate> gates;  // time order
};

ComplexMatrix gate_unitary(const Gate& gate, const RegisterLayout& layout);
/// Product of the gates, first gate acting first.
ComplexMatrix circuit_unitary(const CircuitSpec& circuit);

/// CNOT ladder onto the ancilla around an R_z, in the basis rotated by
/// R_y = exp(i pi sy / 4). Realizes exp(-i (phi/2) sx sx sx_A) on two qubits + ancilla.
CircuitSpec xxx_cnot_circuit(double phi, bool drop_cnots = false);

/// CNOT pair (in a rotated basis) around the analog block U_R(phi). Realizes
/// exp(-i (phi/2) (a + a^dagger) sx_i sx_A) on one qubit + mode + ancilla.
CircuitSpec dipole_cnot_circuit(double phi, int cutoff, bool drop_cnots = false);

/// Operator-norm distance between xxx_cnot_circuit(phi) and its target unitary.
double verify_xxx_circuit(double phi, bool drop_cnots = false);

/// Distance between dipole_cnot_circuit(phi) and its target, restricted to
/// Fock states n < cutoff/2. Throws InconclusiveError
/// when more than 1e-8 of the population of a subspace state would leave the
/// truncated Fock space.
double verify_dipole_circuit(double phi, int cutoff, bool drop_cnots = false);

}  // namespace peigen
