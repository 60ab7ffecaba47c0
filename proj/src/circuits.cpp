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

#include "peigen/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "peigen/detail/overloaded.hpp"

namespace peigen {

using detail::overloaded;

namespace {

const Complex kI(0.0, 1.0);

ComplexMatrix pauli_matrix(Axis axis) {
  ComplexMatrix m(2, 2);
  switch (axis) {
    case Axis::X: m << 0, 1, 1, 0; break;
    case Axis::Y: m << 0, -kI, kI, 0; break;
    case Axis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

ComplexMatrix id(Index n) { return ComplexMatrix::Identity(n, n); }

// Register factors in order: qubit 0..n-1, [mode], ancilla.
struct Factors {
  std::vector<ComplexMatrix> ops;
  Index mode_slot = -1;
  Index ancilla_slot = 0;
};

Factors identity_factors(const RegisterLayout& layout) {
  Factors f;
  for (int q = 0; q < layout.qubits; ++q) f.ops.push_back(id(2));
  if (layout.mode_cutoff) {
    f.mode_slot = static_cast<Index>(f.ops.size());
    f.ops.push_back(id(*layout.mode_cutoff));
  }
  f.ancilla_slot = static_cast<Index>(f.ops.size());
  f.ops.push_back(id(2));
  return f;
}

Index qubit_slot(const RegisterLayout& layout, const Factors& f, int qubit) {
  if (qubit == kAncilla) return f.ancilla_slot;
  if (qubit < 0 || qubit >= layout.qubits) {
    throw DimensionError("qubit index " + std::to_string(qubit) + " outside register layout");
  }
  return qubit;
}

ComplexMatrix kron_all(const std::vector<ComplexMatrix>& ops) {
  ComplexMatrix out = ops.front();
  for (std::size_t k = 1; k < ops.size(); ++k) out = tensor_product(out, ops[k]);
  return out;
}

// Embeds single-factor operators at the given qubits (identity elsewhere).
ComplexMatrix embed(const RegisterLayout& layout,
                    std::initializer_list<std::pair<int, ComplexMatrix>> qubit_ops,
                    const ComplexMatrix* mode_op = nullptr) {
  Factors f = identity_factors(layout);
  for (const auto& [q, op] : qubit_ops) f.ops[static_cast<std::size_t>(qubit_slot(layout, f, q))] = op;
  if (mode_op != nullptr) {
    if (f.mode_slot < 0) throw DimensionError("operation needs a bosonic mode in the layout");
    f.ops[static_cast<std::size_t>(f.mode_slot)] = *mode_op;
  }
  return kron_all(f.ops);
}

ComplexMatrix position_quadrature(int cutoff) {
  ComplexMatrix a = ComplexMatrix::Zero(cutoff, cutoff);
  for (int k = 1; k < cutoff; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a + a.adjoint();
}

ComplexMatrix number_op(int cutoff) {
  ComplexMatrix n = ComplexMatrix::Zero(cutoff, cutoff);
  for (int k = 0; k < cutoff; ++k) n(k, k) = k;
  return n;
}

ComplexMatrix exp_minus_i_half(const ComplexMatrix& hermitian, double phi) {
  return hermitian_matfunc(HermitianOperator(hermitian),
                           [phi](double lambda) { return std::exp(-kI * 0.5 * phi * lambda); });
}

ComplexMatrix rotation(Axis axis, double angle) {
  return std::cos(0.5 * angle) * id(2) - kI * std::sin(0.5 * angle) * pauli_matrix(axis);
}

// Distance of (a - b) restricted to the given columns.
double restricted_distance(const ComplexMatrix& a, const ComplexMatrix& b,
                           const std::vector<Index>& columns) {
  ComplexMatrix diff(a.rows(), static_cast<Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    diff.col(static_cast<Index>(c)) = a.col(columns[c]) - b.col(columns[c]);
  }
  return operator_norm(diff);
}

}  // namespace

Index RegisterLayout::dim() const {
  Index d = Index{2} << qubits;  // system qubits + ancilla
  if (mode_cutoff) d *= *mode_cutoff;
  return d;
}

void RegisterLayout::validate() const {
  if (qubits < 0) throw DimensionError("register layout: negative qubit count");
  if (mode_cutoff && *mode_cutoff < 2) {
    throw DimensionError("register layout: mode cutoff must be >= 2");
  }
}

ComplexMatrix coupling_operator(const Coupling& kind, const RegisterLayout& layout) {
  layout.validate();
  const ComplexMatrix x = pauli_matrix(Axis::X);
  const ComplexMatrix z = pauli_matrix(Axis::Z);
  return std::visit(
      overloaded{
          [&](const ZX& c) { return embed(layout, {{c.qubit, z}, {kAncilla, x}}); },
          [&](const NumberX&) {
            if (!layout.mode_cutoff) throw DimensionError("NumberX coupling needs a mode");
            const ComplexMatrix n = number_op(*layout.mode_cutoff);
            return embed(layout, {{kAncilla, x}}, &n);
          },
          [&](const XXX& c) {
            if (c.q1 == c.q2) throw DimensionError("XXX coupling needs two distinct qubits");
            return embed(layout, {{c.q1, x}, {c.q2, x}, {kAncilla, x}});
          },
          [&](const DipoleXX& c) {
            if (!layout.mode_cutoff) throw DimensionError("DipoleXX coupling needs a mode");
            const ComplexMatrix q = position_quadrature(*layout.mode_cutoff);
            return embed(layout, {{c.qubit, x}, {kAncilla, x}}, &q);
          },
      },
      kind);
}

JointUnitary primitive_unitary(const Coupling& kind, double phi, const RegisterLayout& layout) {
  return JointUnitary::from_matrix(exp_minus_i_half(coupling_operator(kind, layout), phi));
}

ComplexMatrix gate_unitary(const Gate& gate, const RegisterLayout& layout) {
  layout.validate();
  return std::visit(
      overloaded{
          [&](const CNOT& g) -> ComplexMatrix {
            if (g.control == g.target) throw DimensionError("CNOT control equals target");
            ComplexMatrix p0(2, 2);
            p0 << 1, 0, 0, 0;
            ComplexMatrix p1(2, 2);
            p1 << 0, 0, 0, 1;
            return embed(layout, {{g.control, p0}}) +
                   embed(layout, {{g.control, p1}, {g.target, pauli_matrix(Axis::X)}});
          },
          [&](const SingleQubitRotation& g) -> ComplexMatrix {
            return embed(layout, {{g.qubit, rotation(g.axis, g.angle)}});
          },
          [&](const MS& g) -> ComplexMatrix {
            if (g.q1 == g.q2) throw DimensionError("MS gate needs two distinct qubits");
            const ComplexMatrix x = pauli_matrix(Axis::X);
            return exp_minus_i_half(embed(layout, {{g.q1, x}, {g.q2, x}}), g.angle);
          },
          [&](const AnalogBlockUR& g) -> ComplexMatrix {
            if (!layout.mode_cutoff) throw DimensionError("analog block needs a mode");
            const ComplexMatrix q = position_quadrature(*layout.mode_cutoff);
            return exp_minus_i_half(embed(layout, {{kAncilla, pauli_matrix(Axis::X)}}, &q), g.phi);
          },
      },
      gate);
}

ComplexMatrix circuit_unitary(const CircuitSpec& circuit) {
  ComplexMatrix u = id(circuit.layout.dim());
  for (const auto& g : circuit.gates) u = gate_unitary(g, circuit.layout) * u;
  return u;
}

CircuitSpec xxx_cnot_circuit(double phi, bool drop_cnots) {
  // R_y = exp(i pi sy / 4) = R_y(-pi/2) satisfies R_y^dagger sz R_y = sx.
  constexpr double kQuarter = std::numbers::pi / 2.0;
  CircuitSpec c;
  c.layout = RegisterLayout{2, std::nullopt};
  auto& g = c.gates;
  for (int q : {0, 1, kAncilla}) g.push_back(SingleQubitRotation{Axis::Y, -kQuarter, q});
  if (!drop_cnots) {
    g.push_back(CNOT{0, kAncilla});
    g.push_back(CNOT{1, kAncilla});
  }
  g.push_back(SingleQubitRotation{Axis::Z, phi, kAncilla});
  if (!drop_cnots) {
    g.push_back(CNOT{1, kAncilla});
    g.push_back(CNOT{0, kAncilla});
  }
  for (int q : {0, 1, kAncilla}) g.push_back(SingleQubitRotation{Axis::Y, kQuarter, q});
  return c;
}

CircuitSpec dipole_cnot_circuit(double phi, int cutoff, bool drop_cnots) {
  // R_y(-pi/2) on the qubit and R_y(+pi/2) on the ancilla turn CNOT(qubit -> ancilla)
  // into CNOT(ancilla -> qubit), which maps sx_A to sx_i sx_A.
  constexpr double kQuarter = std::numbers::pi / 2.0;
  CircuitSpec c;
  c.layout = RegisterLayout{1, cutoff};
  auto& g = c.gates;
  auto flipped_cnot = [&] {
    g.push_back(SingleQubitRotation{Axis::Y, -kQuarter, 0});
    g.push_back(SingleQubitRotation{Axis::Y, kQuarter, kAncilla});
    g.push_back(CNOT{0, kAncilla});
    g.push_back(SingleQubitRotation{Axis::Y, kQuarter, 0});
    g.push_back(SingleQubitRotation{Axis::Y, -kQuarter, kAncilla});
  };
  if (!drop_cnots) flipped_cnot();
  g.push_back(AnalogBlockUR{phi});
  if (!drop_cnots) flipped_cnot();
  return c;
}

double verify_xxx_circuit(double phi, bool drop_cnots) {
  const CircuitSpec c = xxx_cnot_circuit(phi, drop_cnots);
  const ComplexMatrix target = primitive_unitary(XXX{0, 1}, phi, c.layout).matrix();
  return operator_norm(circuit_unitary(c) - target);
}

double verify_dipole_circuit(double phi, int cutoff, bool drop_cnots) {
  if (cutoff < 8) throw DimensionError("verify_dipole_circuit: cutoff must be >= 8");
  const CircuitSpec c = dipole_cnot_circuit(phi, cutoff, drop_cnots);
  const RegisterLayout& layout = c.layout;
  const ComplexMatrix target = primitive_unitary(DipoleXX{0}, phi, layout).matrix();

  // Joint index = (qubit * cutoff + n) * 2 + ancilla.
  auto columns_for = [](int cut, int n_max) {
    std::vector<Index> cols;
    for (int q = 0; q < 2; ++q) {
      for (int n = 0; n < n_max; ++n) {
        for (int a = 0; a < 2; ++a) cols.push_back((Index{q} * cut + n) * 2 + a);
      }
    }
    return cols;
  };
  const int safe = cutoff / 2;
  const std::vector<Index> cols = columns_for(cutoff, safe);

  // Leakage: population that the exact map (approximated at twice the cutoff)
  // sends from the safe subspace into Fock states n >= cutoff.
  const int big = 2 * cutoff;
  const ComplexMatrix target_big =
      primitive_unitary(DipoleXX{0}, phi, RegisterLayout{1, big}).matrix();
  double leakage = 0.0;
  for (const Index col : columns_for(big, safe)) {
    double lost = 0.0;
    for (Index row = 0; row < target_big.rows(); ++row) {
      if ((row / 2) % big >= cutoff) lost += std::norm(target_big(row, col));
    }
    leakage = std::max(leakage, lost);
  }
  if (leakage > 1e-8) {
    std::ostringstream os;
    os << "verify_dipole_circuit: truncation leakage " << leakage << " > 1e-8 at phi = " << phi
       << ", cutoff = " << cutoff;
    throw InconclusiveError(os.str());
  }
  return restricted_distance(circuit_unitary(c), target, cols);
}

}  // namespace peigen
