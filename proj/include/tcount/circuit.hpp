// Copyright 2026 The tcount Authors
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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tcount/channel.hpp"
#include "tcount/decomposition.hpp"
#include "tcount/pauli.hpp"
#include "tcount/unitary.hpp"

namespace tcount {

enum class GateKind { H, T, Tdg, S, Sdg, X, Y, Z, CNOT, SWAP };

/// A gate on 1-based qubits. For CNOT, q0 is the control and q1 the target.
struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 1;
  int q1 = 0;

  static Gate single(GateKind kind, int q) { return {kind, q, 0}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, a, b}; }

  bool is_two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::SWAP; }
  /// The gate g' with g' g = I.
  Gate inverse() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

std::string_view gate_mnemonic(GateKind kind);

/// Gates in application order: the first gate acts first.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n) : n_(n) {}
  Circuit(int n, std::vector<Gate> gates);

  int num_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }

  void add(const Gate& g);
  void append(const Circuit& c);
  /// Reversed and inverted.
  Circuit inverse() const;
  /// Number of T and T^† gates.
  int t_count() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_ = 0;
  std::vector<Gate> gates_;
};

/// Circuit text: "qubits 3" then one gate per line ("h 1", "cnot 1 3"). '#'
/// starts a comment. Without a qubits line the width is the largest operand.
Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Circuit& c);

/// Exact product of the gate matrices; the last gate is the leftmost factor.
UnitaryMatrix unitary_of_circuit(const Circuit& c);

/// Left-multiplies u by the matrix of g.
void apply_gate(UnitaryMatrix& u, const Gate& g);

/// A {H, S, CNOT, SWAP} circuit C with C Z_q C^† = P.
Circuit clifford_mapping_circuit(PauliIndex p, int q);

/// Qubit the emitted T for p acts on: the first qubit in p's support.
int rotation_qubit(PauliIndex p);

/// Circuit for R(P_t) ... R(P_1), one T gate per Pauli. The terminal Clifford
/// of the decomposition is not synthesized.
Circuit emit_circuit(const Decomposition& d);

namespace fixtures {

Circuit toffoli();
Circuit fredkin();
Circuit peres();
Circuit quantum_or();
Circuit negated_toffoli();
Circuit adder4();
Circuit u1();
Circuit u2();
Circuit controlled_s();
/// Clifford gates drawn uniformly from {H, S, CNOT}, with exactly t T gates
/// interleaved; reproducible from the seed.
Circuit random_circuit(int n, int t_gates, std::uint64_t seed);

/// Names accepted by by_name.
const std::vector<std::string>& names();
/// Throws InvalidInput for an unknown name.
Circuit by_name(std::string_view name);

}  // namespace fixtures

}  // namespace tcount
