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

#include <random>

#include "tcount/circuit.hpp"
#include "tcount/errors.hpp"

namespace tcount::fixtures {

namespace {

// Gate lists transcribed from the published Clifford+T decompositions. The
// drawn Toffoli has T^† on qubit 3 in its second T layer, which does not give
// Toffoli; T there does (checked against the permutation matrix in tests).
constexpr std::string_view kToffoli = R"(qubits 3
h 3
t 1
t 2
t 3
cnot 2 1
cnot 3 2
cnot 1 3
tdg 2
cnot 1 2
tdg 1
tdg 2
t 3
cnot 3 2
cnot 1 3
cnot 2 1
h 3
)";

constexpr std::string_view kFredkin = R"(qubits 3
cnot 3 2
cnot 1 2
h 3
t 1
tdg 2
t 3
cnot 3 2
cnot 1 3
t 2
cnot 1 2
tdg 3
tdg 2
cnot 1 3
cnot 3 2
t 2
h 3
cnot 3 2
)";

constexpr std::string_view kPeres = R"(qubits 3
t 1
t 2
h 3
cnot 3 2
tdg 2
cnot 1 3
cnot 1 2
tdg 3
cnot 1 3
t 2
t 3
cnot 3 2
tdg 2
h 3
)";

// The two swaps of the drawing are kept as swap gates; unitary_of_circuit
// treats a swap exactly like its three-CNOT expansion.
constexpr std::string_view kAdder4 = R"(qubits 4
cnot 2 1
h 4
cnot 3 1
sdg 1
sdg 2
sdg 3
cnot 1 3
cnot 2 3
cnot 2 1
cnot 3 1
h 1
h 2
sdg 3
h 3
cnot 2 3
cnot 1 2
cnot 4 1
h 1
h 2
h 3
cnot 1 3
cnot 4 3
cnot 4 2
cnot 4 1
cnot 3 1
sdg 4
t 2
t 3
tdg 4
cnot 2 4
cnot 3 4
cnot 3 2
cnot 4 3
t 2
t 3
t 4
cnot 2 4
cnot 3 2
h 4
swap 1 2
t 1
cnot 1 2
cnot 2 1
swap 2 3
)";

// Toffoli on (c1, c2 -> target) inside an n-qubit register.
Circuit toffoli_on(int n, int c1, int c2, int target) {
  const int map[4] = {0, c1, c2, target};
  Circuit out(n);
  const Circuit tof = toffoli();
  for (Gate g : tof.gates()) {
    g.q0 = map[g.q0];
    if (g.is_two_qubit()) g.q1 = map[g.q1];
    out.add(g);
  }
  return out;
}

void add_x(Circuit& c, std::initializer_list<int> qubits) {
  for (int q : qubits) c.add(Gate::single(GateKind::X, q));
}

}  // namespace

Circuit toffoli() { return parse_circuit(kToffoli); }
Circuit fredkin() { return parse_circuit(kFredkin); }
Circuit peres() { return parse_circuit(kPeres); }
Circuit adder4() { return parse_circuit(kAdder4); }

Circuit quantum_or() {
  // c ^= a | b, i.e. c ^= !( !a & !b ) .
  Circuit c(3);
  add_x(c, {1, 2});
  c.append(toffoli());
  add_x(c, {1, 2, 3});
  return c;
}

Circuit negated_toffoli() {
  Circuit c(3);
  add_x(c, {1, 2});
  c.append(toffoli());
  add_x(c, {1, 2});
  return c;
}

Circuit u1() {
  // (TOF ⊗ I)(I ⊗ TOF): the right factor acts first.
  Circuit c = toffoli_on(4, 2, 3, 4);
  c.append(toffoli_on(4, 1, 2, 3));
  return c;
}

Circuit u2() {
  Circuit c = toffoli_on(4, 1, 2, 3);
  c.append(toffoli_on(4, 2, 3, 4));
  c.append(toffoli_on(4, 1, 2, 3));
  return c;
}

Circuit controlled_s() {
  return parse_circuit("qubits 2\nt 1\nt 2\ncnot 1 2\ntdg 2\ncnot 1 2\n");
}

Circuit random_circuit(int n, int t_gates, std::uint64_t seed) {
  if (n < 1 || n > 8) throw InvalidInput("qubit count out of range");
  if (t_gates < 0) throw InvalidInput("negative T-gate count");
  std::mt19937_64 rng(seed);
  auto qubit = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1; };
  const std::uint64_t kinds = n >= 2 ? 3 : 2;
  Circuit c(n);
  auto add_cliffords = [&] {
    const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
    for (int i = 0; i < count; ++i) {
      switch (rng() % kinds) {
        case 0: c.add(Gate::single(GateKind::H, qubit())); break;
        case 1: c.add(Gate::single(GateKind::S, qubit())); break;
        default: {
          const int a = qubit();
          int b = qubit();
          while (b == a) b = qubit();
          c.add(Gate::cnot(a, b));
        }
      }
    }
  };
  for (int i = 0; i < t_gates; ++i) {
    add_cliffords();
    c.add(Gate::single(GateKind::T, qubit()));
  }
  add_cliffords();
  return c;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {
      "toffoli", "fredkin", "peres", "quantum_or", "negated_toffoli",
      "adder4",  "u1",      "u2",    "controlled_s",
  };
  return kNames;
}

Circuit by_name(std::string_view name) {
  if (name == "toffoli") return toffoli();
  if (name == "fredkin") return fredkin();
  if (name == "peres") return peres();
  if (name == "quantum_or") return quantum_or();
  if (name == "negated_toffoli") return negated_toffoli();
  if (name == "adder4") return adder4();
  if (name == "u1") return u1();
  if (name == "u2") return u2();
  if (name == "controlled_s") return controlled_s();
  throw InvalidInput("unknown fixture '" + std::string(name) + "'");
}

}  // namespace tcount::fixtures
