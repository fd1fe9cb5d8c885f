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

#include "tcount/pauli.hpp"

#include "tcount/errors.hpp"

namespace tcount {

namespace {

constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};

// Phase exponent of the single-qubit product of digits x and y.
constexpr int digit_phase(int x, int y) {
  if (x == 0 || y == 0 || x == y) return 0;
  // XY = iZ, YZ = iX, ZX = iY; the reversed orders pick up -i.
  const bool cyclic = (x == 1 && y == 2) || (x == 2 && y == 3) || (x == 3 && y == 1);
  return cyclic ? 1 : 3;
}

}  // namespace

PauliIndex::PauliIndex(int n, std::uint32_t value) : n_(n), value_(value) {
  if (n < 0 || n > kMaxQubits) throw InvalidInput("qubit count out of range");
  if (value >= pauli_count(n)) throw InvalidInput("Pauli index out of range");
}

PauliIndex PauliIndex::parse(std::string_view text) {
  const int n = static_cast<int>(text.size());
  if (n == 0 || n > kMaxQubits) throw InvalidInput("bad Pauli string length");
  std::uint32_t v = 0;
  for (char ch : text) {
    int d;
    switch (ch) {
      case 'I': d = 0; break;
      case 'X': d = 1; break;
      case 'Y': d = 2; break;
      case 'Z': d = 3; break;
      default: throw InvalidInput("bad Pauli letter '" + std::string(1, ch) + "'");
    }
    v = (v << 2) | static_cast<std::uint32_t>(d);
  }
  return PauliIndex(n, v);
}

PauliIndex PauliIndex::single(int n, int qubit, int digit) {
  if (qubit < 1 || qubit > n) throw InvalidInput("qubit out of range");
  if (digit < 0 || digit > 3) throw InvalidInput("bad Pauli digit");
  return PauliIndex(n, static_cast<std::uint32_t>(digit) << (2 * (n - qubit)));
}

std::string PauliIndex::str() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int q = 1; q <= n_; ++q) out.push_back(kLetters[digit(q)]);
  return out;
}

std::pair<Phase4, PauliIndex> pauli_mul(PauliIndex p, PauliIndex q) {
  if (p.num_qubits() != q.num_qubits()) throw InvalidInput("Pauli dimension mismatch");
  int e = 0;
  for (int j = 1; j <= p.num_qubits(); ++j) e += digit_phase(p.digit(j), q.digit(j));
  // With I,X,Y,Z = 0..3 the single-qubit product is the XOR of the digits.
  return {Phase4(e), PauliIndex(p.num_qubits(), p.value() ^ q.value())};
}

bool pauli_commute(PauliIndex p, PauliIndex q) {
  int anti = 0;
  for (int j = 1; j <= p.num_qubits(); ++j) {
    const int x = p.digit(j), y = q.digit(j);
    if (x != 0 && y != 0 && x != y) ++anti;
  }
  return anti % 2 == 0;
}

std::pair<Phase4, std::uint32_t> apply_pauli(PauliIndex p, std::uint32_t basis_index) {
  const int n = p.num_qubits();
  if (basis_index >= (std::uint32_t{1} << n)) throw InvalidInput("basis index out of range");
  int e = 0;
  std::uint32_t out = basis_index;
  for (int q = 1; q <= n; ++q) {
    const std::uint32_t mask = std::uint32_t{1} << (n - q);
    const bool bit = (basis_index & mask) != 0;
    switch (p.digit(q)) {
      case 1: out ^= mask; break;                      // X|b> = |1-b>
      case 2: out ^= mask; e += bit ? 3 : 1; break;    // Y|0> = i|1>, Y|1> = -i|0>
      case 3: e += bit ? 2 : 0; break;                 // Z|1> = -|1>
      default: break;
    }
  }
  return {Phase4(e), out};
}

}  // namespace tcount
