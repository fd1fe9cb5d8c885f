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
#include <utility>

namespace tcount {

/// Exponent e of a phase i^e, kept in {0, 1, 2, 3}.
class Phase4 {
 public:
  constexpr Phase4() = default;
  constexpr explicit Phase4(int e) : e_(static_cast<std::uint8_t>(((e % 4) + 4) % 4)) {}

  constexpr int exponent() const { return e_; }
  constexpr Phase4 operator*(Phase4 o) const { return Phase4(e_ + o.e_); }
  constexpr Phase4 inverse() const { return Phase4(4 - e_); }
  friend constexpr bool operator==(Phase4, Phase4) = default;

 private:
  std::uint8_t e_ = 0;
};

/// An n-qubit Pauli string encoded as a base-4 integer.
///
/// Digits: I=0, X=1, Y=2, Z=3. Qubit 1 is the most significant digit, so the
/// index doubles as the row/column index of a channel matrix and index 0 is
/// the identity.
class PauliIndex {
 public:
  static constexpr int kMaxQubits = 15;

  constexpr PauliIndex() = default;
  PauliIndex(int n, std::uint32_t value);

  static PauliIndex identity(int n) { return PauliIndex(n, 0); }
  /// Parses a string over {I,X,Y,Z}; qubit 1 is leftmost.
  static PauliIndex parse(std::string_view text);
  /// Single-qubit Pauli `digit` on 1-based `qubit`, identity elsewhere.
  static PauliIndex single(int n, int qubit, int digit);

  constexpr int num_qubits() const { return n_; }
  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_identity() const { return value_ == 0; }
  /// Digit on 1-based qubit q.
  constexpr int digit(int q) const { return static_cast<int>((value_ >> (2 * (n_ - q))) & 3u); }

  std::string str() const;

  friend constexpr bool operator==(PauliIndex, PauliIndex) = default;
  friend constexpr auto operator<=>(PauliIndex x, PauliIndex y) {
    return std::pair{x.n_, x.value_} <=> std::pair{y.n_, y.value_};
  }

 private:
  int n_ = 0;
  std::uint32_t value_ = 0;
};

/// Number of Paulis on n qubits, N^2 = 4^n.
constexpr std::uint32_t pauli_count(int n) { return std::uint32_t{1} << (2 * n); }

/// P_p * P_q = i^phase * P_r, computed digit-wise.
std::pair<Phase4, PauliIndex> pauli_mul(PauliIndex p, PauliIndex q);

/// True when the two Paulis commute.
bool pauli_commute(PauliIndex p, PauliIndex q);

/// P_p |basis> = i^phase |out>, with qubit 1 the most significant bit of the
/// computational basis index.
std::pair<Phase4, std::uint32_t> apply_pauli(PauliIndex p, std::uint32_t basis_index);

}  // namespace tcount
