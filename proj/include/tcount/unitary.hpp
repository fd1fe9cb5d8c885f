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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tcount/pauli.hpp"
#include "tcount/ring.hpp"

namespace tcount {

/// Dense 2^n x 2^n matrix over Z[i, 1/√2], row-major.
class UnitaryMatrix {
 public:
  UnitaryMatrix() = default;
  /// Zero matrix on n qubits.
  explicit UnitaryMatrix(int n);
  UnitaryMatrix(int n, std::vector<ComplexRingElt> entries);

  static UnitaryMatrix identity(int n);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return dim_; }

  const ComplexRingElt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }
  ComplexRingElt& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const std::vector<ComplexRingElt>& entries() const { return entries_; }

  UnitaryMatrix adjoint() const;
  /// Exact U U^† == I.
  bool is_unitary() const;

  friend bool operator==(const UnitaryMatrix&, const UnitaryMatrix&) = default;

 private:
  int n_ = 0;
  std::size_t dim_ = 0;
  std::vector<ComplexRingElt> entries_;
};

UnitaryMatrix operator*(const UnitaryMatrix& x, const UnitaryMatrix& y);
UnitaryMatrix kron(const UnitaryMatrix& x, const UnitaryMatrix& y);
UnitaryMatrix scaled(const UnitaryMatrix& u, const ComplexRingElt& s);

/// Dense matrix of the Pauli string p.
UnitaryMatrix pauli_matrix(PauliIndex p);

/// R(P) = ½(1 + e^{iπ/4}) I + ½(1 - e^{iπ/4}) P, built from its definition.
UnitaryMatrix rotation_matrix(PauliIndex p);

}  // namespace tcount
