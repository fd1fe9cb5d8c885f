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

#include "tcount/unitary.hpp"

#include "tcount/errors.hpp"
#include "tcount/pauli.hpp"

namespace tcount {

UnitaryMatrix::UnitaryMatrix(int n)
    : n_(n), dim_(std::size_t{1} << n), entries_(dim_ * dim_) {
  if (n < 0 || n > 8) throw InvalidInput("qubit count out of range");
}

UnitaryMatrix::UnitaryMatrix(int n, std::vector<ComplexRingElt> entries) : UnitaryMatrix(n) {
  if (entries.size() != dim_ * dim_) throw InvalidInput("unitary has wrong number of entries");
  for (auto& e : entries) e = c_reduce(e);
  entries_ = std::move(entries);
}

UnitaryMatrix UnitaryMatrix::identity(int n) {
  UnitaryMatrix u(n);
  for (std::size_t i = 0; i < u.dim_; ++i) u(i, i) = ComplexRingElt::one();
  return u;
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  UnitaryMatrix out(n_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = c_conj((*this)(r, c));
  return out;
}

bool UnitaryMatrix::is_unitary() const { return (*this) * adjoint() == identity(n_); }

UnitaryMatrix operator*(const UnitaryMatrix& x, const UnitaryMatrix& y) {
  if (x.num_qubits() != y.num_qubits()) throw InvalidInput("unitary dimension mismatch");
  const std::size_t d = x.dim();
  UnitaryMatrix out(x.num_qubits());
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const ComplexRingElt& xv = x(r, k);
      if (xv.is_zero()) continue;
      for (std::size_t c = 0; c < d; ++c) {
        const ComplexRingElt& yv = y(k, c);
        if (yv.is_zero()) continue;
        out(r, c) = c_add(out(r, c), c_mul(xv, yv));
      }
    }
  }
  return out;
}

UnitaryMatrix kron(const UnitaryMatrix& x, const UnitaryMatrix& y) {
  UnitaryMatrix out(x.num_qubits() + y.num_qubits());
  const std::size_t dy = y.dim();
  for (std::size_t r1 = 0; r1 < x.dim(); ++r1)
    for (std::size_t c1 = 0; c1 < x.dim(); ++c1) {
      if (x(r1, c1).is_zero()) continue;
      for (std::size_t r2 = 0; r2 < dy; ++r2)
        for (std::size_t c2 = 0; c2 < dy; ++c2)
          out(r1 * dy + r2, c1 * dy + c2) = c_mul(x(r1, c1), y(r2, c2));
    }
  return out;
}

UnitaryMatrix scaled(const UnitaryMatrix& u, const ComplexRingElt& s) {
  std::vector<ComplexRingElt> e = u.entries();
  for (auto& v : e) v = c_mul(v, s);
  return UnitaryMatrix(u.num_qubits(), std::move(e));
}

UnitaryMatrix pauli_matrix(PauliIndex p) {
  const int n = p.num_qubits();
  UnitaryMatrix out(n);
  for (std::uint32_t col = 0; col < out.dim(); ++col) {
    const auto [phase, row] = apply_pauli(p, col);
    out(row, col) = ComplexRingElt::i_pow(phase.exponent());
  }
  return out;
}

UnitaryMatrix rotation_matrix(PauliIndex p) {
  const int n = p.num_qubits();
  const ComplexRingElt half = ComplexRingElt::reduce(1, 0, 0, 0, 2);
  const ComplexRingElt w = ComplexRingElt::omega();
  const ComplexRingElt plus = c_mul(half, c_add(ComplexRingElt::one(), w));
  const ComplexRingElt minus = c_mul(half, c_sub(ComplexRingElt::one(), w));
  const UnitaryMatrix id = UnitaryMatrix::identity(n);
  const UnitaryMatrix pm = pauli_matrix(p);
  std::vector<ComplexRingElt> e(id.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = c_add(c_mul(plus, id.entries()[i]), c_mul(minus, pm.entries()[i]));
  return UnitaryMatrix(n, std::move(e));
}

}  // namespace tcount
