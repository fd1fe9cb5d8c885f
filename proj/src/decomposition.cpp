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

#include "tcount/decomposition.hpp"

#include "tcount/errors.hpp"
#include "tcount/rp_kernel.hpp"

namespace tcount {

ChannelMatrix reconstruct(const Decomposition& d) {
  ChannelMatrix m = d.clifford;
  const int n = m.num_qubits();
  for (auto it = d.paulis.rbegin(); it != d.paulis.rend(); ++it) {
    if (it->num_qubits() != n) throw InvalidInput("Pauli width does not match the channel");
    m = rp_mult(rp_table(n)[it->value() - 1], m);
  }
  return m;
}

bool verify_decomposition(const Decomposition& d, const ChannelMatrix& target) {
  if (!d.clifford.is_clifford()) return false;
  for (const PauliIndex& p : d.paulis)
    if (p.is_identity()) return false;
  return reconstruct(d) == target;
}

ChannelMatrix peel(const std::vector<PauliIndex>& paulis, const ChannelMatrix& v) {
  ChannelMatrix m = v;
  const int n = v.num_qubits();
  for (const PauliIndex& p : paulis) {
    if (p.is_identity() || p.num_qubits() != n) throw InvalidInput("bad Pauli in sequence");
    m = rp_mult(rp_inv_table(n)[p.value() - 1], m);
  }
  return m;
}

}  // namespace tcount
