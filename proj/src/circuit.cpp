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

#include "tcount/circuit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <random>
#include <sstream>

#include "tcount/errors.hpp"

namespace tcount {

namespace {

struct Mnemonic {
  GateKind kind;
  std::string_view text;
};

constexpr Mnemonic kMnemonics[] = {
    {GateKind::H, "h"},      {GateKind::T, "t"},       {GateKind::Tdg, "tdg"},
    {GateKind::S, "s"},      {GateKind::Sdg, "sdg"},   {GateKind::X, "x"},
    {GateKind::Y, "y"},      {GateKind::Z, "z"},       {GateKind::CNOT, "cnot"},
    {GateKind::SWAP, "swap"},
};

void check_gate(const Gate& g, int n) {
  auto in_range = [n](int q) { return q >= 1 && q <= n; };
  if (!in_range(g.q0)) throw InvalidInput("gate operand out of range");
  if (g.is_two_qubit() && (!in_range(g.q1) || g.q1 == g.q0))
    throw InvalidInput("two-qubit gate needs two distinct operands");
}

// 2x2 matrix [[m00, m01], [m10, m11]] of a single-qubit gate.
std::array<ComplexRingElt, 4> single_matrix(GateKind kind) {
  const ComplexRingElt one = ComplexRingElt::one(), zero{};
  const ComplexRingElt s = ComplexRingElt::reduce(1, 0, 0, 0, 1);
  const ComplexRingElt w = ComplexRingElt::omega();
  const ComplexRingElt i = ComplexRingElt::imag_unit();
  switch (kind) {
    case GateKind::H: return {s, s, s, -s};
    case GateKind::T: return {one, zero, zero, w};
    case GateKind::Tdg: return {one, zero, zero, c_conj(w)};
    case GateKind::S: return {one, zero, zero, i};
    case GateKind::Sdg: return {one, zero, zero, -i};
    case GateKind::X: return {zero, one, one, zero};
    case GateKind::Y: return {zero, -i, i, zero};
    case GateKind::Z: return {one, zero, zero, -one};
    default: throw InternalError("not a single-qubit gate");
  }
}

int parse_int(std::string_view tok) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw InvalidInput("bad integer '" + std::string(tok) + "'");
  return v;
}

}  // namespace

Gate Gate::inverse() const {
  switch (kind) {
    case GateKind::T: return {GateKind::Tdg, q0, q1};
    case GateKind::Tdg: return {GateKind::T, q0, q1};
    case GateKind::S: return {GateKind::Sdg, q0, q1};
    case GateKind::Sdg: return {GateKind::S, q0, q1};
    default: return *this;
  }
}

std::string_view gate_mnemonic(GateKind kind) {
  for (const auto& m : kMnemonics)
    if (m.kind == kind) return m.text;
  throw InternalError("unknown gate kind");
}

Circuit::Circuit(int n, std::vector<Gate> gates) : n_(n) {
  for (const Gate& g : gates) add(g);
}

void Circuit::add(const Gate& g) {
  check_gate(g, n_);
  gates_.push_back(g);
}

void Circuit::append(const Circuit& c) {
  if (c.n_ != n_) throw InvalidInput("circuit width mismatch");
  gates_.insert(gates_.end(), c.gates_.begin(), c.gates_.end());
}

Circuit Circuit::inverse() const {
  Circuit out(n_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.gates_.push_back(it->inverse());
  return out;
}

int Circuit::t_count() const {
  return static_cast<int>(std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) {
    return g.kind == GateKind::T || g.kind == GateKind::Tdg;
  }));
}

Circuit parse_circuit(std::string_view text) {
  std::vector<Gate> gates;
  int declared = 0, widest = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    std::string op = tok[0];
    std::transform(op.begin(), op.end(), op.begin(), [](unsigned char c) { return std::tolower(c); });
    try {
      if (op == "qubits") {
        if (tok.size() != 2 || declared != 0 || !gates.empty())
          throw InvalidInput("misplaced qubits line");
        declared = parse_int(tok[1]);
        if (declared < 1 || declared > 8) throw InvalidInput("qubit count out of range");
        continue;
      }
      const auto* m = std::find_if(std::begin(kMnemonics), std::end(kMnemonics),
                                   [&](const Mnemonic& x) { return x.text == op; });
      if (m == std::end(kMnemonics)) throw InvalidInput("unknown gate '" + tok[0] + "'");
      Gate g{m->kind, 0, 0};
      const std::size_t arity = g.is_two_qubit() ? 2 : 1;
      if (tok.size() != arity + 1) throw InvalidInput("wrong number of operands");
      g.q0 = parse_int(tok[1]);
      if (arity == 2) g.q1 = parse_int(tok[2]);
      widest = std::max({widest, g.q0, g.q1});
      gates.push_back(g);
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  const int n = declared ? declared : widest;
  if (n == 0) throw InvalidInput("circuit has no qubits");
  return Circuit(n, std::move(gates));
}

std::string format_circuit(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.num_qubits()) + "\n";
  for (const Gate& g : c.gates()) {
    out += gate_mnemonic(g.kind);
    out += ' ' + std::to_string(g.q0);
    if (g.is_two_qubit()) out += ' ' + std::to_string(g.q1);
    out += '\n';
  }
  return out;
}

void apply_gate(UnitaryMatrix& u, const Gate& g) {
  const int n = u.num_qubits();
  check_gate(g, n);
  const std::size_t d = u.dim();
  const std::size_t m0 = std::size_t{1} << (n - g.q0);
  if (g.kind == GateKind::CNOT || g.kind == GateKind::SWAP) {
    // Row permutation: new row r is old row pi(r), with pi an involution.
    const std::size_t m1 = std::size_t{1} << (n - g.q1);
    for (std::size_t r = 0; r < d; ++r) {
      std::size_t src = r;
      if (g.kind == GateKind::CNOT) {
        if (r & m0) src = r ^ m1;
      } else if (((r & m0) != 0) != ((r & m1) != 0)) {
        src = r ^ m0 ^ m1;
      }
      if (src <= r) continue;
      for (std::size_t c = 0; c < d; ++c) std::swap(u(r, c), u(src, c));
    }
    return;
  }
  const auto m = single_matrix(g.kind);
  for (std::size_t r0 = 0; r0 < d; ++r0) {
    if (r0 & m0) continue;
    const std::size_t r1 = r0 | m0;
    for (std::size_t c = 0; c < d; ++c) {
      const ComplexRingElt x = u(r0, c), y = u(r1, c);
      u(r0, c) = c_add(c_mul(m[0], x), c_mul(m[1], y));
      u(r1, c) = c_add(c_mul(m[2], x), c_mul(m[3], y));
    }
  }
}

UnitaryMatrix unitary_of_circuit(const Circuit& c) {
  UnitaryMatrix u = UnitaryMatrix::identity(c.num_qubits());
  for (const Gate& g : c.gates()) apply_gate(u, g);
  return u;
}

int rotation_qubit(PauliIndex p) {
  for (int q = 1; q <= p.num_qubits(); ++q)
    if (p.digit(q) != 0) return q;
  throw InvalidInput("identity Pauli has no rotation qubit");
}

Circuit clifford_mapping_circuit(PauliIndex p, int q) {
  const int n = p.num_qubits();
  if (p.is_identity()) throw InvalidInput("identity Pauli cannot be mapped to Z");
  if (q < 1 || q > n) throw InvalidInput("target qubit out of range");
  // Build D with D P D^† = Z_q, then return D^†.
  Circuit d(n);
  std::vector<int> support;
  for (int j = 1; j <= n; ++j) {
    switch (p.digit(j)) {
      case 1: d.add(Gate::single(GateKind::H, j)); break;  // H X H = Z
      case 2:                                               // S^† Y S = X
        d.add(Gate::single(GateKind::Sdg, j));
        d.add(Gate::single(GateKind::H, j));
        break;
      default: break;
    }
    if (p.digit(j) != 0) support.push_back(j);
  }
  // CNOT(j -> t) sends Z_j Z_t to Z_t.
  const int t = std::find(support.begin(), support.end(), q) != support.end() ? q : support[0];
  for (int j : support)
    if (j != t) d.add(Gate::cnot(j, t));
  if (t != q) d.add(Gate::swap(t, q));
  return d.inverse();
}

Circuit emit_circuit(const Decomposition& dec) {
  const int n = dec.clifford.num_qubits();
  Circuit out(n);
  // paulis[0] is P_t, the last rotation in time.
  for (auto it = dec.paulis.rbegin(); it != dec.paulis.rend(); ++it) {
    const int q = rotation_qubit(*it);
    const Circuit c = clifford_mapping_circuit(*it, q);
    out.append(c.inverse());
    out.add(Gate::single(GateKind::T, q));
    out.append(c);
  }
  return out;
}

}  // namespace tcount
