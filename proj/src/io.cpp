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

#include "tcount/io.hpp"

#include <fstream>
#include <sstream>

#include "tcount/circuit.hpp"
#include "tcount/errors.hpp"

namespace tcount {

namespace {

std::int64_t int_at(const Json& j, std::size_t i) {
  if (!j[i].is_number_integer()) throw InvalidInput("ring tuple entries must be integers");
  return j[i].get<std::int64_t>();
}

int exponent_at(const Json& j, std::size_t i) {
  const std::int64_t k = int_at(j, i);
  if (k < 0 || k > 4 * kMaxChannelExponent) throw InvalidInput("ring exponent out of range");
  return static_cast<int>(k);
}

// Validates {"n", "entries"} and returns n and the flattened tuples.
std::pair<int, std::vector<const Json*>> matrix_shape(const Json& j, std::size_t rows_per_n,
                                                      std::size_t tuple) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw InvalidInput("matrix JSON needs \"n\" and \"entries\"");
  if (!j["n"].is_number_integer()) throw InvalidInput("\"n\" must be an integer");
  const std::int64_t n = j["n"].get<std::int64_t>();
  if (n < 1 || n > 8) throw InvalidInput("qubit count out of range");
  const std::size_t dim = std::size_t{1} << (rows_per_n * static_cast<std::size_t>(n));
  const Json& rows = j["entries"];
  if (!rows.is_array() || rows.size() != dim)
    throw InvalidInput("expected " + std::to_string(dim) + " rows");
  std::vector<const Json*> out;
  out.reserve(dim * dim);
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != dim)
      throw InvalidInput("expected " + std::to_string(dim) + " entries per row");
    for (const Json& e : row) {
      if (!e.is_array() || e.size() != tuple)
        throw InvalidInput("ring entries must be " + std::to_string(tuple) + "-tuples");
      out.push_back(&e);
    }
  }
  return {static_cast<int>(n), std::move(out)};
}

}  // namespace

Json to_json(const RealRingElt& x) { return Json::array({x.a(), x.b(), x.k()}); }

Json to_json(const ComplexRingElt& x) { return Json::array({x.a(), x.b(), x.c(), x.d(), x.k()}); }

RealRingElt real_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidInput("real ring entry must be [a, b, k]");
  return RealRingElt::reduce(int_at(j, 0), int_at(j, 1), exponent_at(j, 2));
}

ComplexRingElt complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 5) throw InvalidInput("complex ring entry must be [a, b, c, d, k]");
  return ComplexRingElt::reduce(int_at(j, 0), int_at(j, 1), int_at(j, 2), int_at(j, 3),
                                exponent_at(j, 4));
}

Json to_json(const ChannelMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.num_qubits()}, {"entries", std::move(rows)}};
}

ChannelMatrix channel_from_json(const Json& j) {
  const auto [n, tuples] = matrix_shape(j, 2, 3);
  std::vector<RealRingElt> entries;
  entries.reserve(tuples.size());
  for (const Json* t : tuples) entries.push_back(real_from_json(*t));
  const ChannelMatrix m = ChannelMatrix::from_entries(n, entries);
  if (m(0, 0) != RealRingElt::integer(1))
    throw InvalidInput("channel must map the identity Pauli to itself");
  if (dense_channel_mul(m, m.transpose()) != ChannelMatrix::identity(n))
    throw InvalidInput("channel matrix is not orthogonal");
  return m;
}

Json to_json(const UnitaryMatrix& u) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < u.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < u.dim(); ++c) row.push_back(to_json(u(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"n", u.num_qubits()}, {"entries", std::move(rows)}};
}

UnitaryMatrix unitary_from_json(const Json& j) {
  const auto [n, tuples] = matrix_shape(j, 1, 5);
  std::vector<ComplexRingElt> entries;
  entries.reserve(tuples.size());
  for (const Json* t : tuples) entries.push_back(complex_from_json(*t));
  UnitaryMatrix u(n, std::move(entries));
  if (!u.is_unitary()) throw InvalidInput("matrix is not unitary");
  return u;
}

Json to_json(const Decomposition& d) {
  Json paulis = Json::array();
  for (const PauliIndex& p : d.paulis) paulis.push_back(p.str());
  return {{"tcount", d.tcount()}, {"paulis", std::move(paulis)}, {"clifford_channel", to_json(d.clifford)}};
}

Json to_json(const HeuristicTelemetry& t) {
  return {{"max_frontier", t.max_frontier},
          {"levels", t.levels},
          {"wall_ms", t.wall_ms},
          {"final_m", t.final_m},
          {"frontier_sizes", t.frontier_sizes},
          {"children_scored", t.children_scored}};
}

Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("paulis") || !j.contains("clifford_channel"))
    throw InvalidInput("decomposition JSON needs \"paulis\" and \"clifford_channel\"");
  Decomposition d;
  d.clifford = channel_from_json(j["clifford_channel"]);
  for (const Json& p : j["paulis"]) {
    if (!p.is_string()) throw InvalidInput("Paulis must be strings");
    const PauliIndex pi = PauliIndex::parse(p.get<std::string>());
    if (pi.num_qubits() != d.clifford.num_qubits()) throw InvalidInput("Pauli width mismatch");
    d.paulis.push_back(pi);
  }
  if (j.contains("tcount") && j["tcount"] != d.tcount())
    throw InvalidInput("\"tcount\" does not match the Pauli list");
  return d;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
  if (!out) throw InvalidInput("write failed for " + path.string());
}

ChannelMatrix load_channel(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  const std::string text = read_text(path);
  if (ext == ".qc") return channel_of_unitary(unitary_of_circuit(parse_circuit(text)));
  if (ext != ".json") throw InvalidInput("unknown input extension '" + ext + "' (want .qc or .json)");
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("bad JSON: ") + e.what());
  }
  // Tuple length tells a unitary from a channel.
  const Json* first = nullptr;
  if (j.is_object() && j.contains("entries") && j["entries"].is_array() && !j["entries"].empty() &&
      j["entries"][0].is_array() && !j["entries"][0].empty())
    first = &j["entries"][0][0];
  if (first && first->is_array() && first->size() == 3) return channel_from_json(j);
  return channel_of_unitary(unitary_from_json(j));
}

}  // namespace tcount
