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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tcount/channel.hpp"
#include "tcount/decomposition.hpp"
#include "tcount/heuristic.hpp"
#include "tcount/unitary.hpp"

namespace tcount {

using Json = nlohmann::json;

// Ring elements are [a, b, k] and [a, b, c, d, k]. Non-canonical tuples are
// accepted and reduced; output is always canonical.
Json to_json(const RealRingElt& x);
Json to_json(const ComplexRingElt& x);
RealRingElt real_from_json(const Json& j);
ComplexRingElt complex_from_json(const Json& j);

/// {"n": n, "entries": [[[a,b,k], ...], ...]}, rows in Pauli-index order.
Json to_json(const ChannelMatrix& m);
/// Checks the shape and that the matrix is orthogonal with <I|M|I> = 1.
ChannelMatrix channel_from_json(const Json& j);

/// {"n": n, "entries": [[[a,b,c,d,k], ...], ...]}, row-major.
Json to_json(const UnitaryMatrix& u);
/// Checks the shape and unitarity.
UnitaryMatrix unitary_from_json(const Json& j);

/// {"tcount", "paulis" (P_t first), "clifford_channel"}.
Json to_json(const Decomposition& d);
Json to_json(const HeuristicTelemetry& t);
Decomposition decomposition_from_json(const Json& j);

/// Channel of an input file: ".qc" circuit text, or ".json" holding a
/// unitary (5-tuples) or a channel (3-tuples). Throws InvalidInput.
ChannelMatrix load_channel(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace tcount
