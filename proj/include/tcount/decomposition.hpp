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

#include <vector>

#include "tcount/channel.hpp"
#include "tcount/pauli.hpp"

namespace tcount {

/// <U> = <R(P_t)> ... <R(P_1)> <C0>. paulis[0] is P_t, the factor peeled off
/// first during search; clifford holds <C0>.
struct Decomposition {
  std::vector<PauliIndex> paulis;
  ChannelMatrix clifford;

  int tcount() const { return static_cast<int>(paulis.size()); }
};

/// The product the decomposition stands for.
ChannelMatrix reconstruct(const Decomposition& d);

/// Exact check of the reconstruction identity and of C0 being Clifford.
bool verify_decomposition(const Decomposition& d, const ChannelMatrix& target);

/// Applies <R(p)>^{-1} for each p in order, left to right: returns
/// <R(paulis.back())>^{-1} ... <R(paulis.front())>^{-1} v.
ChannelMatrix peel(const std::vector<PauliIndex>& paulis, const ChannelMatrix& v);

}  // namespace tcount
