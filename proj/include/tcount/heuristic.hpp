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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcount/channel.hpp"
#include "tcount/decomposition.hpp"
#include "tcount/pauli.hpp"

namespace tcount {

enum class SelectMethod { A, B, C };

/// Whether divide-and-select partitions the children of each frontier node
/// separately (and keeps the union of the picks) or the whole level at once.
enum class SelectScope { PerParent, Level };

std::string method_name(SelectMethod m);
/// "A", "B" or "C", case-insensitive. Throws InvalidInput otherwise.
SelectMethod parse_method(std::string_view s);
/// "parent" or "level".
SelectScope parse_scope(std::string_view s);

struct HeuristicConfig {
  SelectMethod method = SelectMethod::C;
  SelectScope scope = SelectScope::PerParent;
  std::size_t frontier_cap = 4096;
  /// Largest depth tried; 0 means sde(U) + 2n + 8.
  int m_cap = 0;
  /// Expand two levels before the first selection.
  bool join2 = true;
  int threads = 1;
};

/// A frontier node. Its matrix <R(path[k-1])>^{-1} ... <R(path[0])>^{-1} <U>
/// is rebuilt from <U> on demand; sde, Hamming weight and digest are cached.
struct SearchNode {
  std::vector<PauliIndex> path;
  int sde = 0;
  std::size_t hw = 0;
  std::uint64_t digest = 0;
};

/// What divide_select needs to know about one child.
struct ChildStats {
  int parent_sde = 0;
  std::size_t parent_hw = 0;
  int sde = 0;
  std::size_t hw = 0;
};

/// Indices (ascending) of the children kept for the next level. Children with
/// sde > budget are dropped first; an empty result means no admissible set.
std::vector<std::size_t> divide_select(const std::vector<ChildStats>& children, SelectMethod method,
                                       int budget);

struct HeuristicTelemetry {
  std::size_t max_frontier = 0;
  /// Levels expanded over all calls of the subroutine.
  int levels = 0;
  double wall_ms = 0;
  /// Depth bound of the successful call.
  int final_m = 0;
  /// Frontier size after each level of the successful call.
  std::vector<std::size_t> frontier_sizes;
  std::size_t children_scored = 0;
};

struct HeuristicResult {
  Decomposition decomposition;
  HeuristicTelemetry telemetry;
  int tcount() const { return decomposition.tcount(); }
};

/// Raised when every depth up to the m cap failed. frontier_overflow() tells
/// whether at least one of those failures was a frontier-cap abort, in which
/// case a longer search might still succeed.
class HeuristicInconclusive : public std::runtime_error {
 public:
  HeuristicInconclusive(const std::string& what, int m_reached, bool overflow)
      : std::runtime_error(what), m_(m_reached), overflow_(overflow) {}
  int m_reached() const noexcept { return m_; }
  bool frontier_overflow() const noexcept { return overflow_; }

 private:
  int m_;
  bool overflow_;
};

struct SubroutineResult {
  std::optional<Decomposition> decomposition;
  /// The call gave up because a frontier outgrew the cap.
  bool overflow = false;
};

/// One depth-bounded tree search. Telemetry is accumulated when given.
SubroutineResult subroutine_a(const ChannelMatrix& u, int m, const HeuristicConfig& cfg,
                              HeuristicTelemetry* telemetry = nullptr);

/// Iterative deepening from m = sde(U). The decomposition is verified
/// exactly before it is returned.
HeuristicResult min_t_synth(const ChannelMatrix& u, const HeuristicConfig& cfg = {});

}  // namespace tcount
