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
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tcount/channel.hpp"
#include "tcount/coset.hpp"
#include "tcount/decomposition.hpp"

namespace tcount {

struct ProvableConfig {
  /// Decide T-count up to m.
  int m = 1;
  /// Space/time trade-off: databases reach depth ceil(m / c).
  int c = 2;
  std::size_t memory_cap_bytes = std::size_t{2} << 30;
  std::filesystem::path db_dir;
  int threads = 1;
};

/// Nested meet-in-the-middle decider. Builds (or loads) D_0 .. D_L with
/// L = ceil(m / c) once and answers any number of queries against them.
class ProvableSearcher {
 public:
  ProvableSearcher(int n, const ProvableConfig& cfg);

  int num_qubits() const { return n_; }
  /// ceil(m / c).
  int depth() const { return depth_; }
  const ProvableConfig& config() const { return cfg_; }
  const std::vector<CosetDatabase>& databases() const { return dbs_; }
  std::size_t database_bytes() const;

  /// T-count of u when it is at most m, otherwise nothing.
  std::optional<int> decide(const ChannelMatrix& u) const;
  /// Same with an explicit bound in place of m.
  std::optional<int> decide_bounded(const ChannelMatrix& u, int bound) const;

  /// Peels one R(P) at a time, re-deciding the remainder with bound t - 1.
  /// Throws InternalError when the decision and the peeling disagree.
  Decomposition decompose(const ChannelMatrix& u, int t) const;

 private:
  int n_;
  ProvableConfig cfg_;
  int depth_;
  std::vector<CosetDatabase> dbs_;
};

std::optional<int> count_t_decide(const ChannelMatrix& u, const ProvableConfig& cfg);
Decomposition decomposition_from_decision(const ChannelMatrix& u, int t,
                                          const ProvableConfig& cfg);

/// Exhaustive layered T-count oracle. Layer k holds the coset labels first
/// reached with k factors; the products use dense <R(P)> matrices built from
/// the defining formula, not the compact kernel. Layers are cached across
/// queries.
class BruteForceOracle {
 public:
  explicit BruteForceOracle(int n, std::size_t frontier_cap = 200000);

  /// Exact T-count if it is at most mmax. Throws ResourceCapExceeded when a
  /// layer outgrows the frontier cap.
  std::optional<int> tcount(const ChannelMatrix& u, int mmax);

  /// Representatives of every coset with T-count exactly k.
  const std::vector<ChannelMatrix>& layer(int k);

 private:
  void grow();

  int n_;
  std::size_t cap_;
  std::vector<ChannelMatrix> rotations_;
  std::map<std::string, int> seen_;
  std::vector<std::vector<ChannelMatrix>> layers_;
};

std::optional<int> tcount_bruteforce(const ChannelMatrix& u, int mmax);

}  // namespace tcount
