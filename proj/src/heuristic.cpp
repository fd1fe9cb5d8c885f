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

#include "tcount/heuristic.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <limits>
#include <unordered_map>

#include "parallel.hpp"
#include "tcount/errors.hpp"
#include "tcount/rp_kernel.hpp"

namespace tcount {

std::string method_name(SelectMethod m) {
  switch (m) {
    case SelectMethod::A: return "A";
    case SelectMethod::B: return "B";
    case SelectMethod::C: return "C";
  }
  return "?";
}

SelectMethod parse_method(std::string_view s) {
  if (s == "A" || s == "a") return SelectMethod::A;
  if (s == "B" || s == "b") return SelectMethod::B;
  if (s == "C" || s == "c") return SelectMethod::C;
  throw InvalidInput("unknown divide-and-select method '" + std::string(s) + "'");
}

SelectScope parse_scope(std::string_view s) {
  if (s == "parent") return SelectScope::PerParent;
  if (s == "level") return SelectScope::Level;
  throw InvalidInput("unknown selection scope '" + std::string(s) + "'");
}

namespace {

// Delta classes, in tie-break preference order.
enum Delta { kDec = 0, kSame = 1, kInc = 2 };

template <class T>
Delta delta(T parent, T child) {
  return child < parent ? kDec : child == parent ? kSame : kInc;
}

using Bucket = std::vector<std::size_t>;

// Smallest non-empty bucket; the first one wins ties.
const Bucket* smallest(std::initializer_list<const Bucket*> buckets) {
  const Bucket* best = nullptr;
  for (const Bucket* b : buckets)
    if (!b->empty() && (!best || b->size() < best->size())) best = b;
  return best;
}

}  // namespace

std::vector<std::size_t> divide_select(const std::vector<ChildStats>& children, SelectMethod method,
                                       int budget) {
  // cls[sde delta][hw delta]
  std::array<std::array<Bucket, 3>, 3> cls;
  for (std::size_t i = 0; i < children.size(); ++i) {
    const ChildStats& c = children[i];
    if (c.sde > budget) continue;
    cls[delta(c.parent_sde, c.sde)][delta(c.parent_hw, c.hw)].push_back(i);
  }
  auto join = [](std::initializer_list<const Bucket*> parts) {
    Bucket out;
    for (const Bucket* p : parts) out.insert(out.end(), p->begin(), p->end());
    std::sort(out.begin(), out.end());
    return out;
  };
  const Bucket same = join({&cls[kSame][kDec], &cls[kSame][kSame], &cls[kSame][kInc]});

  switch (method) {
    case SelectMethod::C: {
      const Bucket* best = nullptr;
      for (int s = kDec; s <= kInc; ++s)
        for (int h = kDec; h <= kInc; ++h)
          if (!cls[s][h].empty() && (!best || cls[s][h].size() < best->size())) best = &cls[s][h];
      return best ? *best : Bucket{};
    }
    case SelectMethod::A: {
      const Bucket dec = join({&cls[kDec][kDec], &cls[kDec][kSame], &cls[kDec][kInc]});
      const Bucket inc = join({&cls[kInc][kDec], &cls[kInc][kSame], &cls[kInc][kInc]});
      const Bucket* best = smallest({&dec, &inc});
      return best ? join({best, &same}) : same;
    }
    case SelectMethod::B: {
      // Unchanged Hamming weight goes into both hw classes of its sde side.
      const Bucket s11 = join({&cls[kDec][kDec], &cls[kDec][kSame]});
      const Bucket s10 = join({&cls[kDec][kInc], &cls[kDec][kSame]});
      const Bucket s01 = join({&cls[kInc][kDec], &cls[kInc][kSame]});
      const Bucket s00 = join({&cls[kInc][kInc], &cls[kInc][kSame]});
      const Bucket* best = smallest({&s11, &s10, &s01, &s00});
      return best ? join({best, &same}) : same;
    }
  }
  return {};
}

namespace {

// Paulis P for which <R(P)>^{-1} would merge with an earlier factor on the
// path: P occurs there and everything peeled after it commutes with P. The
// two factors combine into a Clifford, so no optimal path takes that edge.
std::vector<bool> redundant_moves(const std::vector<PauliIndex>& path, std::size_t count) {
  std::vector<bool> out(count + 1, false);
  for (std::size_t j = path.size(); j-- > 0;) {
    bool merges = true;
    for (std::size_t k = j + 1; k < path.size() && merges; ++k)
      merges = pauli_commute(path[j], path[k]);
    if (merges) out[path[j].value()] = true;
  }
  return out;
}

struct Scored {
  std::vector<ChildStats> stats;
  // Child j came from parent j / per and Pauli index j % per + 1.
  std::size_t per = 0;
};

// Node matrices are not kept; each one is rebuilt from the root when needed.
// At four qubits a channel is 1 MiB and frontiers reach thousands of nodes.
ChannelMatrix node_matrix(const ChannelMatrix& root, const SearchNode& node) {
  return peel(node.path, root);
}

Scored score_children(const ChannelMatrix& root, const std::vector<SearchNode>& frontier,
                      int threads) {
  const auto& inv = rp_inv_table(root.num_qubits());
  Scored s;
  s.per = inv.size();
  s.stats.resize(frontier.size() * s.per);
  detail::parallel_for(frontier.size(), threads, [&](std::size_t f) {
    const SearchNode& node = frontier[f];
    const ChannelMatrix m = node_matrix(root, node);
    const RowSummary summary(m);
    const std::vector<bool> skip = redundant_moves(node.path, s.per);
    for (std::size_t p = 0; p < s.per; ++p) {
      if (skip[p + 1]) {
        // Inadmissible under any budget.
        s.stats[f * s.per + p] = {node.sde, node.hw, std::numeric_limits<int>::max(), node.hw};
        continue;
      }
      const MultStats ms = mult_stats(inv[p], m, summary);
      s.stats[f * s.per + p] = {node.sde, node.hw, ms.sde, ms.hamming_weight};
    }
  });
  return s;
}

// Builds the chosen children (ascending indices) and drops exact duplicates.
std::vector<SearchNode> next_frontier(const ChannelMatrix& root, const std::vector<SearchNode>& frontier,
                                      const Scored& s, const std::vector<std::size_t>& chosen,
                                      int threads) {
  const auto& inv = rp_inv_table(root.num_qubits());
  std::vector<std::size_t> groups;  // runs of chosen children sharing a parent
  for (std::size_t i = 0; i < chosen.size(); ++i)
    if (i == 0 || chosen[i] / s.per != chosen[i - 1] / s.per) groups.push_back(i);
  groups.push_back(chosen.size());

  std::vector<SearchNode> built(chosen.size());
  detail::parallel_for(groups.size() - 1, threads, [&](std::size_t g) {
    const SearchNode& parent = frontier[chosen[groups[g]] / s.per];
    const ChannelMatrix m = node_matrix(root, parent);
    for (std::size_t i = groups[g]; i < groups[g + 1]; ++i) {
      const std::size_t p = chosen[i] % s.per;
      const ChannelMatrix c = rp_mult(inv[p], m);
      SearchNode& node = built[i];
      node.path = parent.path;
      node.path.push_back(inv[p].pauli());
      node.sde = c.sde();
      node.hw = c.hamming_weight();
      node.digest = c.digest();
      if (node.sde != s.stats[chosen[i]].sde || node.hw != s.stats[chosen[i]].hw)
        throw InternalError("child statistics disagree with the materialized product");
    }
  });

  std::vector<SearchNode> out;
  std::unordered_multimap<std::uint64_t, std::size_t> index;
  for (SearchNode& node : built) {
    const auto [lo, hi] = index.equal_range(node.digest);
    bool dup = false;
    if (lo != hi) {
      const ChannelMatrix m = node_matrix(root, node);
      for (auto it = lo; it != hi && !dup; ++it) dup = node_matrix(root, out[it->second]) == m;
    }
    if (dup) continue;
    index.emplace(node.digest, out.size());
    out.push_back(std::move(node));
  }
  return out;
}

Decomposition finish(const ChannelMatrix& root, const SearchNode& parent, std::size_t p) {
  const RpCompact& a = rp_inv_table(root.num_qubits())[p];
  Decomposition d{parent.path, rp_mult(a, node_matrix(root, parent))};
  d.paulis.push_back(a.pauli());
  if (!d.clifford.is_clifford()) throw InternalError("sde-0 node is not a Clifford channel");
  return d;
}

}  // namespace

SubroutineResult subroutine_a(const ChannelMatrix& u, int m, const HeuristicConfig& cfg,
                              HeuristicTelemetry* telemetry) {
  if (m < 1) throw InvalidInput("depth bound must be at least 1");
  if (cfg.frontier_cap < 1) throw InvalidInput("frontier cap must be at least 1");
  HeuristicTelemetry local;
  HeuristicTelemetry& tel = telemetry ? *telemetry : local;
  tel.frontier_sizes.clear();

  std::vector<SearchNode> frontier{{{}, u.sde(), u.hamming_weight(), u.digest()}};
  for (int i = 1; i <= m; ++i) {
    const Scored s = score_children(u, frontier, cfg.threads);
    ++tel.levels;
    tel.children_scored += s.stats.size();
    for (std::size_t j = 0; j < s.stats.size(); ++j)
      if (s.stats[j].sde == 0) return {finish(u, frontier[j / s.per], j % s.per), false};

    std::vector<std::size_t> chosen;
    if (cfg.join2 && i == 1 && m >= 2) {
      // Level one only filters; selection happens among the grandchildren.
      for (std::size_t j = 0; j < s.stats.size(); ++j)
        if (s.stats[j].sde <= m - 1) chosen.push_back(j);
    } else if (cfg.scope == SelectScope::Level) {
      chosen = divide_select(s.stats, cfg.method, m - i);
    } else {
      for (std::size_t f = 0; f < frontier.size(); ++f) {
        const std::vector<ChildStats> own(s.stats.begin() + f * s.per,
                                          s.stats.begin() + (f + 1) * s.per);
        for (std::size_t j : divide_select(own, cfg.method, m - i)) chosen.push_back(f * s.per + j);
      }
    }
    if (chosen.empty()) return {};
    frontier = next_frontier(u, frontier, s, chosen, cfg.threads);
    tel.frontier_sizes.push_back(frontier.size());
    tel.max_frontier = std::max(tel.max_frontier, frontier.size());
    if (frontier.size() > cfg.frontier_cap) return {std::nullopt, true};
  }
  return {};
}

HeuristicResult min_t_synth(const ChannelMatrix& u, const HeuristicConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  HeuristicResult res;
  auto stamp = [&] {
    res.telemetry.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  if (u.is_clifford()) {
    res.decomposition = Decomposition{{}, u};
    stamp();
    return res;
  }
  const int n = u.num_qubits();
  const int cap = cfg.m_cap > 0 ? cfg.m_cap : u.sde() + 2 * n + 8;
  bool overflow = false;
  for (int m = std::max(u.sde(), 1); m <= cap; ++m) {
    SubroutineResult r = subroutine_a(u, m, cfg, &res.telemetry);
    if (r.decomposition) {
      if (!verify_decomposition(*r.decomposition, u))
        throw InternalError("heuristic decomposition failed exact reconstruction");
      res.decomposition = std::move(*r.decomposition);
      res.telemetry.final_m = m;
      stamp();
      return res;
    }
    overflow = overflow || r.overflow;
  }
  throw HeuristicInconclusive(
      overflow ? "no decomposition up to depth " + std::to_string(cap) +
                     "; some depths were abandoned at the frontier cap of " +
                     std::to_string(cfg.frontier_cap)
               : "no decomposition up to depth " + std::to_string(cap),
      cap, overflow);
}

}  // namespace tcount
