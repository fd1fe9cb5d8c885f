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

#include "tcount/provable.hpp"

#include <cstring>

#include "tcount/errors.hpp"
#include "tcount/rp_kernel.hpp"
#include "tcount/unitary.hpp"

namespace tcount {

ProvableSearcher::ProvableSearcher(int n, const ProvableConfig& cfg) : n_(n), cfg_(cfg) {
  if (cfg.m < 1) throw InvalidInput("T-count bound m must be at least 1");
  if (cfg.c < 2) throw InvalidInput("trade-off parameter c must be at least 2");
  depth_ = (cfg.m + cfg.c - 1) / cfg.c;
  DatabaseOptions opts;
  opts.memory_cap_bytes = cfg.memory_cap_bytes;
  opts.directory = cfg.db_dir;
  opts.threads = cfg.threads;
  dbs_ = build_databases(n, depth_, opts);
}

std::size_t ProvableSearcher::database_bytes() const {
  std::size_t total = 0;
  for (const auto& db : dbs_) total += db.memory_bytes();
  return total;
}

std::optional<int> ProvableSearcher::decide(const ChannelMatrix& u) const {
  return decide_bounded(u, cfg_.m);
}

std::optional<int> ProvableSearcher::decide_bounded(const ChannelMatrix& u, int bound) const {
  if (u.num_qubits() != n_) throw InvalidInput("channel width does not match the databases");
  if (bound < 0) return std::nullopt;
  const int step = depth_;
  const CosetLabel label = coset_label(u);
  for (int j = 0; j <= std::min(step, bound); ++j)
    if (dbs_[j].lookup(label)) return j;
  if (bound <= step) return std::nullopt;

  // T-count t in (base, base + step]: split off a prefix W of r = t - base
  // factors from D_r and ask whether W^† U has T-count at most base. Scanning t
  // upward makes the first hit the exact T-count.
  for (int base = step; base < bound; base += step) {
    const int top = std::min(base + step, bound);
    for (int t = base + 1; t <= top; ++t) {
      const int r = t - base;
      for (const CosetEntry& e : dbs_[r].entries()) {
        const ChannelMatrix v = peel(e.witness, u);
        const std::optional<int> rest = decide_bounded(v, base);
        if (!rest) continue;
        if (r + *rest != t)
          throw InternalError("nested search found T-count " + std::to_string(r + *rest) +
                              " after ruling out everything below " + std::to_string(t));
        return t;
      }
    }
  }
  return std::nullopt;
}

Decomposition ProvableSearcher::decompose(const ChannelMatrix& u, int t) const {
  Decomposition d;
  ChannelMatrix cur = u;
  const auto& inv = rp_inv_table(n_);
  for (int s = t; s > 0; --s) {
    bool found = false;
    for (const RpCompact& a : inv) {
      ChannelMatrix v = rp_mult(a, cur);
      const std::optional<int> rest = decide_bounded(v, s - 1);
      if (rest && *rest == s - 1) {
        d.paulis.push_back(a.pauli());
        cur = std::move(v);
        found = true;
        break;
      }
    }
    if (!found)
      throw InternalError("no R(P) factor peels T-count " + std::to_string(s) + " down by one");
  }
  if (!cur.is_clifford()) throw InternalError("peeled remainder is not Clifford");
  d.clifford = std::move(cur);
  return d;
}

std::optional<int> count_t_decide(const ChannelMatrix& u, const ProvableConfig& cfg) {
  return ProvableSearcher(u.num_qubits(), cfg).decide(u);
}

Decomposition decomposition_from_decision(const ChannelMatrix& u, int t,
                                          const ProvableConfig& cfg) {
  ProvableConfig c = cfg;
  c.m = std::max(c.m, t);
  return ProvableSearcher(u.num_qubits(), c).decompose(u, t);
}

// ---------------------------------------------------------------------------

namespace {

// Byte string of the canonical label entries; the dedup key of the oracle.
std::string label_key(const ChannelMatrix& w) {
  const CosetLabel label = coset_label(w);
  std::string key;
  for (const RealRingElt& x : label.matrix().entries()) {
    const std::int64_t v[2] = {x.a(), x.b()};
    const int k = x.k();
    key.append(reinterpret_cast<const char*>(v), sizeof v);
    key.append(reinterpret_cast<const char*>(&k), sizeof k);
  }
  return key;
}

}  // namespace

BruteForceOracle::BruteForceOracle(int n, std::size_t frontier_cap) : n_(n), cap_(frontier_cap) {
  if (n < 1 || n > 3) throw InvalidInput("brute-force oracle supports 1 to 3 qubits");
  for (std::uint32_t p = 1; p < pauli_count(n); ++p)
    rotations_.push_back(channel_of_unitary(rotation_matrix(PauliIndex(n, p))));
  const ChannelMatrix id = ChannelMatrix::identity(n);
  seen_.emplace(label_key(id), 0);
  layers_.push_back({id});
}

void BruteForceOracle::grow() {
  const int k = static_cast<int>(layers_.size());
  std::vector<ChannelMatrix> next;
  for (const ChannelMatrix& m : layers_.back())
    for (const ChannelMatrix& r : rotations_) {
      ChannelMatrix w = dense_channel_mul(r, m);
      if (seen_.emplace(label_key(w), k).second) {
        next.push_back(std::move(w));
        if (next.size() > cap_)
          throw ResourceCapExceeded("brute-force frontier exceeded its cap at layer " +
                                        std::to_string(k),
                                    next.size());
      }
    }
  layers_.push_back(std::move(next));
}

const std::vector<ChannelMatrix>& BruteForceOracle::layer(int k) {
  while (static_cast<int>(layers_.size()) <= k) grow();
  return layers_[k];
}

std::optional<int> BruteForceOracle::tcount(const ChannelMatrix& u, int mmax) {
  if (u.num_qubits() != n_) throw InvalidInput("channel width does not match the oracle");
  const std::string key = label_key(u);
  for (;;) {
    if (auto it = seen_.find(key); it != seen_.end()) {
      if (it->second <= mmax) return it->second;
      return std::nullopt;
    }
    if (static_cast<int>(layers_.size()) > mmax) return std::nullopt;
    grow();
  }
}

std::optional<int> tcount_bruteforce(const ChannelMatrix& u, int mmax) {
  return BruteForceOracle(u.num_qubits()).tcount(u, mmax);
}

}  // namespace tcount
