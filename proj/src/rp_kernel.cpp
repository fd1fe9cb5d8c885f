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

#include "tcount/rp_kernel.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "tcount/errors.hpp"

namespace tcount {

std::string RpCompact::debug_string() const {
  std::string out = "P=" + pauli_.str() + ":";
  if (inverse_) out += " inv";
  out += ' ';
  for (const RpPair& p : pairs_) {
    out += '(' + std::to_string(p.i) + ',' + (p.sign > 0 ? '+' : '-') + std::to_string(p.l) + ')';
  }
  return out;
}

RpCompact rp_compact(PauliIndex p) {
  if (p.is_identity()) throw InvalidInput("R(I) is not a T-count-one factor");
  const int n = p.num_qubits();
  const std::uint32_t np = pauli_count(n);
  std::vector<RpPair> pairs;
  pairs.reserve(np / 4);
  for (std::uint32_t r = 0; r < np; ++r) {
    const PauliIndex pr(n, r);
    if (pauli_commute(pr, p)) continue;
    const std::uint32_t l = r ^ p.value();
    if (l < r) continue;
    // <R(P)>_{rl} = i^{E+1}/√2 where P_r P_l P = i^E I.
    const auto [ph1, q] = pauli_mul(pr, PauliIndex(n, l));
    const auto [ph2, id] = pauli_mul(q, p);
    if (!id.is_identity()) throw InternalError("partner row does not close to identity");
    const int e = (ph1 * ph2).exponent();
    if (e % 2 == 0) throw InternalError("off-diagonal entry of R(P) is not real");
    pairs.push_back({r, l, e == 1 ? -1 : 1});
  }
  return RpCompact(p, std::move(pairs), false);
}

RpCompact rp_inv(const RpCompact& rp) {
  std::vector<RpPair> pairs = rp.pairs();
  for (RpPair& p : pairs) p.sign = -p.sign;
  return RpCompact(rp.pauli(), std::move(pairs), !rp.is_inverse());
}

namespace {

struct Tables {
  std::vector<RpCompact> forward;
  std::vector<RpCompact> inverse;
};

const Tables& tables(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Tables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<Tables>();
    for (std::uint32_t p = 1; p < pauli_count(n); ++p) {
      slot->forward.push_back(rp_compact(PauliIndex(n, p)));
      slot->inverse.push_back(rp_inv(slot->forward.back()));
    }
  }
  return *slot;
}

void check_dims(const RpCompact& rp, const ChannelMatrix& v) {
  if (rp.num_qubits() != v.num_qubits()) throw InvalidInput("channel dimension mismatch");
  if (v.exponent() + 1 > kMaxChannelExponent)
    throw ArithmeticOverflow("channel exponent too large");
}

template <int S>
void combine_rows(const std::int64_t* ai, const std::int64_t* bi, const std::int64_t* al,
                  const std::int64_t* bl, std::int64_t* wai, std::int64_t* wbi, std::int64_t* wal,
                  std::int64_t* wbl, std::size_t d) {
  for (std::size_t c = 0; c < d; ++c) {
    wai[c] = ai[c] + S * al[c];
    wbi[c] = bi[c] + S * bl[c];
    wal[c] = al[c] - S * ai[c];
    wbl[c] = bl[c] - S * bi[c];
  }
}

struct PairStats {
  std::uint64_t odd0 = 0;  // bit 0: some a at exponent K+1 is odd
  std::uint64_t odd1 = 0;  // bit 0: some b at exponent K+1 is odd
  std::uint64_t odd2 = 0;  // bit 0: some a/2 at exponent K+1 is odd
  std::size_t weight = 0;
};

template <int S>
void pair_stats(const std::int64_t* ai, const std::int64_t* bi, const std::int64_t* al,
                const std::int64_t* bl, std::size_t d, PairStats& st) {
  std::uint64_t o0 = 0, o1 = 0, o2 = 0;
  std::size_t w = 0;
  for (std::size_t c = 0; c < d; ++c) {
    const std::int64_t x = ai[c] + S * al[c];
    const std::int64_t y = bi[c] + S * bl[c];
    const std::int64_t x2 = al[c] - S * ai[c];
    const std::int64_t y2 = bl[c] - S * bi[c];
    o0 |= static_cast<std::uint64_t>(x);
    o1 |= static_cast<std::uint64_t>(y);
    o2 |= static_cast<std::uint64_t>((x >> 1) | (x2 >> 1));
    w += static_cast<std::size_t>((x | y) != 0) + static_cast<std::size_t>((x2 | y2) != 0);
  }
  st.odd0 |= o0;
  st.odd1 |= o1;
  st.odd2 |= o2;
  st.weight += w;
}

}  // namespace

const std::vector<RpCompact>& rp_table(int n) { return tables(n).forward; }
const std::vector<RpCompact>& rp_inv_table(int n) { return tables(n).inverse; }

ChannelMatrix expand(const RpCompact& rp) {
  return rp_mult(rp, ChannelMatrix::identity(rp.num_qubits()));
}

ChannelMatrix rp_mult(const RpCompact& rp, const ChannelMatrix& v) {
  check_dims(rp, v);
  const std::size_t d = v.dim();
  const auto va = v.a(), vb = v.b();
  std::vector<std::int64_t> a(d * d), b(d * d);
  std::vector<std::uint8_t> touched(d, 0);
  for (const RpPair& p : rp.pairs()) {
    touched[p.i] = touched[p.l] = 1;
    const std::size_t oi = p.i * d, ol = p.l * d;
    if (p.sign > 0)
      combine_rows<1>(&va[oi], &vb[oi], &va[ol], &vb[ol], &a[oi], &b[oi], &a[ol], &b[ol], d);
    else
      combine_rows<-1>(&va[oi], &vb[oi], &va[ol], &vb[ol], &a[oi], &b[oi], &a[ol], &b[ol], d);
  }
  // Identity rows re-expressed over √2^(K+1): (a + b√2) √2 = 2b + a√2.
  for (std::size_t r = 0; r < d; ++r) {
    if (touched[r]) continue;
    for (std::size_t c = r * d; c < (r + 1) * d; ++c) {
      a[c] = 2 * vb[c];
      b[c] = va[c];
    }
  }
  return ChannelMatrix::from_numerators(v.num_qubits(), v.exponent() + 1, std::move(a),
                                        std::move(b));
}

MultResult sde_delta_mult(const RpCompact& rp, const ChannelMatrix& v, int sde_v) {
  if (sde_v != v.sde()) throw InvalidInput("stale sde passed to sde_delta_mult");
  ChannelMatrix w = rp_mult(rp, v);
  const int s = w.sde();
  const std::size_t hw = w.hamming_weight();
  return {std::move(w), s, hw};
}

RowSummary::RowSummary(const ChannelMatrix& v)
    : weight_(v.dim(), 0), odd_a_(v.dim(), 0), odd_b_(v.dim(), 0) {
  const std::size_t d = v.dim();
  const auto va = v.a(), vb = v.b();
  for (std::size_t r = 0; r < d; ++r) {
    std::uint64_t oa = 0, ob = 0;
    std::size_t w = 0;
    for (std::size_t c = r * d; c < (r + 1) * d; ++c) {
      oa |= static_cast<std::uint64_t>(va[c]);
      ob |= static_cast<std::uint64_t>(vb[c]);
      w += static_cast<std::size_t>((va[c] | vb[c]) != 0);
    }
    weight_[r] = w;
    odd_a_[r] = static_cast<std::uint8_t>(oa & 1);
    odd_b_[r] = static_cast<std::uint8_t>(ob & 1);
  }
}

MultStats mult_stats(const RpCompact& rp, const ChannelMatrix& v, const RowSummary& summary) {
  check_dims(rp, v);
  const std::size_t d = v.dim();
  const auto va = v.a(), vb = v.b();
  PairStats st;
  std::size_t touched_weight = 0;
  std::size_t untouched_odd_a = 0, untouched_odd_b = 0;
  std::size_t total_odd_a = 0, total_odd_b = 0, total_weight = 0;
  for (std::size_t r = 0; r < d; ++r) {
    total_odd_a += summary.row_has_odd_a(r);
    total_odd_b += summary.row_has_odd_b(r);
    total_weight += summary.row_weight(r);
  }
  untouched_odd_a = total_odd_a;
  untouched_odd_b = total_odd_b;
  for (const RpPair& p : rp.pairs()) {
    for (std::uint32_t r : {p.i, p.l}) {
      touched_weight += summary.row_weight(r);
      untouched_odd_a -= summary.row_has_odd_a(r);
      untouched_odd_b -= summary.row_has_odd_b(r);
    }
    const std::size_t oi = p.i * d, ol = p.l * d;
    if (p.sign > 0)
      pair_stats<1>(&va[oi], &vb[oi], &va[ol], &vb[ol], d, st);
    else
      pair_stats<-1>(&va[oi], &vb[oi], &va[ol], &vb[ol], d, st);
  }

  MultStats out;
  out.hamming_weight = total_weight - touched_weight + st.weight;
  // Walk the product's exponent down from K+1 while every a numerator is even.
  // Untouched rows carry (2b, a) at K+1, then (a, b) at K.
  int k = v.exponent() + 1;
  if (st.odd0 & 1) {
    out.sde = k;
    return out;
  }
  --k;
  if (k == 0 || (st.odd1 & 1) || untouched_odd_a > 0) {
    out.sde = k;
    return out;
  }
  --k;
  if (k == 0 || (st.odd2 & 1) || untouched_odd_b > 0) {
    out.sde = k;
    return out;
  }
  // Not reachable for orthogonal inputs; settle it the slow way.
  out.sde = rp_mult(rp, v).sde();
  return out;
}

}  // namespace tcount
