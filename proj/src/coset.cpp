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

#include "tcount/coset.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <numeric>
#include <unordered_map>

#include "checked.hpp"
#include "parallel.hpp"
#include "tcount/errors.hpp"
#include "tcount/rp_kernel.hpp"

namespace tcount {

CosetLabel coset_label(const ChannelMatrix& w) {
  const std::size_t d = w.dim();
  if (d == 0) throw InvalidInput("empty channel matrix");
  const auto wa = w.a(), wb = w.b();
  // Column-major copy with the sign rule applied.
  std::vector<std::int64_t> ca(d * d), cb(d * d);
  for (std::size_t c = 0; c < d; ++c) {
    int sign = 0;
    for (std::size_t r = 0; r < d && sign == 0; ++r) {
      const std::int64_t a = wa[r * d + c], b = wb[r * d + c];
      if (a != 0 || b != 0) sign = (a < 0 || (a == 0 && b < 0)) ? -1 : 1;
    }
    if (sign == 0) throw InvalidInput("channel matrix has a zero column");
    for (std::size_t r = 0; r < d; ++r) {
      ca[c * d + r] = sign * wa[r * d + c];
      cb[c * d + r] = sign * wb[r * d + c];
    }
  }
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    for (std::size_t r = 0; r < d; ++r) {
      const std::int64_t da = ca[x * d + r] - ca[y * d + r];
      const std::int64_t db = cb[x * d + r] - cb[y * d + r];
      if (da != 0 || db != 0) return sign_of(da, db) < 0;
    }
    return false;
  });
  std::vector<std::int64_t> a(d * d), b(d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t r = 0; r < d; ++r) {
      a[r * d + j] = ca[order[j] * d + r];
      b[r * d + j] = cb[order[j] * d + r];
    }
  return CosetLabel(
      ChannelMatrix::from_numerators(w.num_qubits(), w.exponent(), std::move(a), std::move(b)));
}

std::strong_ordering label_compare(const CosetLabel& x, const CosetLabel& y) {
  const ChannelMatrix& p = x.matrix();
  const ChannelMatrix& q = y.matrix();
  if (p.num_qubits() != q.num_qubits()) return p.num_qubits() <=> q.num_qubits();
  const int k = std::max(p.exponent(), q.exponent());
  const auto pa = p.a(), pb = p.b(), qa = q.a(), qb = q.b();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    std::int64_t a1 = pa[i], b1 = pb[i], a2 = qa[i], b2 = qb[i];
    if (p.exponent() == q.exponent() && a1 == a2 && b1 == b2) continue;
    detail::scale_sqrt2(a1, b1, k - p.exponent());
    detail::scale_sqrt2(a2, b2, k - q.exponent());
    const int s = sign_of(detail::sub(a1, a2), detail::sub(b1, b2));
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

CosetDatabase::CosetDatabase(int n, int k, std::vector<CosetEntry> entries)
    : n_(n), k_(k), entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (label_compare(entries_[i - 1].label, entries_[i].label) >= 0)
      throw InvalidInput("coset database is not strictly sorted");
}

const std::vector<PauliIndex>* CosetDatabase::lookup(const CosetLabel& label) const {
  std::size_t lo = 0, hi = entries_.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const auto c = label_compare(entries_[mid].label, label);
    if (c == 0) return &entries_[mid].witness;
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return nullptr;
}

std::size_t CosetDatabase::memory_bytes() const {
  const std::size_t d = pauli_count(n_);
  const std::size_t per_entry =
      sizeof(CosetEntry) + 2 * sizeof(std::int64_t) * d * d + sizeof(PauliIndex) * k_;
  return per_entry * entries_.size();
}

namespace {

constexpr char kMagic[5] = {'T', 'C', 'D', 'B', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 8);
}

void put_u32(std::ostream& out, std::uint32_t v) {
  char buf[4];
  for (int i = 0; i < 4; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 4);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char buf[8];
  if (!in.read(reinterpret_cast<char*>(buf), 8)) throw InvalidInput("truncated database file");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | buf[i];
  return v;
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char buf[4];
  if (!in.read(reinterpret_cast<char*>(buf), 4)) throw InvalidInput("truncated database file");
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | buf[i];
  return v;
}

}  // namespace

void CosetDatabase::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out.write(kMagic, sizeof kMagic);
  put_u32(out, static_cast<std::uint32_t>(n_));
  put_u32(out, static_cast<std::uint32_t>(k_));
  put_u64(out, entries_.size());
  for (const CosetEntry& e : entries_) {
    put_u64(out, e.label.digest());
    for (const PauliIndex& p : e.witness) put_u32(out, p.value());
    // canonical [a, b, k] per entry, row-major
    for (const RealRingElt& x : e.label.matrix().entries()) {
      put_u64(out, static_cast<std::uint64_t>(x.a()));
      put_u64(out, static_cast<std::uint64_t>(x.b()));
      put_u32(out, static_cast<std::uint32_t>(x.k()));
    }
  }
  if (!out) throw InvalidInput("failed writing " + path.string());
}

CosetDatabase CosetDatabase::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  char magic[sizeof kMagic];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    throw InvalidInput("not a coset database file: " + path.string());
  const int n = static_cast<int>(get_u32(in));
  const int k = static_cast<int>(get_u32(in));
  const std::uint64_t count = get_u64(in);
  if (n < 1 || n > 5 || k < 0 || k > 64) throw InvalidInput("bad database header");
  const std::size_t d = pauli_count(n);
  std::vector<CosetEntry> entries;
  entries.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t digest = get_u64(in);
    std::vector<PauliIndex> witness;
    for (int j = 0; j < k; ++j) witness.emplace_back(n, get_u32(in));
    std::vector<RealRingElt> values(d * d);
    for (auto& v : values) {
      const auto a = static_cast<std::int64_t>(get_u64(in));
      const auto b = static_cast<std::int64_t>(get_u64(in));
      const auto e = static_cast<int>(get_u32(in));
      v = RealRingElt::reduce(a, b, e);
    }
    // A stored label must be its own label and carry the stored digest.
    const ChannelMatrix m = ChannelMatrix::from_entries(n, values);
    CosetLabel label = coset_label(m);
    if (label.matrix() != m || label.digest() != digest)
      throw InvalidInput("corrupt database record in " + path.string());
    entries.push_back({std::move(label), std::move(witness)});
  }
  return CosetDatabase(n, k, std::move(entries));
}

ChannelMatrix witness_matrix(int n, const std::vector<PauliIndex>& witness) {
  ChannelMatrix m = ChannelMatrix::identity(n);
  for (auto it = witness.rbegin(); it != witness.rend(); ++it)
    m = rp_mult(rp_table(n)[it->value() - 1], m);
  return m;
}

std::filesystem::path database_file(const std::filesystem::path& dir, int n, int k) {
  return dir / ("tcdb_n" + std::to_string(n) + "_k" + std::to_string(k) + ".bin");
}

namespace {

CosetDatabase level_zero(int n) {
  return CosetDatabase(n, 0, {{coset_label(ChannelMatrix::identity(n)), {}}});
}

// Extends `prev` (level k-1, with its matrices) by one R(P) factor.
CosetDatabase extend(const std::vector<CosetDatabase>& lower,
                     const std::vector<ChannelMatrix>& prev_mats,
                     std::vector<ChannelMatrix>& out_mats, std::size_t used_bytes,
                     const DatabaseOptions& opts) {
  const CosetDatabase& prev = lower.back();
  const int n = prev.num_qubits();
  const int k = prev.level() + 1;
  const auto& table = rp_table(n);
  const std::size_t fan = table.size();
  const std::size_t d = pauli_count(n);
  const std::size_t entry_bytes =
      sizeof(CosetEntry) + 4 * sizeof(std::int64_t) * d * d + sizeof(PauliIndex) * k;

  std::vector<CosetEntry> fresh;
  std::vector<ChannelMatrix> fresh_mats;
  std::unordered_multimap<std::uint64_t, std::size_t> by_digest;

  constexpr std::size_t kBlock = 64;
  for (std::size_t start = 0; start < prev.size(); start += kBlock) {
    const std::size_t stop = std::min(prev.size(), start + kBlock);
    std::vector<ChannelMatrix> mats((stop - start) * fan);
    std::vector<CosetLabel> labels(mats.size());
    detail::parallel_for(mats.size(), opts.threads, [&](std::size_t i) {
      const std::size_t m = start + i / fan;
      mats[i] = rp_mult(table[i % fan], prev_mats[m]);
      labels[i] = coset_label(mats[i]);
    });
    for (std::size_t i = 0; i < mats.size(); ++i) {
      const CosetLabel& lab = labels[i];
      bool seen = false;
      for (const CosetDatabase& db : lower)
        if (db.lookup(lab)) {
          seen = true;
          break;
        }
      if (seen) continue;
      auto [lo, hi] = by_digest.equal_range(lab.digest());
      for (auto it = lo; it != hi && !seen; ++it) seen = fresh[it->second].label == lab;
      if (seen) continue;
      std::vector<PauliIndex> witness{table[i % fan].pauli()};
      const auto& tail = prev.entries()[start + i / fan].witness;
      witness.insert(witness.end(), tail.begin(), tail.end());
      by_digest.emplace(lab.digest(), fresh.size());
      fresh.push_back({lab, std::move(witness)});
      fresh_mats.push_back(std::move(mats[i]));
      const std::size_t total = used_bytes + fresh.size() * entry_bytes;
      if (total > opts.memory_cap_bytes)
        throw ResourceCapExceeded("coset database memory cap exceeded at level " +
                                      std::to_string(k) + " after " +
                                      std::to_string(fresh.size()) + " entries",
                                  total);
    }
  }

  std::vector<std::size_t> order(fresh.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return label_compare(fresh[x].label, fresh[y].label) < 0;
  });
  std::vector<CosetEntry> sorted;
  sorted.reserve(fresh.size());
  out_mats.clear();
  out_mats.reserve(fresh.size());
  for (std::size_t i : order) {
    sorted.push_back(std::move(fresh[i]));
    out_mats.push_back(std::move(fresh_mats[i]));
  }
  return CosetDatabase(n, k, std::move(sorted));
}

}  // namespace

std::vector<CosetDatabase> build_databases(int n, int kmax, const DatabaseOptions& opts) {
  if (n < 1 || n > 5) throw InvalidInput("qubit count out of range");
  if (kmax < 0) throw InvalidInput("negative database level");
  std::vector<CosetDatabase> levels{level_zero(n)};
  std::vector<ChannelMatrix> mats{ChannelMatrix::identity(n)};
  std::size_t used = levels[0].memory_bytes();
  const bool cached = !opts.directory.empty();
  if (cached) std::filesystem::create_directories(opts.directory);
  for (int k = 1; k <= kmax; ++k) {
    const auto file = cached ? database_file(opts.directory, n, k) : std::filesystem::path{};
    std::vector<ChannelMatrix> next;
    CosetDatabase db;
    if (cached && std::filesystem::exists(file)) {
      db = CosetDatabase::load(file);
      if (db.num_qubits() != n || db.level() != k) throw InvalidInput("mismatched database file");
      for (const CosetEntry& e : db.entries()) next.push_back(witness_matrix(n, e.witness));
    } else {
      db = extend(levels, mats, next, used, opts);
      if (cached) db.save(file);
    }
    used += db.memory_bytes();
    if (used > opts.memory_cap_bytes)
      throw ResourceCapExceeded("coset database memory cap exceeded at level " + std::to_string(k),
                                used);
    levels.push_back(std::move(db));
    mats = std::move(next);
  }
  return levels;
}

}  // namespace tcount
