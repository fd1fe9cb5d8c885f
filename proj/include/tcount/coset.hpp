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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "tcount/channel.hpp"
#include "tcount/pauli.hpp"

namespace tcount {

/// Canonical representative of the left coset W<C_n>: every column scaled so
/// its first non-zero numerator pair is positive, then columns sorted.
class CosetLabel {
 public:
  CosetLabel() = default;

  const ChannelMatrix& matrix() const { return m_; }
  std::uint64_t digest() const { return digest_; }

  friend bool operator==(const CosetLabel& x, const CosetLabel& y) {
    return x.digest_ == y.digest_ && x.m_ == y.m_;
  }

 private:
  friend CosetLabel coset_label(const ChannelMatrix& w);
  explicit CosetLabel(ChannelMatrix m) : m_(std::move(m)), digest_(m_.digest()) {}

  ChannelMatrix m_;
  std::uint64_t digest_ = 0;
};

/// Throws InvalidInput for a matrix with a zero column.
CosetLabel coset_label(const ChannelMatrix& w);

/// Row-major lexicographic order of the entries under ring_compare.
std::strong_ordering label_compare(const CosetLabel& x, const CosetLabel& y);

struct CosetEntry {
  CosetLabel label;
  /// W = <R(witness[0])> <R(witness[1])> ... ; length k.
  std::vector<PauliIndex> witness;
};

/// D_k: one entry per coset of T-count k, sorted by label.
class CosetDatabase {
 public:
  CosetDatabase() = default;
  CosetDatabase(int n, int k, std::vector<CosetEntry> entries);

  int num_qubits() const { return n_; }
  int level() const { return k_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<CosetEntry>& entries() const { return entries_; }

  /// Binary search; the witness of the matching entry.
  const std::vector<PauliIndex>* lookup(const CosetLabel& label) const;

  /// Bytes held by labels and witnesses.
  std::size_t memory_bytes() const;

  /// Fixed-width little-endian file: "TCDB1", n, k, count, records.
  void save(const std::filesystem::path& path) const;
  static CosetDatabase load(const std::filesystem::path& path);

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<CosetEntry> entries_;
};

/// Channel of a witness: <R(w0)> <R(w1)> ... <R(w_{k-1})>.
ChannelMatrix witness_matrix(int n, const std::vector<PauliIndex>& witness);

struct DatabaseOptions {
  /// Cap on the summed memory_bytes() of all levels.
  std::size_t memory_cap_bytes = std::size_t{2} << 30;
  /// Directory for cached files; empty disables caching.
  std::filesystem::path directory;
  int threads = 1;
};

/// D_0 .. D_kmax. Throws ResourceCapExceeded when the memory cap is hit.
std::vector<CosetDatabase> build_databases(int n, int kmax, const DatabaseOptions& opts = {});

/// Cache file name for level k on n qubits inside dir.
std::filesystem::path database_file(const std::filesystem::path& dir, int n, int k);

}  // namespace tcount
