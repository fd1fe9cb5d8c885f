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
#include <string>
#include <vector>

#include "tcount/channel.hpp"
#include "tcount/pauli.hpp"

namespace tcount {

/// One touched row pair of <R(P)>: entries (i,i) = (l,l) = 1/√2,
/// (i,l) = sign/√2 and (l,i) = -sign/√2, with i < l.
struct RpPair {
  std::uint32_t i = 0;
  std::uint32_t l = 0;
  int sign = 1;

  friend bool operator==(const RpPair&, const RpPair&) = default;
};

/// Compact form of <R(P)>: N^2/4 row pairs. Rows not mentioned are identity
/// rows.
class RpCompact {
 public:
  RpCompact() = default;
  RpCompact(PauliIndex pauli, std::vector<RpPair> pairs, bool inverse)
      : pauli_(pauli), pairs_(std::move(pairs)), inverse_(inverse) {}

  int num_qubits() const { return pauli_.num_qubits(); }
  PauliIndex pauli() const { return pauli_; }
  const std::vector<RpPair>& pairs() const { return pairs_; }
  /// True for the compact form of <R(P)>^{-1}.
  bool is_inverse() const { return inverse_; }

  /// e.g. "P=IZXY: (3,+7)(5,-6)..."
  std::string debug_string() const;

  friend bool operator==(const RpCompact&, const RpCompact&) = default;

 private:
  PauliIndex pauli_;
  std::vector<RpPair> pairs_;
  bool inverse_ = false;
};

/// Builds the compact form from commutation data alone. Throws InvalidInput
/// for the identity.
RpCompact rp_compact(PauliIndex p);

/// Compact forms of all non-identity Paulis on n qubits, element p - 1 for
/// Pauli index p. Built once per n and shared.
const std::vector<RpCompact>& rp_table(int n);
const std::vector<RpCompact>& rp_inv_table(int n);

/// Dense matrix of the compact form.
ChannelMatrix expand(const RpCompact& rp);

/// Flips every pair sign: the compact form of the inverse.
RpCompact rp_inv(const RpCompact& rp);

/// rp * v, in time linear in the size of v.
ChannelMatrix rp_mult(const RpCompact& rp, const ChannelMatrix& v);

struct MultStats {
  int sde = 0;
  std::size_t hamming_weight = 0;
};

struct MultResult {
  ChannelMatrix matrix;
  int sde = 0;
  std::size_t hamming_weight = 0;
};

/// rp * v together with its sde and Hamming weight.
MultResult sde_delta_mult(const RpCompact& rp, const ChannelMatrix& v, int sde_v);

/// Per-row summaries of a matrix that let mult_stats skip untouched rows.
class RowSummary {
 public:
  explicit RowSummary(const ChannelMatrix& v);

  std::size_t row_weight(std::size_t r) const { return weight_[r]; }
  /// Some a numerator in row r is odd.
  bool row_has_odd_a(std::size_t r) const { return odd_a_[r] != 0; }
  /// Some b numerator in row r is odd.
  bool row_has_odd_b(std::size_t r) const { return odd_b_[r] != 0; }

 private:
  std::vector<std::size_t> weight_;
  std::vector<std::uint8_t> odd_a_;
  std::vector<std::uint8_t> odd_b_;
};

/// sde and Hamming weight of rp * v without building the product.
MultStats mult_stats(const RpCompact& rp, const ChannelMatrix& v, const RowSummary& summary);

}  // namespace tcount
