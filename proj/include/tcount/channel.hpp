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
#include <span>
#include <vector>

#include "tcount/ring.hpp"
#include "tcount/unitary.hpp"

namespace tcount {

/// The channel representation <U>: a real N^2 x N^2 matrix over Z[1/√2] with
/// rows and columns indexed by Pauli strings (see PauliIndex).
///
/// Storage keeps every entry over one common denominator √2^exponent, as two
/// numerator planes a and b (entry = (a + b√2) / √2^exponent). The exponent
/// is kept minimal, which makes it the sde of the matrix and makes the
/// representation canonical: two matrices are equal iff their exponents and
/// numerator planes are equal.
class ChannelMatrix {
 public:
  ChannelMatrix() = default;

  static ChannelMatrix identity(int n);
  static ChannelMatrix zero(int n);
  /// Row-major entries, dim() * dim() of them.
  static ChannelMatrix from_entries(int n, const std::vector<RealRingElt>& entries);
  /// Numerator planes over √2^exponent; reduced to the minimal exponent.
  static ChannelMatrix from_numerators(int n, int exponent, std::vector<std::int64_t> a,
                                       std::vector<std::int64_t> b);

  int num_qubits() const { return n_; }
  /// N^2 = 4^n.
  std::size_t dim() const { return dim_; }

  RealRingElt operator()(std::size_t r, std::size_t c) const {
    const std::size_t i = r * dim_ + c;
    return RealRingElt::reduce(a_[i], b_[i], exponent_);
  }
  std::vector<RealRingElt> entries() const;

  int exponent() const { return exponent_; }
  int sde() const { return exponent_; }
  std::size_t hamming_weight() const;
  /// Signed permutation test: one ±1 in every row and column.
  bool is_clifford() const;

  std::span<const std::int64_t> a() const { return a_; }
  std::span<const std::int64_t> b() const { return b_; }

  ChannelMatrix transpose() const;
  /// FNV-1a over the canonical numerator planes; stable across platforms.
  std::uint64_t digest() const;

  friend bool operator==(const ChannelMatrix&, const ChannelMatrix&) = default;

 private:
  ChannelMatrix(int n, int exponent, std::vector<std::int64_t> a, std::vector<std::int64_t> b);
  void normalize();

  int n_ = 0;
  std::size_t dim_ = 0;
  int exponent_ = 0;
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> b_;
};

/// Largest exponent the int64 numerator planes are allowed to carry. An
/// orthogonal matrix at this exponent has numerators below 2^51.
inline constexpr int kMaxChannelExponent = 100;

/// <U>_rs = Tr(P_r U P_s U^†) / 2^n, exactly. Throws InvalidInput when U is
/// not unitary.
ChannelMatrix channel_of_unitary(const UnitaryMatrix& u);

/// Exact dense product.
ChannelMatrix dense_channel_mul(const ChannelMatrix& x, const ChannelMatrix& y);

/// Kronecker product; <V ⊗ U> = <V> ⊗ <U>.
ChannelMatrix channel_tensor(const ChannelMatrix& x, const ChannelMatrix& y);

inline int sde_matrix(const ChannelMatrix& m) { return m.sde(); }
inline std::size_t hamming_weight(const ChannelMatrix& m) { return m.hamming_weight(); }
inline bool is_clifford_channel(const ChannelMatrix& m) { return m.is_clifford(); }

/// Exact T-count of a single-qubit unitary: sde(<U>).
int tcount_single_qubit(const UnitaryMatrix& u);

}  // namespace tcount
