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

#include <gtest/gtest.h>

#include <random>

#include "tcount/circuit.hpp"
#include "tcount/errors.hpp"
#include "tcount/rp_kernel.hpp"
#include "test_util.hpp"

namespace tcount {
namespace {

using testing::channel_of;

RealRingElt R(std::int64_t a, std::int64_t b, int k) { return RealRingElt::reduce(a, b, k); }

// Random channel from a random Clifford+T circuit.
ChannelMatrix random_channel(int n, int t, std::mt19937_64& rng) {
  return channel_of(fixtures::random_circuit(n, t, rng()));
}

TEST(RpKernel, SingleQubitZ) {
  const RpCompact z = rp_compact(PauliIndex::parse("Z"));
  ASSERT_EQ(z.pairs().size(), 1u);
  EXPECT_EQ(z.pairs()[0], (RpPair{1, 2, -1}));
  EXPECT_EQ(expand(z), channel_of(Circuit(1, {Gate::single(GateKind::T, 1)})));
  EXPECT_EQ(rp_inv(z).pairs()[0], (RpPair{1, 2, 1}));
  EXPECT_EQ(expand(rp_inv(z)), channel_of(Circuit(1, {Gate::single(GateKind::Tdg, 1)})));
  EXPECT_EQ(z.debug_string(), "P=Z: (1,-2)");
  EXPECT_EQ(rp_compact(PauliIndex::parse("X")).pairs().size(), 1u);
  EXPECT_THROW(rp_compact(PauliIndex::identity(2)), InvalidInput);
}

TEST(RpKernel, ExpandMatchesDefinitionExhaustive) {
  for (int n = 1; n <= 3; ++n)
    for (std::uint32_t p = 1; p < pauli_count(n); ++p) {
      const PauliIndex pi(n, p);
      const RpCompact a = rp_compact(pi);
      const ChannelMatrix dense = expand(a);
      ASSERT_EQ(dense, channel_of_unitary(rotation_matrix(pi))) << pi.str();
      ASSERT_EQ(a.pairs().size(), pauli_count(n) / 4);
      ASSERT_EQ(dense.sde(), 1);
      // Touched diagonals are 1/√2, and there are N^2/2 of them.
      std::size_t half = 0;
      for (std::size_t r = 0; r < dense.dim(); ++r) half += dense(r, r) == R(1, 0, 1);
      ASSERT_EQ(half, pauli_count(n) / 2);
    }
}

TEST(RpKernel, StructureProperties) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(trial % 4);
    const PauliIndex p(n, 1 + static_cast<std::uint32_t>(rng() % (pauli_count(n) - 1)));
    const RpCompact a = rp_compact(p);
    const ChannelMatrix dense = expand(a);
    std::vector<int> seen(dense.dim(), 0);
    for (const RpPair& pr : a.pairs()) {
      ASSERT_LT(pr.i, pr.l);
      seen[pr.i]++;
      seen[pr.l]++;
      ASSERT_EQ(dense(pr.i, pr.l), -dense(pr.l, pr.i));
      ASSERT_EQ(dense(pr.i, pr.l), R(pr.sign, 0, 1));
    }
    for (std::size_t r = 0; r < dense.dim(); ++r) {
      ASSERT_LE(seen[r], 1);
      // identity row iff untouched
      if (!seen[r]) ASSERT_EQ(dense(r, r), RealRingElt::integer(1));
    }
    ASSERT_EQ(seen[0], 0);  // row I is never touched
  }
}

TEST(RpKernel, MultMatchesDense) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(trial % 3);
    const ChannelMatrix v = random_channel(n, static_cast<int>(rng() % 5), rng);
    const PauliIndex p(n, 1 + static_cast<std::uint32_t>(rng() % (pauli_count(n) - 1)));
    const RpCompact a = rp_compact(p);
    const ChannelMatrix w = rp_mult(a, v);
    ASSERT_EQ(w, dense_channel_mul(expand(a), v));
    ASSERT_EQ(rp_mult(rp_inv(a), w), v);
    ASSERT_LE(std::abs(w.sde() - v.sde()), 1);
    const MultResult fused = sde_delta_mult(a, v, v.sde());
    ASSERT_EQ(fused.matrix, w);
    ASSERT_EQ(fused.sde, w.sde());
    ASSERT_EQ(fused.hamming_weight, w.hamming_weight());
    const MultStats st = mult_stats(a, v, RowSummary(v));
    ASSERT_EQ(st.sde, w.sde());
    ASSERT_EQ(st.hamming_weight, w.hamming_weight());
  }
}

TEST(RpKernel, InverseIdentities) {
  for (int n = 1; n <= 2; ++n)
    for (const RpCompact& a : rp_table(n)) {
      EXPECT_EQ(rp_inv(rp_inv(a)), a);
      EXPECT_EQ(rp_mult(rp_inv(a), expand(a)), ChannelMatrix::identity(n));
      EXPECT_EQ(rp_mult(a, expand(rp_inv(a))), ChannelMatrix::identity(n));
    }
}

TEST(RpKernel, SingleQubitChainRaisesSde) {
  // Along T H T H ... every R(Z) factor on a non-trivial product adds 1 to sde.
  ChannelMatrix v = ChannelMatrix::identity(1);
  const ChannelMatrix h = channel_of(Circuit(1, {Gate::single(GateKind::H, 1)}));
  const RpCompact z = rp_compact(PauliIndex::parse("Z"));
  for (int k = 1; k <= 10; ++k) {
    v = dense_channel_mul(h, rp_mult(z, v));
    EXPECT_EQ(v.sde(), k);
  }
  for (int k = 9; k >= 0; --k) {
    v = rp_mult(rp_inv(z), dense_channel_mul(h, v));
    EXPECT_EQ(v.sde(), k);
  }
}

TEST(RpKernel, TablesIndexByPauliValue) {
  const auto& t = rp_table(2);
  ASSERT_EQ(t.size(), 15u);
  for (std::uint32_t p = 1; p < 16; ++p) EXPECT_EQ(t[p - 1].pauli().value(), p);
  EXPECT_TRUE(rp_inv_table(2)[4].is_inverse());
}

TEST(RpKernel, RejectsMismatchedWidth) {
  EXPECT_THROW(rp_mult(rp_compact(PauliIndex::parse("Z")), ChannelMatrix::identity(2)),
               InvalidInput);
}

}  // namespace
}  // namespace tcount
