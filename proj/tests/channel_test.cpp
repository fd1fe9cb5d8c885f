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

#include "tcount/channel.hpp"
#include "tcount/circuit.hpp"
#include "tcount/errors.hpp"
#include "test_util.hpp"

namespace tcount {
namespace {

using testing::channel_of;
using testing::numeric_channel;

Circuit one(GateKind k) { return Circuit(1, {Gate::single(k, 1)}); }

RealRingElt R(std::int64_t a, std::int64_t b, int k) { return RealRingElt::reduce(a, b, k); }

void expect_matches_numeric(const UnitaryMatrix& u) {
  const ChannelMatrix m = channel_of_unitary(u);
  const std::vector<long double> want = numeric_channel(u);
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      ASSERT_NEAR(m(r, c).to_long_double(), want[r * m.dim() + c], 1e-12L) << r << "," << c;
}

TEST(Channel, IdentityChannel) {
  for (int n = 1; n <= 3; ++n) {
    const ChannelMatrix m = channel_of_unitary(UnitaryMatrix::identity(n));
    EXPECT_EQ(m, ChannelMatrix::identity(n));
    EXPECT_EQ(m.sde(), 0);
    EXPECT_TRUE(m.is_clifford());
  }
  EXPECT_EQ(ChannelMatrix::identity(1).hamming_weight(), 4u);
}

TEST(Channel, TGate) {
  const ChannelMatrix t = channel_of(one(GateKind::T));
  const RealRingElt h = R(1, 0, 1);
  // rows/columns ordered I, X, Y, Z
  EXPECT_EQ(t(0, 0), RealRingElt::integer(1));
  EXPECT_EQ(t(1, 1), h);
  EXPECT_EQ(t(2, 2), h);
  EXPECT_EQ(t(3, 3), RealRingElt::integer(1));
  EXPECT_EQ(t(1, 2), -h);
  EXPECT_EQ(t(2, 1), h);
  EXPECT_EQ(t.sde(), 1);
  EXPECT_EQ(t.hamming_weight(), 6u);
  EXPECT_FALSE(t.is_clifford());
  expect_matches_numeric(unitary_of_circuit(one(GateKind::T)));
}

TEST(Channel, MatchesTraceFormulaNumerically) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i < 4; ++i)
      expect_matches_numeric(unitary_of_circuit(fixtures::random_circuit(n, 3, rng())));
}

TEST(Channel, ToffoliHasSdeTwo) {
  const auto tof = testing::permutation_unitary(3, [](std::uint32_t x) {
    return (x & 6u) == 6u ? x ^ 1u : x;
  });
  const ChannelMatrix m = channel_of_unitary(tof);
  EXPECT_EQ(m.sde(), 2);
  EXPECT_EQ(m.dim(), 64u);
}

TEST(Channel, CliffordGates) {
  EXPECT_TRUE(channel_of(Circuit(2, {Gate::cnot(1, 2)})).is_clifford());
  EXPECT_TRUE(channel_of(one(GateKind::H)).is_clifford());
  EXPECT_TRUE(channel_of(one(GateKind::S)).is_clifford());
  std::mt19937_64 rng(22);
  for (int i = 0; i < 30; ++i) {
    const ChannelMatrix m = channel_of(testing::random_clifford_circuit(2, 12, rng));
    EXPECT_TRUE(m.is_clifford());
    EXPECT_EQ(m.sde(), 0);
    EXPECT_EQ(m.hamming_weight(), 16u);
  }
}

TEST(Channel, SingleQubitTCount) {
  EXPECT_EQ(tcount_single_qubit(unitary_of_circuit(one(GateKind::H))), 0);
  EXPECT_EQ(tcount_single_qubit(unitary_of_circuit(one(GateKind::T))), 1);
  const Circuit tht = parse_circuit("t 1\nh 1\nt 1\n");
  EXPECT_EQ(tcount_single_qubit(unitary_of_circuit(tht)), 2);
  EXPECT_THROW(tcount_single_qubit(UnitaryMatrix::identity(2)), InvalidInput);
}

TEST(Channel, Tensor) {
  const ChannelMatrix t = channel_of(one(GateKind::T));
  const ChannelMatrix h = channel_of(one(GateKind::H));
  const ChannelMatrix i1 = ChannelMatrix::identity(1);
  EXPECT_EQ(channel_tensor(i1, i1), ChannelMatrix::identity(2));
  EXPECT_EQ(channel_tensor(t, i1), channel_of(Circuit(2, {Gate::single(GateKind::T, 1)})));
  EXPECT_EQ(channel_tensor(h, t),
            channel_of(Circuit(2, {Gate::single(GateKind::H, 1), Gate::single(GateKind::T, 2)})));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 5; ++i) {
    const Circuit a = fixtures::random_circuit(1, 2, rng());
    const Circuit b = fixtures::random_circuit(2, 2, rng());
    Circuit both(3);
    for (Gate g : a.gates()) both.add(g);
    for (Gate g : b.gates()) {
      g.q0 += 1;
      if (g.is_two_qubit()) g.q1 += 1;
      both.add(g);
    }
    EXPECT_EQ(channel_tensor(channel_of(a), channel_of(b)), channel_of(both));
  }
}

TEST(Channel, DenseMultiplication) {
  const ChannelMatrix t = channel_of(one(GateKind::T));
  const ChannelMatrix h = channel_of(one(GateKind::H));
  EXPECT_EQ(dense_channel_mul(t, ChannelMatrix::identity(1)), t);
  EXPECT_EQ(dense_channel_mul(t, t), channel_of(one(GateKind::S)));
  // <H><T> = <HT>, where HT applies T first.
  EXPECT_EQ(dense_channel_mul(h, t), channel_of(parse_circuit("t 1\nh 1\n")));
}

TEST(Channel, Homomorphism) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(i % 3);
    const Circuit a = fixtures::random_circuit(n, 1 + static_cast<int>(rng() % 3), rng());
    const Circuit b = fixtures::random_circuit(n, 1 + static_cast<int>(rng() % 3), rng());
    Circuit ab = b;
    ab.append(a);  // unitary A*B
    const ChannelMatrix ca = channel_of(a), cb = channel_of(b);
    ASSERT_EQ(channel_of(ab), dense_channel_mul(ca, cb));
    // orthogonality
    ASSERT_EQ(dense_channel_mul(ca.transpose(), ca), ChannelMatrix::identity(n));
    ASSERT_EQ(ca.is_clifford(), ca.sde() == 0);
  }
}

TEST(Channel, GlobalPhaseInvariance) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 20; ++i) {
    const UnitaryMatrix u = unitary_of_circuit(fixtures::random_circuit(2, 3, rng()));
    EXPECT_EQ(channel_of_unitary(scaled(u, ComplexRingElt::omega())), channel_of_unitary(u));
  }
}

TEST(Channel, FirstRowAndColumnAreUnit) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 20; ++i) {
    const ChannelMatrix m = channel_of(fixtures::random_circuit(2, 4, rng()));
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const RealRingElt want = RealRingElt::integer(j == 0 ? 1 : 0);
      EXPECT_EQ(m(0, j), want);
      EXPECT_EQ(m(j, 0), want);
    }
  }
}

TEST(Channel, RejectsNonUnitary) {
  UnitaryMatrix u(1);
  u(0, 0) = ComplexRingElt::one();
  EXPECT_THROW(channel_of_unitary(u), InvalidInput);
  UnitaryMatrix v = UnitaryMatrix::identity(1);
  v(0, 1) = ComplexRingElt::one();
  EXPECT_THROW(channel_of_unitary(v), InvalidInput);
}

TEST(Channel, RepresentationIsCanonical) {
  std::vector<RealRingElt> e(16);
  for (int i = 0; i < 4; ++i) e[i * 5] = R(2, 0, 2);  // 2/2 = 1, written non-minimally
  EXPECT_EQ(ChannelMatrix::from_entries(1, e), ChannelMatrix::identity(1));
  EXPECT_EQ(ChannelMatrix::from_entries(1, e).digest(), ChannelMatrix::identity(1).digest());
}

}  // namespace
}  // namespace tcount
