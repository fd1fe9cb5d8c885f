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

#include "tcount/channel.hpp"

#include <algorithm>

#include "checked.hpp"
#include "tcount/errors.hpp"
#include "tcount/pauli.hpp"

namespace tcount {

ChannelMatrix::ChannelMatrix(int n, int exponent, std::vector<std::int64_t> a,
                             std::vector<std::int64_t> b)
    : n_(n), dim_(pauli_count(n)), exponent_(exponent), a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != dim_ * dim_ || b_.size() != dim_ * dim_)
    throw InvalidInput("channel matrix has wrong number of entries");
  normalize();
}

ChannelMatrix ChannelMatrix::zero(int n) {
  if (n < 0 || n > 5) throw InvalidInput("qubit count out of range");
  const std::size_t d = pauli_count(n);
  return ChannelMatrix(n, 0, std::vector<std::int64_t>(d * d), std::vector<std::int64_t>(d * d));
}

ChannelMatrix ChannelMatrix::identity(int n) {
  ChannelMatrix m = zero(n);
  for (std::size_t i = 0; i < m.dim_; ++i) m.a_[i * m.dim_ + i] = 1;
  return m;
}

ChannelMatrix ChannelMatrix::from_entries(int n, const std::vector<RealRingElt>& entries) {
  if (n < 0 || n > 5) throw InvalidInput("qubit count out of range");
  int k = 0;
  for (const auto& e : entries) k = std::max(k, e.k());
  std::vector<std::int64_t> a(entries.size()), b(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto [x, y] = entries[i].numerators_at(k);
    a[i] = x;
    b[i] = y;
  }
  return ChannelMatrix(n, k, std::move(a), std::move(b));
}

ChannelMatrix ChannelMatrix::from_numerators(int n, int exponent, std::vector<std::int64_t> a,
                                             std::vector<std::int64_t> b) {
  if (n < 0 || n > 5) throw InvalidInput("qubit count out of range");
  if (exponent < 0) throw InvalidInput("negative denominator exponent");
  return ChannelMatrix(n, exponent, std::move(a), std::move(b));
}

void ChannelMatrix::normalize() {
  for (;;) {
    if (exponent_ == 0) return;
    bool all_even = true;
    for (std::int64_t v : a_) {
      if (v & 1) {
        all_even = false;
        break;
      }
    }
    if (!all_even) return;
    // (2a' + b√2)/√2^k = (b + a'√2)/√2^(k-1), entry-wise
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const std::int64_t half = a_[i] / 2;
      a_[i] = b_[i];
      b_[i] = half;
    }
    --exponent_;
  }
}

std::vector<RealRingElt> ChannelMatrix::entries() const {
  std::vector<RealRingElt> out(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) out[i] = RealRingElt::reduce(a_[i], b_[i], exponent_);
  return out;
}

std::size_t ChannelMatrix::hamming_weight() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) count += (a_[i] != 0 || b_[i] != 0) ? 1 : 0;
  return count;
}

bool ChannelMatrix::is_clifford() const {
  if (exponent_ != 0) return false;
  std::vector<int> col_hits(dim_, 0);
  for (std::size_t r = 0; r < dim_; ++r) {
    int row_hits = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
      const std::size_t i = r * dim_ + c;
      if (a_[i] == 0 && b_[i] == 0) continue;
      if (b_[i] != 0 || (a_[i] != 1 && a_[i] != -1)) return false;
      ++row_hits;
      ++col_hits[c];
    }
    if (row_hits != 1) return false;
  }
  return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
}

ChannelMatrix ChannelMatrix::transpose() const {
  std::vector<std::int64_t> a(a_.size()), b(b_.size());
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      a[c * dim_ + r] = a_[r * dim_ + c];
      b[c * dim_ + r] = b_[r * dim_ + c];
    }
  return ChannelMatrix(n_, exponent_, std::move(a), std::move(b));
}

std::uint64_t ChannelMatrix::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  mix(static_cast<std::uint64_t>(exponent_));
  for (std::size_t i = 0; i < a_.size(); ++i) {
    mix(static_cast<std::uint64_t>(a_[i]));
    mix(static_cast<std::uint64_t>(b_[i]));
  }
  return h;
}

// ---------------------------------------------------------------------------

ChannelMatrix channel_of_unitary(const UnitaryMatrix& u) {
  const int n = u.num_qubits();
  if (n > 5) throw InvalidInput("too many qubits for a channel representation");
  if (!u.is_unitary()) throw InvalidInput("matrix is not unitary");
  const std::size_t d = u.dim();
  const std::uint32_t np = pauli_count(n);

  // Non-zero rows of every column of U, for the sparse U^† product.
  std::vector<std::vector<std::uint32_t>> col_support(d);
  for (std::uint32_t r = 0; r < d; ++r)
    for (std::uint32_t c = 0; c < d; ++c)
      if (!u(r, c).is_zero()) col_support[c].push_back(r);

  // Pauli action tables: pauli s maps basis j to i^phase |out>.
  std::vector<std::uint32_t> out_of(np * d);
  std::vector<int> phase_of(np * d);
  for (std::uint32_t p = 0; p < np; ++p)
    for (std::uint32_t j = 0; j < d; ++j) {
      const auto [ph, o] = apply_pauli(PauliIndex(n, p), j);
      out_of[p * d + j] = o;
      phase_of[p * d + j] = ph.exponent();
    }

  std::vector<RealRingElt> entries(std::size_t{np} * np);
  std::vector<ComplexRingElt> up(d * d), m(d * d);
  for (std::uint32_t s = 0; s < np; ++s) {
    // (U P_s)[i][j] = U[i][o_j] i^{phi_j}
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        up[i * d + j] = c_mul_i_pow(u(i, out_of[s * d + j]), phase_of[s * d + j]);
    // M = (U P_s) U^†
    std::fill(m.begin(), m.end(), ComplexRingElt{});
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) {
        const ComplexRingElt& x = up[k * d + j];
        if (x.is_zero()) continue;
        for (std::uint32_t l : col_support[j])
          m[k * d + l] = c_add(m[k * d + l], c_mul(x, c_conj(u(l, j))));
      }
    // Tr(P_r M) = sum_l i^{phi_r(l)} M[l][o_r(l)]
    for (std::uint32_t r = 0; r < np; ++r) {
      ComplexRingElt tr;
      for (std::size_t l = 0; l < d; ++l) {
        const ComplexRingElt& v = m[l * d + out_of[r * d + l]];
        if (!v.is_zero()) tr = c_add(tr, c_mul_i_pow(v, phase_of[r * d + l]));
      }
      if (!tr.imag_part().is_zero()) throw InvalidInput("channel entry is not real");
      const RealRingElt re = tr.real_part();
      // fold in 1/2^n
      entries[std::size_t{r} * np + s] = RealRingElt::reduce(re.a(), re.b(), re.k() + 2 * n);
    }
  }
  return ChannelMatrix::from_entries(n, entries);
}

ChannelMatrix dense_channel_mul(const ChannelMatrix& x, const ChannelMatrix& y) {
  if (x.num_qubits() != y.num_qubits()) throw InvalidInput("channel dimension mismatch");
  const int k = x.exponent() + y.exponent();
  if (k > 2 * kMaxChannelExponent) throw ArithmeticOverflow("channel exponent too large");
  const std::size_t d = x.dim();
  std::vector<std::int64_t> a(d * d, 0), b(d * d, 0);
  const auto xa = x.a(), xb = x.b(), ya = y.a(), yb = y.b();
  using detail::add;
  using detail::mul;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t t = 0; t < d; ++t) {
      // No zero skipping: this is the plain O(N^6) reference product.
      const std::int64_t p = xa[r * d + t], q = xb[r * d + t];
      for (std::size_t c = 0; c < d; ++c) {
        const std::int64_t u = ya[t * d + c], v = yb[t * d + c];
        // (p + q√2)(u + v√2) = (pu + 2qv) + (pv + qu)√2
        a[r * d + c] = add(a[r * d + c], add(mul(p, u), mul(2, mul(q, v))));
        b[r * d + c] = add(b[r * d + c], add(mul(p, v), mul(q, u)));
      }
    }
  return ChannelMatrix::from_numerators(x.num_qubits(), k, std::move(a), std::move(b));
}

ChannelMatrix channel_tensor(const ChannelMatrix& x, const ChannelMatrix& y) {
  const int n = x.num_qubits() + y.num_qubits();
  const std::size_t dx = x.dim(), dy = y.dim(), d = dx * dy;
  std::vector<std::int64_t> a(d * d, 0), b(d * d, 0);
  using detail::add;
  using detail::mul;
  for (std::size_t r1 = 0; r1 < dx; ++r1)
    for (std::size_t c1 = 0; c1 < dx; ++c1) {
      const std::int64_t p = x.a()[r1 * dx + c1], q = x.b()[r1 * dx + c1];
      if (p == 0 && q == 0) continue;
      for (std::size_t r2 = 0; r2 < dy; ++r2)
        for (std::size_t c2 = 0; c2 < dy; ++c2) {
          const std::int64_t u = y.a()[r2 * dy + c2], v = y.b()[r2 * dy + c2];
          // row r = r1 * N2^2 + r2, column likewise
          const std::size_t i = (r1 * dy + r2) * d + (c1 * dy + c2);
          a[i] = add(mul(p, u), mul(2, mul(q, v)));
          b[i] = add(mul(p, v), mul(q, u));
        }
    }
  return ChannelMatrix::from_numerators(n, x.exponent() + y.exponent(), std::move(a),
                                        std::move(b));
}

int tcount_single_qubit(const UnitaryMatrix& u) {
  if (u.num_qubits() != 1) throw InvalidInput("expected a single-qubit unitary");
  return channel_of_unitary(u).sde();
}

}  // namespace tcount
