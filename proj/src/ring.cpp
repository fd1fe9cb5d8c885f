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

#include "tcount/ring.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "checked.hpp"

namespace tcount {

namespace {

constexpr long double kSqrt2 = 1.414213562373095048801688724209698079L;

// Exact sign of a + b√2 with a, b given as 128-bit values.
int sign_of_wide(__int128 a, __int128 b) {
  if (a >= 0 && b >= 0) return (a == 0 && b == 0) ? 0 : 1;
  if (a <= 0 && b <= 0) return -1;
  // Opposite signs: compare a^2 with 2 b^2. Magnitudes stay below 2^63 so
  // the squares fit in unsigned 128 bits.
  const unsigned __int128 aa = static_cast<unsigned __int128>(a < 0 ? -a : a);
  const unsigned __int128 bb = static_cast<unsigned __int128>(b < 0 ? -b : b);
  constexpr unsigned __int128 kLimit = static_cast<unsigned __int128>(1) << 63;
  if (aa >= kLimit || bb >= kLimit) throw ArithmeticOverflow("ring comparison out of range");
  const unsigned __int128 a2 = aa * aa;
  const unsigned __int128 b2 = 2 * bb * bb;
  if (a2 == b2) return 0;  // unreachable for integers, √2 is irrational
  const bool a_dominates = a2 > b2;
  if (a > 0) return a_dominates ? 1 : -1;
  return a_dominates ? -1 : 1;
}

}  // namespace

RealRingElt RealRingElt::reduce(std::int64_t a, std::int64_t b, int k) {
  if (k < 0) {
    detail::scale_sqrt2(a, b, -k);
    k = 0;
  }
  if (a == 0 && b == 0) return {};
  // (2a' + b√2)/√2^k = (b + a'√2)/√2^(k-1)
  while (k > 0 && a % 2 == 0) {
    const std::int64_t half = a / 2;
    a = b;
    b = half;
    --k;
  }
  return {a, b, k};
}

std::pair<std::int64_t, std::int64_t> RealRingElt::numerators_at(int k) const {
  std::int64_t a = a_, b = b_;
  detail::scale_sqrt2(a, b, k - k_);
  return {a, b};
}

long double RealRingElt::to_long_double() const {
  return (static_cast<long double>(a_) + static_cast<long double>(b_) * kSqrt2) /
         std::pow(kSqrt2, static_cast<long double>(k_));
}

std::string RealRingElt::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

int sign_of(std::int64_t a, std::int64_t b) { return sign_of_wide(a, b); }

std::strong_ordering ring_compare(const RealRingElt& q, const RealRingElt& r) {
  if (q == r) return std::strong_ordering::equal;
  const int k = std::max(q.k(), r.k());
  const auto [qa, qb] = q.numerators_at(k);
  const auto [ra, rb] = r.numerators_at(k);
  const int s = sign_of_wide(static_cast<__int128>(qa) - ra, static_cast<__int128>(qb) - rb);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RealRingElt halved_sum(const RealRingElt& q, const RealRingElt& r, int sign) {
  const int k = std::max(q.k(), r.k());
  const auto [qa, qb] = q.numerators_at(k);
  auto [ra, rb] = r.numerators_at(k);
  if (sign < 0) {
    ra = -ra;
    rb = -rb;
  }
  return RealRingElt::reduce(detail::add(qa, ra), detail::add(qb, rb), k + 1);
}

RealRingElt operator+(const RealRingElt& x, const RealRingElt& y) {
  const int k = std::max(x.k(), y.k());
  const auto [xa, xb] = x.numerators_at(k);
  const auto [ya, yb] = y.numerators_at(k);
  return RealRingElt::reduce(detail::add(xa, ya), detail::add(xb, yb), k);
}

RealRingElt operator-(const RealRingElt& x, const RealRingElt& y) { return x + (-y); }

RealRingElt operator*(const RealRingElt& x, const RealRingElt& y) {
  // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
  using detail::add;
  using detail::mul;
  const std::int64_t a = add(mul(x.a(), y.a()), mul(2, mul(x.b(), y.b())));
  const std::int64_t b = add(mul(x.a(), y.b()), mul(x.b(), y.a()));
  return RealRingElt::reduce(a, b, x.k() + y.k());
}

std::ostream& operator<<(std::ostream& os, const RealRingElt& x) {
  return os << '[' << x.a() << ',' << x.b() << ',' << x.k() << ']';
}

// ---------------------------------------------------------------------------

ComplexRingElt ComplexRingElt::reduce(std::int64_t a, std::int64_t b, std::int64_t c,
                                      std::int64_t d, int k) {
  while (k < 0) {
    // multiply numerator by √2: (a + c√2)√2 = 2c + a√2
    const std::int64_t na = detail::mul(2, c), nb = detail::mul(2, d);
    c = a;
    d = b;
    a = na;
    b = nb;
    ++k;
  }
  if (a == 0 && b == 0 && c == 0 && d == 0) return {};
  while (k > 0 && a % 2 == 0 && b % 2 == 0) {
    const std::int64_t ha = a / 2, hb = b / 2;
    a = c;
    b = d;
    c = ha;
    d = hb;
    --k;
  }
  return {a, b, c, d, k};
}

ComplexRingElt ComplexRingElt::i_pow(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0, 0, 0, 0};
    case 1: return {0, 1, 0, 0, 0};
    case 2: return {-1, 0, 0, 0, 0};
    default: return {0, -1, 0, 0, 0};
  }
}

std::string ComplexRingElt::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

namespace {

struct Wide {
  std::int64_t a, b, c, d;
};

Wide scaled(const ComplexRingElt& x, int k) {
  std::int64_t re_a = x.a(), re_b = x.c(), im_a = x.b(), im_b = x.d();
  detail::scale_sqrt2(re_a, re_b, k - x.k());
  detail::scale_sqrt2(im_a, im_b, k - x.k());
  return {re_a, im_a, re_b, im_b};
}

}  // namespace

ComplexRingElt c_add(const ComplexRingElt& x, const ComplexRingElt& y) {
  const int k = std::max(x.k(), y.k());
  const Wide p = scaled(x, k), q = scaled(y, k);
  using detail::add;
  return ComplexRingElt::reduce(add(p.a, q.a), add(p.b, q.b), add(p.c, q.c), add(p.d, q.d), k);
}

ComplexRingElt c_sub(const ComplexRingElt& x, const ComplexRingElt& y) { return c_add(x, -y); }

ComplexRingElt c_mul(const ComplexRingElt& x, const ComplexRingElt& y) {
  // x = α + β√2, y = γ + δ√2 with Gaussian integers α, β, γ, δ:
  // xy = (αγ + 2βδ) + (αδ + βγ)√2
  using detail::add;
  using detail::mul;
  using detail::sub;
  auto gmul = [](std::int64_t pr, std::int64_t pi, std::int64_t qr, std::int64_t qi) {
    return std::pair{sub(mul(pr, qr), mul(pi, qi)), add(mul(pr, qi), mul(pi, qr))};
  };
  const auto [ag_r, ag_i] = gmul(x.a(), x.b(), y.a(), y.b());
  const auto [bd_r, bd_i] = gmul(x.c(), x.d(), y.c(), y.d());
  const auto [ad_r, ad_i] = gmul(x.a(), x.b(), y.c(), y.d());
  const auto [bg_r, bg_i] = gmul(x.c(), x.d(), y.a(), y.b());
  return ComplexRingElt::reduce(add(ag_r, mul(2, bd_r)), add(ag_i, mul(2, bd_i)),
                                add(ad_r, bg_r), add(ad_i, bg_i), x.k() + y.k());
}

ComplexRingElt c_conj(const ComplexRingElt& x) {
  return ComplexRingElt::reduce(x.a(), -x.b(), x.c(), -x.d(), x.k());
}

ComplexRingElt c_mul_i_pow(const ComplexRingElt& x, int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return x;
    case 1: return ComplexRingElt::reduce(-x.b(), x.a(), -x.d(), x.c(), x.k());
    case 2: return -x;
    default: return ComplexRingElt::reduce(x.b(), -x.a(), x.d(), -x.c(), x.k());
  }
}

std::ostream& operator<<(std::ostream& os, const ComplexRingElt& x) {
  return os << '[' << x.a() << ',' << x.b() << ',' << x.c() << ',' << x.d() << ',' << x.k()
            << ']';
}

}  // namespace tcount
