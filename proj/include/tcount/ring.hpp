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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace tcount {

/// Exact element (a + b√2) / √2^k of Z[1/√2].
///
/// Values are always held in sde-reduced form: k == 0 or a is odd. Zero is
/// (0, 0, 0). Because the form is canonical, member-wise equality is value
/// equality.
class RealRingElt {
 public:
  constexpr RealRingElt() = default;

  /// Canonicalises (a + b√2) / √2^k.
  static RealRingElt reduce(std::int64_t a, std::int64_t b, int k);
  static constexpr RealRingElt integer(std::int64_t v) { return {v, 0, 0}; }
  static RealRingElt inv_sqrt2_pow(int k) { return reduce(1, 0, k); }

  constexpr std::int64_t a() const { return a_; }
  constexpr std::int64_t b() const { return b_; }
  constexpr int k() const { return k_; }
  constexpr int sde() const { return k_; }
  constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Numerators of this value written over the denominator √2^k, k >= this->k().
  std::pair<std::int64_t, std::int64_t> numerators_at(int k) const;

  RealRingElt operator-() const { return {-a_, -b_, k_}; }
  friend bool operator==(const RealRingElt&, const RealRingElt&) = default;

  long double to_long_double() const;
  std::string str() const;

 private:
  constexpr RealRingElt(std::int64_t a, std::int64_t b, int k) : a_(a), b_(b), k_(k) {}

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  int k_ = 0;
};

/// Total order by real value, decided exactly.
std::strong_ordering ring_compare(const RealRingElt& q, const RealRingElt& r);

/// Sign of a + b√2, exactly.
int sign_of(std::int64_t a, std::int64_t b);

/// (q + sign * r) / √2, canonical.
RealRingElt halved_sum(const RealRingElt& q, const RealRingElt& r, int sign);

RealRingElt operator+(const RealRingElt& x, const RealRingElt& y);
RealRingElt operator-(const RealRingElt& x, const RealRingElt& y);
RealRingElt operator*(const RealRingElt& x, const RealRingElt& y);

std::ostream& operator<<(std::ostream& os, const RealRingElt& x);

/// Exact element (a + bi + c√2 + di√2) / √2^k of Z[i, 1/√2].
///
/// Canonical form: k == 0, or a and b are not both even. The reduction step
/// (a, b, c, d, k) -> (c, d, a/2, b/2, k-1) is the real rule applied to the
/// real and imaginary parts jointly.
class ComplexRingElt {
 public:
  constexpr ComplexRingElt() = default;

  static ComplexRingElt reduce(std::int64_t a, std::int64_t b, std::int64_t c,
                               std::int64_t d, int k);
  static constexpr ComplexRingElt integer(std::int64_t v) { return {v, 0, 0, 0, 0}; }
  static ComplexRingElt one() { return integer(1); }
  static ComplexRingElt imag_unit() { return {0, 1, 0, 0, 0}; }
  /// e^{iπ/4} = (1 + i) / √2.
  static ComplexRingElt omega() { return {1, 1, 0, 0, 1}; }
  /// i^e for any integer e.
  static ComplexRingElt i_pow(int e);

  constexpr std::int64_t a() const { return a_; }
  constexpr std::int64_t b() const { return b_; }
  constexpr std::int64_t c() const { return c_; }
  constexpr std::int64_t d() const { return d_; }
  constexpr int k() const { return k_; }
  /// Denominator exponent of the canonical form. Used for input validation only.
  constexpr int sde() const { return k_; }
  constexpr bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }

  RealRingElt real_part() const { return RealRingElt::reduce(a_, c_, k_); }
  RealRingElt imag_part() const { return RealRingElt::reduce(b_, d_, k_); }

  ComplexRingElt operator-() const { return {-a_, -b_, -c_, -d_, k_}; }
  friend bool operator==(const ComplexRingElt&, const ComplexRingElt&) = default;

  std::string str() const;

 private:
  constexpr ComplexRingElt(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                           int k)
      : a_(a), b_(b), c_(c), d_(d), k_(k) {}

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t c_ = 0;
  std::int64_t d_ = 0;
  int k_ = 0;
};

ComplexRingElt c_add(const ComplexRingElt& x, const ComplexRingElt& y);
ComplexRingElt c_sub(const ComplexRingElt& x, const ComplexRingElt& y);
ComplexRingElt c_mul(const ComplexRingElt& x, const ComplexRingElt& y);
ComplexRingElt c_conj(const ComplexRingElt& x);
/// Multiplies by i^e without going through a general product.
ComplexRingElt c_mul_i_pow(const ComplexRingElt& x, int e);
/// Re-canonicalises an element, e.g. one read from a file.
inline ComplexRingElt c_reduce(const ComplexRingElt& x) {
  return ComplexRingElt::reduce(x.a(), x.b(), x.c(), x.d(), x.k());
}

std::ostream& operator<<(std::ostream& os, const ComplexRingElt& x);

}  // namespace tcount
