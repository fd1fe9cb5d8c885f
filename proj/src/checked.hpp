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

#include <cstdint>

#include "tcount/errors.hpp"

namespace tcount::detail {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw ArithmeticOverflow("ring numerator overflow");
  return out;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_sub_overflow(x, y, &out)) throw ArithmeticOverflow("ring numerator overflow");
  return out;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw ArithmeticOverflow("ring numerator overflow");
  return out;
}

/// x * 2^s.
inline std::int64_t shl(std::int64_t x, int s) {
  if (s >= 62) {
    if (x == 0) return 0;
    throw ArithmeticOverflow("ring numerator overflow");
  }
  return mul(x, std::int64_t{1} << s);
}

/// Multiplies (a + b√2) by √2^d in place.
inline void scale_sqrt2(std::int64_t& a, std::int64_t& b, int d) {
  if (d <= 0) return;
  const int half = d / 2;
  if (d % 2 == 0) {
    a = shl(a, half);
    b = shl(b, half);
  } else {
    const std::int64_t na = shl(b, half + 1);
    const std::int64_t nb = shl(a, half);
    a = na;
    b = nb;
  }
}

}  // namespace tcount::detail
