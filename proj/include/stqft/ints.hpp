#pragma once

#include <cstdint>
#include <stdexcept>

namespace stqft {

using i64 = std::int64_t;

// All coefficient arithmetic in the library goes through these helpers.
// Values stay tiny in practice; an overflow is a bug, so it throws rather
// than wrapping.
inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
  return r;
}

inline i64 gcd_nonneg(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace stqft
