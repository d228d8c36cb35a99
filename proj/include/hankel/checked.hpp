#pragma once

// Width-checked 64-bit arithmetic. Every quantity derived from the f-sequence
// is kept in int64_t; any operation that would wrap raises hankel::overflow_error
// instead of silently truncating.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hankel {

using i64 = std::int64_t;

// Signed 64-bit range exceeded while computing a named quantity.
class overflow_error : public std::overflow_error {
 public:
  explicit overflow_error(const std::string& what) : std::overflow_error(what) {}
};

inline i64 checked_add(i64 a, i64 b, const char* what) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw overflow_error(std::string(what) + ": 64-bit overflow in addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b, const char* what) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw overflow_error(std::string(what) + ": 64-bit overflow in subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b, const char* what) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw overflow_error(std::string(what) + ": 64-bit overflow in multiplication");
  return r;
}

}  // namespace hankel
