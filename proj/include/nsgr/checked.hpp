#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "nsgr/error.hpp"

namespace nsgr {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, std::to_string(a) + " * " + std::to_string(b));
  return r;
}

// Floor modulus, always in [0, m).
inline Int mod_floor(Int n, Int m) {
  Int r = n % m;
  return r < 0 ? r + m : r;
}

}  // namespace nsgr
