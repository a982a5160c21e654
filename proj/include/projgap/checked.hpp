#pragma once

#include <cstdint>
#include <string_view>

#include "projgap/errors.hpp"

namespace projgap::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b, std::string_view what = "addition") {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error(std::string(what) + " overflows int64");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b, std::string_view what = "subtraction") {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error(std::string(what) + " overflows int64");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b, std::string_view what = "product") {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error(std::string(what) + " overflows int64");
  return r;
}

inline std::int64_t pow(std::int64_t base, int exp, std::string_view what = "power") {
  std::int64_t r = 1;
  for (int k = 0; k < exp; ++k) r = mul(r, base, what);
  return r;
}

// Largest r >= 0 with r^k <= value (value >= 0, k >= 1).
inline std::int64_t floor_root(std::int64_t value, int k) {
  if (value < 0 || k < 1) throw domain_error("floor_root: need value >= 0 and k >= 1");
  if (k == 1 || value < 2) return value;
  auto fits = [&](std::int64_t r) {
    std::int64_t p = 1;
    for (int i = 0; i < k; ++i) {
      if (__builtin_mul_overflow(p, r, &p)) return false;
      if (p > value) return false;
    }
    return true;
  };
  std::int64_t lo = 1, hi = 1;
  while (fits(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    (fits(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace projgap::checked
