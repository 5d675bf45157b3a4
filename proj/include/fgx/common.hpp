// Shared error types and small numeric helpers.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fgx {

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration ran out of cosets; presentation may define a larger group.
struct coset_limit_error : error {
  explicit coset_limit_error(const std::string& msg) : error(msg) {}
};

// Group too large for a cohomology computation without an override.
struct size_cap_error : error {
  explicit size_cap_error(const std::string& msg) : error(msg) {}
};

struct overflow_error : error {
  explicit overflow_error(const std::string& msg) : error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw error(msg); }

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
  return r;
}

inline long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) { long long t = a % b; a = b; b = t; }
  return a;
}

// g = gcd(a,b) together with x,y such that a*x + b*y = g.
inline long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return a < 0 ? -a : a;
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace fgx
