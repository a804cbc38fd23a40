#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace geomcrystal {

// Reduced rational with positive denominator; backed by GMP.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_pow(const Rat& base, int e) {
  Rat result = 1;
  Rat b = e < 0 ? Rat(1 / base) : base;
  for (int i = 0, m = e < 0 ? -e : e; i < m; ++i) result *= b;
  return result;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace geomcrystal
