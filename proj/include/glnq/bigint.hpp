#pragma once

#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "glnq/error.hpp"

namespace glnq {

// Arbitrary-precision signed integer.  Group orders, z_rho weights and
// polynomial coefficients all outgrow 64 bits quickly, so everything
// combinatorial is computed in bigint and narrowed only at the edges.
using bigint = boost::multiprecision::cpp_int;

inline bigint big_pow(const bigint& base, unsigned e) {
  bigint r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline bigint big_gcd(bigint a, bigint b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    bigint t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bigint big_lcm(const bigint& a, const bigint& b) {
  if (a == 0 || b == 0) return 0;
  bigint l = (a / big_gcd(a, b)) * b;
  return l < 0 ? -l : l;
}

inline bigint factorial(unsigned n) {
  bigint r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Narrow to uint64, throwing rather than wrapping.
inline std::uint64_t to_u64(const bigint& v) {
  require(v >= 0 && v <= std::numeric_limits<std::uint64_t>::max(), errc::too_large,
          "value does not fit in 64 bits");
  return static_cast<std::uint64_t>(v);
}

}  // namespace glnq
