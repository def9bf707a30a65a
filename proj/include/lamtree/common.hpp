#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lamtree {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(const Int& base, unsigned exp) {
  Int r = 1;
  Int b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

/// 2^k as an exact rational, k may be negative.
inline Rat dyadic_pow(long k) {
  if (k >= 0) return Rat(int_pow(2, static_cast<unsigned>(k)));
  return Rat(1, int_pow(2, static_cast<unsigned>(-k)));
}

inline Int int_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  return Int(s);
}

inline std::string int_to_string(const Int& v) { return v.str(); }

/// True when every prime factor of n divides base. By convention
/// smooth(1) is true and smooth(0) is false.
inline bool is_smooth_over(Int n, const Int& base) {
  using boost::multiprecision::abs;
  using boost::multiprecision::gcd;
  n = abs(n);
  if (n == 0) return false;
  while (n != 1) {
    Int g = gcd(n, base);
    if (g == 1) return false;
    while (n % g == 0) n /= g;
  }
  return true;
}

}  // namespace lamtree
