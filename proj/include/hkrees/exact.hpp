#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hkrees {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

inline ExactInt ipow(ExactInt base, unsigned exp) {
  ExactInt result = 1;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    base *= base;
    exp >>= 1U;
  }
  return result;
}

inline ExactRat rat(const ExactInt& num, const ExactInt& den = 1) {
  return ExactRat(num, den);
}

inline ExactInt factorial(unsigned n) {
  ExactInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline ExactInt lcm(const ExactInt& a, const ExactInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

inline bool is_integer(const ExactRat& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline std::string to_string(const ExactInt& v) { return v.str(); }

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const ExactRat& v) {
  const auto& den = boost::multiprecision::denominator(v);
  if (den == 1) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" + den.str();
}

}  // namespace hkrees
