#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace fg {

// All quasi-morphism values are exact rationals; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Smallest integer >= q.
inline BigInt ceil_rational(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);  // d > 0
  BigInt quot = n / d, rem = n % d;
  if (rem > 0) ++quot;
  return quot;
}

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int64_t to_int64(const BigInt& n) {
  if (n > std::numeric_limits<int64_t>::max() || n < std::numeric_limits<int64_t>::min())
    throw std::overflow_error("to_int64: value out of range");
  return static_cast<int64_t>(n);
}

}  // namespace fg
