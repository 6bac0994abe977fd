#pragma once

// Exact arithmetic kernel. Everything in this library is computed over
// arbitrary-precision rationals; there is no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fano {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_q(long long num, long long den) {
  return Rational(num, den);
}

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace fano
