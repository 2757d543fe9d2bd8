#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace consensus {

// Exact arbitrary-precision arithmetic; always stored reduced with a
// positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace consensus
