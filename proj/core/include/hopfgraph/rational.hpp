#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hopfgraph {

// Exact rationals, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

// Graph weights are plain rationals.
using Weight = Rational;

// num/den in lowest terms. (mpq_class(num, den) does not reduce.)
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);
Rational double_factorial(int n);  // (-1)!! = 1

}  // namespace hopfgraph
