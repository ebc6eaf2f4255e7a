#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace metricsat {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses an integer literal ("-7") or a fraction ("3/4", "-6/8").
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational &value);

inline Rational abs_diff(const Rational &a, const Rational &b) {
  return a < b ? Rational(b - a) : Rational(a - b);
}

} // namespace metricsat
