#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace pivotlab {

using Int = boost::multiprecision::mpz_int;

/// Exact rational scalar. Always canonical: positive denominator,
/// gcd(|num|, den) = 1. All solver arithmetic happens on this type;
/// floating point is confined to bound evaluation.
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p", "p/q" or "-p/q" (integer p, q). Throws Error{ParseError} on
/// malformed text or a zero denominator. The result is canonical even when
/// the input is not ("2/4" -> 1/2).
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

/// Smallest integer >= value, computed exactly.
Int ceil_rational(const Rational& value);

}  // namespace pivotlab
