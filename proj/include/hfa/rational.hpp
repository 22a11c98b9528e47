#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hfa {

/// Unbounded exact rational. Used for sums and means of degrees.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is one.
std::string to_fraction_string(const Rational& r);

/// Decimal rendering rounded half-up to `digits` fractional digits, trailing
/// zeros trimmed. Display only; never parsed back.
std::string to_decimal_string(const Rational& r, int digits = 6);

}  // namespace hfa
