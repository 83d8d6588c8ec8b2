#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace polyprobe {

// Every quantity in this library is an exact rational. The probing
// algorithms branch on exact equalities such as D(d) == d^T b, which no
// fixed-precision representation can decide reliably.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "7", "-3/4", and exact decimal strings like "2.5" or "-0.125".
// Decimal digits are read as base-10 rationals, never through a double.
std::optional<Rational> parse_rational(std::string_view text);

// "3", "-7/4". Inverse of parse_rational for the forms it emits.
std::string to_string(const Rational& value);

// Lossy; for rendering only.
double to_double(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

}  // namespace polyprobe
