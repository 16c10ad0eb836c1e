#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fcat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }

/// Parses "n" or "n/d" with optional leading sign. Throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

/// Canonical text: "n" for integers, "n/d" otherwise.
std::string format_rational(const Rational& q);

}  // namespace fcat
