#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace stackvc {

// All game arithmetic is exact. Ties between covers decide outcomes, so
// floating point is never used for weights, prices, or revenues.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "42", "7/2", and "3.25" (optionally signed). Throws
// std::invalid_argument on anything else, including zero denominators.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational up to normalization: "a" when the denominator
// is 1, "a/b" otherwise.
std::string format_rational(const Rational& value);

}  // namespace stackvc
