#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace permutope {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" form with q >= 1 and gcd(p, q) = 1; integers keep the
/// "/1" suffix so every serialized rational has the same shape.
std::string to_string(const Rational& r);

/// Accepts "p/q", "p", and finite decimals such as "-0.125" or "2.5e-3"
/// (converted exactly). Non-finite tokens ("nan", "inf") raise
/// RationalityError; anything else malformed raises ParseError.
Rational parse_rational(std::string_view text);

/// Display-only decimal rendering with the given number of significant
/// digits.
std::string to_decimal_string(const Rational& r, int significant_digits = 12);

BigInt binomial(std::uint64_t n, std::uint64_t k);

BigInt factorial(std::uint64_t n);

}  // namespace permutope
