#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace leaktight {

/// Arbitrary precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Parses "p/q" or an integer literal. Throws InvalidArgument on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

/// Number of bits in the denominator; used to bound exact evaluation cost.
std::size_t denominator_bits(const Rational& value);

}  // namespace leaktight
