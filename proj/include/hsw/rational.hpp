#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals backed by GMP. No floating point anywhere in the library.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hsw {

using Int = mpz_class;
using Rat = mpq_class;

// Builds num/den in canonical form. Throws InvalidRational on a zero
// denominator.
Rat make_rat(const Int& num, const Int& den);

// Parses "p/q" or "p" (optional leading '-'). Throws ParseError on malformed
// text and InvalidRational on a zero denominator.
Rat parse_rat(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& value);

std::string int_str(const Int& value);

// base^exp for non-negative exp.
Int int_pow(const Int& base, unsigned long exp);

// Floor of the square root; exact for perfect squares.
Int int_sqrt(const Int& value);

}  // namespace hsw
