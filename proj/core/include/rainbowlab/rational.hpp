#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rainbowlab {

/// Exact rational backed by GMP. Values are kept canonical (lowest terms,
/// positive denominator) by every function in this library.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-p/q" or an integer literal. Throws InputError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace rainbowlab
