#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kfin {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p", "p/q" (and surrounding whitespace). Throws InvalidInput.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// n choose k as an exact integer.
Integer binomial(long n, long k);

}  // namespace kfin
