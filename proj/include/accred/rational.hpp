#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace accred {

using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p/q", integers, and finite decimals ("-0.25"). Result is canonical.
Rational parse_rational(std::string_view text);

// Comma separated list of rationals, whitespace tolerated.
std::vector<Rational> parse_rational_list(std::string_view text);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

// Value scaled by 100, rounded half away from zero / truncated toward zero.
BigInt round_hundredths(const Rational& q);
BigInt truncate_hundredths(const Rational& q);

// "1.53", "0.40", "-2.05".
std::string format_hundredths(const BigInt& hundredths);

}  // namespace accred
