#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace rigidlab {

using Integer = mpz_class;
using Rational = mpq_class;
using Prime = std::uint64_t;

// p-adic valuation of a nonzero integer or rational.
int valuation(const Integer& n, Prime p);
int valuation(const Rational& r, Prime p);

bool is_integral(const Rational& r);
bool is_p_integral(const Rational& r, Prime p);

// The unique c / p^e with 0 <= c < p^e and r - c/p^e integral at p.
Rational p_power_part(const Rational& r, Prime p);

// Removes every factor p from n.
Integer strip_prime(Integer n, Prime p);

Integer pow_prime(Prime p, unsigned e);

// Exact text form "num/den"; integers are written "num/1".
std::string to_text(const Rational& r);
Rational parse_rational(std::string_view text);

bool is_prime(std::uint64_t n);

} // namespace rigidlab
