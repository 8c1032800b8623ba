#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace radsolve {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; only hand-assembled values need canonicalize().
using Integer = mpz_class;
using Rational = mpq_class;

int sign(const Rational &q);
int sign(const Integer &z);

/// "p" or "p/q".
std::string to_string(const Rational &q);

/// Parses "p", "-p", "p/q" or a finite decimal such as "-1.25" exactly.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

Rational pow(const Rational &base, unsigned exponent);

Integer floor(const Rational &q);
Integer ceil(const Rational &q);

/// 10^k for any integer k.
Rational pow10(long k);

} // namespace radsolve
