#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace csd {

using Integer = mpz_class;
using Rational = mpq_class;

/// Generalized binomial coefficient x(x-1)...(x-k+1)/k! for rational x.
Rational binomial(const Rational& x, std::int64_t k);

/// Exact k! as a rational.
Rational factorial(std::int64_t k);

bool is_integer(const Rational& q);

/// Lowest-terms string: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

/// Inverse of to_string; also accepts non-reduced input and canonicalizes it.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::int64_t gcd(std::int64_t a, std::int64_t b);

}  // namespace csd
