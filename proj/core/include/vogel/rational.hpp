#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace vogel {

/// Arbitrary-precision rational; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "5", "-2", "5/3", "−7/2" (U+2212 minus accepted). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& q);

/// Numerator and denominator as decimal strings.
std::array<std::string, 2> to_pair(const Rational& q);
Rational from_pair(std::string_view num, std::string_view den);

/// Sign as -1, 0, +1.
inline int sign_of(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Uniform random rational num/den with |num| <= bound, 1 <= den <= bound; never zero
/// when `nonzero` is set.
Rational random_rational(std::mt19937_64& rng, int bound = 1000, bool nonzero = true);

}  // namespace vogel
