#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace eqknot {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `-5`, `2/3`, `+7`. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
bool is_perfect_square(const Integer& n);
/// True iff q = r^2 for some rational r.
bool is_rational_square(const Rational& q);

/// Smallest integer >= q.
Integer ceil(const Rational& q);

}  // namespace eqknot
