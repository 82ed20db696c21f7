#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eform::poly {

using Rational = mpq_class;

// "p/q" in lowest terms with positive denominator, "p" for integers.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

}  // namespace eform::poly
