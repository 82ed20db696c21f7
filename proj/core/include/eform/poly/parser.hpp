#pragma once

#include <string_view>

#include <eform/poly/polynomial.hpp>

namespace eform::poly {

// Grammar: sums and differences of products of powers; a power is a number,
// a rational literal "p/q", a variable or a parenthesised expression, raised
// to a nonnegative integer. Throws ParseError with the byte offset.
Polynomial parse_poly(std::string_view source, const VarList& vars);

}  // namespace eform::poly
