#pragma once

#include <eform/algebroid/data.hpp>

namespace eform::algebroid {

// Lie algebroid differential:
// (dA)(e_0..e_m) = sum_i (-1)^i rho(e_i) A(..^i..) + sum_{i<j} (-1)^{i+j} A([e_i,e_j], ..^i..^j..).
EForm e_differential(const EForm& alpha, const LieAlgebroidData& data);

// (i_u A)(e_A) = u^a A(e_a, e_A).
EForm interior_product(const ESection& u, const EForm& alpha);

// i_u dA + d i_u A.
EForm e_lie_derivative(const ESection& u, const EForm& alpha, const LieAlgebroidData& data);

// Wedge product with the shuffle normalisation (a^b)(e..) = sum sgn(s) a(..) b(..).
EForm wedge(const EForm& a, const EForm& b);

// Exterior derivative on base forms.
BaseForm de_rham_d(const BaseForm& omega);

// (i_X w)(d_I) = X^i w(d_i, d_I) for a vector field X (arity-1 multivector).
BaseForm contract(const MultiVector& x, const BaseForm& omega);

// Lie bracket of vector fields.
MultiVector lie_bracket(const MultiVector& x, const MultiVector& y);

}  // namespace eform::algebroid
