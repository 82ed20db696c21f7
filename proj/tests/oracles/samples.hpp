#pragma once

#include <string>
#include <vector>

#include <eform/algebroid/poisson.hpp>
#include <eform/poly/parser.hpp>

namespace samples {

using eform::algebroid::BaseForm;
using eform::algebroid::LieAlgebroidData;
using eform::algebroid::MultiVector;
using eform::poly::Polynomial;
using eform::poly::VarList;

inline Polynomial P(const VarList& vars, const std::string& src) { return eform::poly::parse_poly(src, vars); }

// so(3) acting on R^3 by rotations, [e1,e2] = e3 cyclically.
LieAlgebroidData so3_action();
// so(3) over a point.
LieAlgebroidData so3_lie_algebra();
// SO(2) rotating R^2, rho(e) = x d_y - y d_x.
LieAlgebroidData so2_action();
LieAlgebroidData tangent_r2();
// pi = d1 ^ d2 on R^2.
MultiVector constant_pi_r2();
// pi = d1 ^ d2 and H = x3 dx1^dx2^dx3 on R^3.
MultiVector twisted_pi_r3();
BaseForm twisted_h_r3();
// The inverse of s = dx1^dx2 + dx3^dx4 + x2 x4 dx1^dx3 on R^4 with H matching
// 1/2 [pi,pi]_S = <(x)^3 pi, H>.
MultiVector twisted_pi_r4();
BaseForm twisted_h_r4();

}  // namespace samples
