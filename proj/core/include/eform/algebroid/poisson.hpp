#pragma once

#include <eform/algebroid/data.hpp>
#include <eform/graded/element.hpp>
#include <eform/symplectic/phase_space.hpp>

namespace eform::algebroid {

// P -> sum over increasing I of P^I theta_{i1}...theta_{ik} on T*[1]M.
graded::GradedElement multivector_to_function(const MultiVector& p, const symplectic::PhaseSpace& ps);
MultiVector function_to_multivector(const graded::GradedElement& f, const VarList& vars);

// [P, Q]_S := -{P, Q} on T*[1]M, so that [X, Y]_S is the Lie bracket of vector
// fields and [X, f]_S = X(f).
MultiVector schouten_bracket(const MultiVector& p, const MultiVector& q);

// pi#(dx^i) = pi^{ij} d_j.
MultiVector pi_sharp(const MultiVector& pi, std::size_t i);

// <(x)^k pi, B>(dx^{i1}, ..., dx^{ik}) = B(pi# dx^{i1}, ..., pi# dx^{ik}).
MultiVector pi_pushforward(const MultiVector& pi, const BaseForm& b);

// T*M with anchor -pi# and bracket -[a,b]_{pi,H}, the image of the (twisted)
// Koszul algebroid under e -> -e. Structure functions are read off from the
// Cartan calculus on frame 1-forms.
LieAlgebroidData poisson_algebroid(const MultiVector& pi);
LieAlgebroidData twisted_poisson_algebroid(const MultiVector& pi, const BaseForm& h);

// dH = 0 and 1/2 [pi,pi]_S = <(x)^3 pi, H>.
Verdict check_twisted_poisson(const MultiVector& pi, const BaseForm& h);

}  // namespace eform::algebroid
