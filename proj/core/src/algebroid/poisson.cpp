#include <eform/algebroid/poisson.hpp>

#include <eform/algebroid/calculus.hpp>
#include <eform/errors.hpp>
#include <eform/symplectic/spaces.hpp>

namespace eform::algebroid {

using graded::GradedElement;

GradedElement multivector_to_function(const MultiVector& p, const symplectic::PhaseSpace& ps)
{
    const auto& ctx = ps.context();
    GradedElement out(ctx);
    for (const auto& [idx, c] : p.components()) {
        GradedElement term(ctx, c);
        for (auto i : idx)
            term = term * GradedElement::coordinate(ctx, symplectic::theta_name(i));
        out += term;
    }
    return out;
}

MultiVector function_to_multivector(const GradedElement& f, const VarList& vars)
{
    const auto& ctx = f.context();
    auto d = f.degree();
    if (d.kind == graded::Degree::Kind::mixed)
        throw ShapeError("inhomogeneous function is not a multivector");
    std::size_t arity = d.kind == graded::Degree::Kind::zero ? 0 : static_cast<std::size_t>(d.value);
    MultiVector out(vars, vars->size(), arity);
    for (const auto& [m, c] : f.terms()) {
        Index idx;
        for (std::size_t i = 0; i < vars->size(); ++i)
            if (m[ctx->coordinate(symplectic::theta_name(i)).index])
                idx.push_back(i);
        out.add(idx, c);
    }
    return out;
}

MultiVector schouten_bracket(const MultiVector& p, const MultiVector& q)
{
    auto ps = symplectic::schouten_space(*p.vars());
    auto f = multivector_to_function(p, ps);
    auto g = multivector_to_function(q, ps);
    GradedElement b = -symplectic::poisson_bracket(f, g, ps);
    if (b.is_zero()) {
        std::size_t arity = p.arity() + q.arity();
        return MultiVector(p.vars(), p.dim(), arity == 0 ? 0 : arity - 1);
    }
    return function_to_multivector(b, p.vars());
}

MultiVector pi_sharp(const MultiVector& pi, std::size_t i)
{
    MultiVector x(pi.vars(), pi.dim(), 1);
    for (std::size_t j = 0; j < pi.dim(); ++j)
        if (j != i)
            x.add({j}, pi.at({i, j}));
    return x;
}

MultiVector pi_pushforward(const MultiVector& pi, const BaseForm& b)
{
    std::size_t k = b.arity();
    MultiVector out(pi.vars(), pi.dim(), k);
    for (const auto& idx : increasing_tuples(pi.dim(), k)) {
        BaseForm cur = b;
        // Contract pi# dx^{i_1} into the first slot, then pi# dx^{i_2}, ...
        for (auto i : idx)
            cur = contract(pi_sharp(pi, i), cur);
        out.add(idx, cur.at({}));
    }
    return out;
}

namespace {

BaseForm lie_derivative(const MultiVector& x, const BaseForm& beta)
{
    BaseForm out = contract(x, de_rham_d(beta));
    if (beta.arity() > 0)
        out += de_rham_d(contract(x, beta));
    return out;
}

BaseForm coordinate_one_form(const VarList& vars, std::size_t i)
{
    BaseForm f(vars, vars->size(), 1);
    f.add({i}, Polynomial(vars, 1));
    return f;
}

LieAlgebroidData koszul(const MultiVector& pi, const BaseForm* h)
{
    if (pi.arity() != 2)
        throw ShapeError("a Poisson structure is a bivector");
    if (h && (h->arity() != 3 || h->dim() != pi.dim()))
        throw ShapeError("the twisting form must be a 3-form on the same base");
    std::size_t m = pi.dim();
    LieAlgebroidData data(*pi.vars(), m);
    for (std::size_t i = 0; i < m; ++i) {
        MultiVector s = pi_sharp(pi, i);
        for (std::size_t j = 0; j < m; ++j)
            data.set_anchor(i, j, -s.at({j}));
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            BaseForm pij(pi.vars(), m, 0);
            pij.add({}, pi.at({i, j}));
            // [a,b]_{pi,H} = L_{pi# a} b - L_{pi# b} a - d pi(a,b) + i_{pi# a} i_{pi# b} H
            BaseForm k = lie_derivative(pi_sharp(pi, i), coordinate_one_form(pi.vars(), j)) -
                         lie_derivative(pi_sharp(pi, j), coordinate_one_form(pi.vars(), i)) - de_rham_d(pij);
            if (h)
                k += contract(pi_sharp(pi, i), contract(pi_sharp(pi, j), *h));
            for (std::size_t c = 0; c < m; ++c)
                data.set_structure(c, i, j, -k.at({c}));
        }
    }
    return data;
}

}  // namespace

LieAlgebroidData poisson_algebroid(const MultiVector& pi)
{
    return koszul(pi, nullptr);
}

LieAlgebroidData twisted_poisson_algebroid(const MultiVector& pi, const BaseForm& h)
{
    return koszul(pi, &h);
}

Verdict check_twisted_poisson(const MultiVector& pi, const BaseForm& h)
{
    if (pi.arity() != 2 || h.arity() != 3)
        throw ShapeError("twisted Poisson data is a bivector and a 3-form");
    Verdict v;
    v.absorb(de_rham_d(h).residuals("dH"));
    MultiVector lhs = Rational(1, 2) * schouten_bracket(pi, pi);
    v.absorb((lhs - pi_pushforward(pi, h)).residuals("[pi,pi]/2-<pi,H>"));
    return v;
}

}  // namespace eform::algebroid
