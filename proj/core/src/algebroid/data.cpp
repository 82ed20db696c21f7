#include <eform/algebroid/data.hpp>

#include <fmt/format.h>

#include <eform/errors.hpp>
#include <eform/symplectic/spaces.hpp>

namespace eform::algebroid {

LieAlgebroidData::LieAlgebroidData(std::vector<std::string> base, std::size_t rank)
    : vars_(poly::make_vars(std::move(base))), rank_(rank)
{
    anchor_.assign(rank, std::vector<Polynomial>(vars_->size(), Polynomial(vars_)));
    structure_.assign(rank, AltTensor<ETag>(vars_, rank, 2));
}

void LieAlgebroidData::set_anchor(std::size_t a, std::size_t i, const Polynomial& p)
{
    anchor_.at(a).at(i) = p.embed(vars_);
}

Polynomial LieAlgebroidData::structure(std::size_t c, std::size_t a, std::size_t b) const
{
    return structure_.at(c).at({a, b});
}

void LieAlgebroidData::set_structure(std::size_t c, std::size_t a, std::size_t b, const Polynomial& p)
{
    structure_.at(c).set({a, b}, p);
}

bool LieAlgebroidData::constant_structure() const
{
    for (const auto& s : structure_)
        for (const auto& [k, p] : s.components())
            if (!p.is_constant())
                return false;
    return true;
}

LieAlgebroidData tangent_algebroid(const std::vector<std::string>& base)
{
    LieAlgebroidData data(base, base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        data.set_anchor(i, i, Polynomial(data.vars(), 1));
    return data;
}

Polynomial anchor_apply(const LieAlgebroidData& data, std::size_t a, const Polynomial& f)
{
    Polynomial out(data.vars());
    for (std::size_t i = 0; i < data.dim(); ++i) {
        const auto& r = data.anchor(a, i);
        if (!r.is_zero())
            out += r * f.partial_derivative(i);
    }
    return out;
}

Polynomial anchor_apply(const LieAlgebroidData& data, const ESection& u, const Polynomial& f)
{
    Polynomial out(data.vars());
    for (std::size_t a = 0; a < data.rank(); ++a)
        if (!u[a].is_zero())
            out += u[a] * anchor_apply(data, a, f);
    return out;
}

MultiVector anchor_of(const LieAlgebroidData& data, const ESection& u)
{
    MultiVector x(data.vars(), data.dim(), 1);
    for (std::size_t i = 0; i < data.dim(); ++i) {
        Polynomial c(data.vars());
        for (std::size_t a = 0; a < data.rank(); ++a)
            c += u[a] * data.anchor(a, i);
        x.add({i}, c);
    }
    return x;
}

ESection section_bracket(const LieAlgebroidData& data, const ESection& u, const ESection& v)
{
    ESection out(data.vars(), data.rank());
    for (std::size_t c = 0; c < data.rank(); ++c) {
        Polynomial w = anchor_apply(data, u, v[c]) - anchor_apply(data, v, u[c]);
        for (std::size_t a = 0; a < data.rank(); ++a) {
            if (u[a].is_zero())
                continue;
            for (std::size_t b = 0; b < data.rank(); ++b) {
                if (a == b || v[b].is_zero())
                    continue;
                Polynomial s = data.structure(c, a, b);
                if (!s.is_zero())
                    w += u[a] * v[b] * s;
            }
        }
        out.set(c, w);
    }
    return out;
}

graded::GradedVectorField algebroid_q(const LieAlgebroidData& data)
{
    std::vector<graded::GradedGenerator> gens;
    for (std::size_t a = 0; a < data.rank(); ++a)
        gens.push_back({symplectic::q_name(a), 1});
    auto ctx = graded::GradedContext::create(data.base(), gens);
    auto q = [&](std::size_t a) { return graded::GradedElement::coordinate(ctx, symplectic::q_name(a)); };
    graded::GradedVectorField Q(ctx, 1);
    for (std::size_t i = 0; i < data.dim(); ++i) {
        graded::GradedElement img(ctx);
        for (std::size_t a = 0; a < data.rank(); ++a)
            img += graded::GradedElement(ctx, data.anchor(a, i)) * q(a);
        Q.set({false, i}, img);
    }
    for (std::size_t a = 0; a < data.rank(); ++a) {
        graded::GradedElement img(ctx);
        for (std::size_t b = 0; b < data.rank(); ++b)
            for (std::size_t c = b + 1; c < data.rank(); ++c)
                img -= graded::GradedElement(ctx, data.structure(a, b, c)) * q(b) * q(c);
        Q.set(ctx->coordinate(symplectic::q_name(a)), img);
    }
    return Q;
}

Verdict check_lie_algebroid(const LieAlgebroidData& data)
{
    return algebroid_q(data).check_square_zero("Q^2");
}

Verdict check_lie_algebroid_framewise(const LieAlgebroidData& data)
{
    Verdict v;
    auto e = [&](std::size_t a) { return ESection::frame(data.vars(), data.rank(), a); };
    for (std::size_t a = 0; a < data.rank(); ++a) {
        for (std::size_t b = a + 1; b < data.rank(); ++b) {
            MultiVector lhs = anchor_of(data, section_bracket(data, e(a), e(b)));
            MultiVector ra = anchor_of(data, e(a)), rb = anchor_of(data, e(b));
            MultiVector bracket(data.vars(), data.dim(), 1);
            for (std::size_t j = 0; j < data.dim(); ++j) {
                Polynomial c(data.vars());
                for (std::size_t i = 0; i < data.dim(); ++i)
                    c += ra.at({i}) * rb.at({j}).partial_derivative(i) - rb.at({i}) * ra.at({j}).partial_derivative(i);
                bracket.add({j}, c);
            }
            v.absorb((lhs - bracket).residuals(fmt::format("anchor[{},{}]", a + 1, b + 1)));
            for (std::size_t c = b + 1; c < data.rank(); ++c) {
                ESection jac = section_bracket(data, section_bracket(data, e(a), e(b)), e(c)) +
                               section_bracket(data, section_bracket(data, e(b), e(c)), e(a)) +
                               section_bracket(data, section_bracket(data, e(c), e(a)), e(b));
                v.absorb(jac.residuals(fmt::format("Jacobi[{},{},{}]", a + 1, b + 1, c + 1)));
            }
        }
    }
    return v;
}

}  // namespace eform::algebroid
