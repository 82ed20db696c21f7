#include <eform/graded/element.hpp>

#include <algorithm>

#include <fmt/format.h>

#include <eform/errors.hpp>

namespace eform::graded {

namespace {

void require_same(const ContextPtr& a, const ContextPtr& b)
{
    if (a != b)
        throw ShapeError("graded elements belong to different contexts");
}

}  // namespace

GradedElement::GradedElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

GradedElement::GradedElement(ContextPtr ctx, const poly::Polynomial& scalar) : ctx_(std::move(ctx))
{
    if (!scalar.is_zero())
        terms_.emplace(GradedMonomial(ctx_->ngenerators(), 0), scalar.embed(ctx_->scalars()));
}

GradedElement::GradedElement(ContextPtr ctx, const poly::Rational& c)
    : GradedElement(ctx, poly::Polynomial(ctx->scalars(), c))
{
}

GradedElement GradedElement::coordinate(ContextPtr ctx, Coordinate c)
{
    if (!c.generator)
        return GradedElement(ctx, poly::Polynomial::variable(ctx->scalars(), c.index));
    GradedElement e(ctx);
    GradedMonomial m(ctx->ngenerators(), 0);
    m.at(c.index) = 1;
    e.terms_.emplace(std::move(m), poly::Polynomial(ctx->scalars(), 1));
    return e;
}

GradedElement GradedElement::coordinate(ContextPtr ctx, std::string_view name)
{
    Coordinate c = ctx->coordinate(name);
    return coordinate(std::move(ctx), c);
}

int GradedElement::monomial_degree(const GradedMonomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m[i] * ctx_->generators()[i].degree;
    return d;
}

Degree GradedElement::degree() const
{
    Degree out;
    for (const auto& [m, c] : terms_) {
        int d = monomial_degree(m);
        if (out.kind == Degree::Kind::zero) {
            out = {Degree::Kind::homogeneous, d};
        } else if (out.value != d) {
            return {Degree::Kind::mixed, 0};
        }
    }
    return out;
}

poly::Polynomial GradedElement::coefficient(const GradedMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? poly::Polynomial(ctx_->scalars()) : it->second;
}

int GradedElement::max_power(Coordinate c) const
{
    int best = 0;
    for (const auto& [m, coeff] : terms_) {
        if (c.generator) {
            best = std::max<int>(best, m[c.index]);
        } else {
            for (const auto& [e, q] : coeff.terms())
                best = std::max<int>(best, e[c.index]);
        }
    }
    return best;
}

void GradedElement::add_term(const GradedMonomial& m, const poly::Polynomial& coeff)
{
    if (m.size() != ctx_->ngenerators())
        throw ShapeError("graded monomial has wrong length");
    if (coeff.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff.embed(ctx_->scalars()));
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

GradedElement& GradedElement::operator+=(const GradedElement& o)
{
    require_same(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o)
{
    require_same(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

GradedElement& GradedElement::operator*=(const poly::Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, p] : terms_)
        p *= c;
    return *this;
}

GradedElement GradedElement::operator-() const
{
    GradedElement e = *this;
    for (auto& [m, p] : e.terms_)
        p = -p;
    return e;
}

int koszul_sign(const GradedContext& ctx, const GradedMonomial& a, const GradedMonomial& b)
{
    const auto& gens = ctx.generators();
    int swaps = 0;
    int odd_in_a_after = 0;
    // Walk from the right: each odd generator of b passes the odd generators
    // of a that sit after it in context order.
    for (std::size_t i = gens.size(); i-- > 0;) {
        if (!gens[i].odd())
            continue;
        if (b[i])
            swaps += odd_in_a_after;
        if (a[i])
            ++odd_in_a_after;
    }
    return swaps % 2 ? -1 : 1;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b)
{
    require_same(a.ctx_, b.ctx_);
    GradedElement out(a.ctx_);
    const auto& gens = a.ctx_->generators();
    GradedMonomial m(gens.size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            bool vanish = false;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
                if (gens[i].odd() && m[i] > 1)
                    vanish = true;
            }
            if (vanish)
                continue;
            poly::Polynomial c = ca * cb;
            if (koszul_sign(*a.ctx_, ma, mb) < 0)
                c = -c;
            out.add_term(m, c);
        }
    }
    return out;
}

bool GradedElement::operator==(const GradedElement& o) const
{
    return ctx_ == o.ctx_ && terms_ == o.terms_;
}

namespace {

GradedElement derivative(const GradedElement& a, Coordinate c, bool from_left)
{
    const auto& ctx = a.context();
    GradedElement out(ctx);
    if (!c.generator) {
        for (const auto& [m, p] : a.terms())
            out.add_term(m, p.partial_derivative(c.index));
        return out;
    }
    const auto& gens = ctx->generators();
    bool odd = gens[c.index].odd();
    for (const auto& [m, p] : a.terms()) {
        if (m[c.index] == 0)
            continue;
        GradedMonomial r = m;
        --r[c.index];
        poly::Polynomial coeff = p;
        if (odd) {
            int passed = 0;
            std::size_t lo = from_left ? 0 : c.index + 1;
            std::size_t hi = from_left ? c.index : gens.size();
            for (std::size_t i = lo; i < hi; ++i)
                if (gens[i].odd() && m[i])
                    ++passed;
            if (passed % 2)
                coeff = -coeff;
        } else {
            coeff *= poly::Rational(m[c.index]);
        }
        out.add_term(r, coeff);
    }
    return out;
}

}  // namespace

GradedElement GradedElement::left_derivative(Coordinate c) const
{
    return derivative(*this, c, true);
}

GradedElement GradedElement::right_derivative(Coordinate c) const
{
    return derivative(*this, c, false);
}

GradedElement GradedElement::substitute_zero(std::span<const Coordinate> coords) const
{
    GradedElement out(ctx_);
    for (const auto& [m, p] : terms_) {
        bool keep = true;
        poly::Polynomial q = p;
        for (Coordinate c : coords) {
            if (c.generator) {
                if (m[c.index]) {
                    keep = false;
                    break;
                }
            } else {
                q = q.substitute_zero(c.index);
            }
        }
        if (keep)
            out.add_term(m, q);
    }
    return out;
}

GradedElement GradedElement::filter_degree(std::span<const Coordinate> coords, int power) const
{
    GradedElement out(ctx_);
    for (const auto& [m, p] : terms_) {
        int gen_power = 0;
        std::vector<std::size_t> scalar_idx;
        for (Coordinate c : coords) {
            if (c.generator)
                gen_power += m[c.index];
            else
                scalar_idx.push_back(c.index);
        }
        poly::Polynomial q(ctx_->scalars());
        for (const auto& [e, v] : p.terms()) {
            int sp = 0;
            for (auto i : scalar_idx)
                sp += e[i];
            if (gen_power + sp == power)
                q.add_term(e, v);
        }
        out.add_term(m, q);
    }
    return out;
}

std::string GradedElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<const TermMap::value_type*> order;
    for (const auto& t : terms_)
        order.push_back(&t);
    // Highest total degree first, then by the coordinate order.
    std::stable_sort(order.begin(), order.end(), [&](auto* x, auto* y) {
        int dx = monomial_degree(x->first), dy = monomial_degree(y->first);
        if (dx != dy)
            return dx > dy;
        return x->first > y->first;
    });
    std::string out;
    bool first = true;
    for (auto* t : order) {
        const auto& [m, p] = *t;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i])
                continue;
            if (!mono.empty())
                mono += '*';
            mono += ctx_->generators()[i].name;
            if (m[i] > 1)
                mono += fmt::format("^{}", m[i]);
        }
        std::string coeff = p.to_string();
        bool negative = false;
        if (p.terms().size() == 1 && coeff.front() == '-') {
            negative = true;
            coeff.erase(0, 1);
        }
        std::string body;
        if (mono.empty())
            body = p.terms().size() > 1 ? "(" + coeff + ")" : coeff;
        else if (coeff == "1")
            body = mono;
        else if (p.terms().size() > 1)
            body = "(" + coeff + ")*" + mono;
        else
            body = coeff + "*" + mono;
        if (first)
            out = (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

GradedElement gmul(const GradedElement& a, const GradedElement& b)
{
    return a * b;
}

Degree degree_of(const GradedElement& a)
{
    return a.degree();
}

GradedElement left_derivative(const GradedElement& a, Coordinate c)
{
    return a.left_derivative(c);
}

GradedElement right_derivative(const GradedElement& a, Coordinate c)
{
    return a.right_derivative(c);
}

}  // namespace eform::graded
