#include <eform/symplectic/phase_space.hpp>

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include <eform/errors.hpp>

namespace eform::symplectic {

PhaseSpace PhaseSpace::create(int degree, const std::vector<CanonicalPair>& pairs)
{
    std::vector<std::string> scalars;
    std::vector<graded::GradedGenerator> gens;
    for (const auto& p : pairs) {
        if (p.coordinate_degree + p.momentum_degree != degree)
            throw ShapeError(fmt::format("pair ({}, {}) has degrees summing to {}, expected {}", p.coordinate,
                                         p.momentum, p.coordinate_degree + p.momentum_degree, degree));
        for (auto [name, deg] : {std::pair{p.coordinate, p.coordinate_degree}, {p.momentum, p.momentum_degree}}) {
            if (deg == 0)
                scalars.push_back(name);
            else
                gens.push_back({name, deg});
        }
    }
    PhaseSpace ps;
    ps.ctx_ = graded::GradedContext::create(std::move(scalars), std::move(gens));
    ps.degree_ = degree;
    for (const auto& p : pairs) {
        Pair q{ps.ctx_->coordinate(p.coordinate), ps.ctx_->coordinate(p.momentum), p.coordinate_degree,
               p.momentum_degree};
        ps.pairs_.push_back(q);
        ps.momenta_.push_back(q.momentum);
    }
    return ps;
}

bool PhaseSpace::is_momentum(Coordinate c) const
{
    return std::find(momenta_.begin(), momenta_.end(), c) != momenta_.end();
}

GradedElement PhaseSpace::element(std::string_view name) const
{
    return GradedElement::coordinate(ctx_, name);
}

GradedElement PhaseSpace::parse(std::string_view source) const
{
    return graded::parse_graded(source, ctx_);
}

int PhaseSpace::momentum_multiplicity(const GradedElement& f) const
{
    int best = 0;
    for (const auto& [m, coeff] : f.terms()) {
        int gen_part = 0;
        std::vector<std::size_t> scalar_momenta;
        for (Coordinate c : momenta_) {
            if (c.generator)
                gen_part += m[c.index];
            else
                scalar_momenta.push_back(c.index);
        }
        int scalar_part = 0;
        for (const auto& [e, v] : coeff.terms()) {
            int s = 0;
            for (auto i : scalar_momenta)
                s += e[i];
            scalar_part = std::max(scalar_part, s);
        }
        best = std::max(best, gen_part + scalar_part);
    }
    return best;
}

GradedElement poisson_bracket(const GradedElement& f, const GradedElement& g, const PhaseSpace& ps)
{
    if (f.context() != ps.context() || g.context() != ps.context())
        throw ShapeError("bracket operands are not in the phase-space context");
    GradedElement out(ps.context());
    if (f.is_zero() || g.is_zero())
        return out;
    for (const auto& pr : ps.pairs()) {
        GradedElement fc = f.right_derivative(pr.coordinate);
        if (!fc.is_zero()) {
            GradedElement gp = g.left_derivative(pr.momentum);
            if (!gp.is_zero())
                out += fc * gp;
        }
        GradedElement fp = f.right_derivative(pr.momentum);
        if (!fp.is_zero()) {
            GradedElement gc = g.left_derivative(pr.coordinate);
            if (!gc.is_zero()) {
                bool odd = (pr.coordinate_degree * pr.momentum_degree) % 2 != 0;
                if (odd)
                    out += fp * gc;
                else
                    out -= fp * gc;
            }
        }
    }
    return out;
}

GradedElement twist(const GradedElement& phi, const GradedElement& f, const PhaseSpace& ps)
{
    if (phi.is_zero())
        return f;
    if (!phi.degree().is(ps.degree()))
        throw PreconditionError(fmt::format("twist needs a function of degree {}", ps.degree()));
    if (ps.momentum_multiplicity(phi) != 0)
        throw PreconditionError("twist needs a momentum-free function");
    int bound = 1 + ps.momentum_multiplicity(f);
    GradedElement result = f;
    GradedElement term = f;
    for (int k = 1;; ++k) {
        term = poisson_bracket(term, phi, ps) * poly::Rational(1, k);
        if (term.is_zero())
            return result;
        if (k > bound)
            throw PreconditionError("twist did not terminate within its iteration bound");
        result += term;
    }
}

GradedElement project_to_base(const GradedElement& f, const PhaseSpace& ps)
{
    return f.substitute_zero(ps.momenta());
}

GradedElement derived_bracket(const GradedElement& f, const GradedElement& g, const GradedElement& theta,
                              const PhaseSpace& ps)
{
    if (ps.momentum_multiplicity(f) != 0 || ps.momentum_multiplicity(g) != 0)
        throw PreconditionError("derived bracket arguments must be momentum-free");
    return project_to_base(poisson_bracket(poisson_bracket(f, theta, ps), g, ps), ps);
}

}  // namespace eform::symplectic
