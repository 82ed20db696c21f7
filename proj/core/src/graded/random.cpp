#include <eform/graded/random.hpp>

#include <algorithm>

namespace eform::graded {

namespace {

void enumerate(const GradedContext& ctx, const std::vector<std::size_t>& gens, std::size_t pos, int factors_left,
               int degree_left, GradedMonomial& m, std::vector<GradedMonomial>& out)
{
    if (pos == gens.size()) {
        if (degree_left == 0)
            out.push_back(m);
        return;
    }
    const auto& g = ctx.generators()[gens[pos]];
    int cap = g.odd() ? std::min(1, factors_left) : factors_left;
    for (int e = 0; e <= cap; ++e) {
        m[gens[pos]] = static_cast<std::uint16_t>(e);
        enumerate(ctx, gens, pos + 1, factors_left - e, degree_left - e * g.degree, m, out);
    }
    m[gens[pos]] = 0;
}

}  // namespace

GradedElement random_homogeneous(const ContextPtr& ctx, int degree, const std::optional<std::vector<Coordinate>>& allowed,
                                 const RandomGradedSpec& spec, std::mt19937_64& rng)
{
    std::vector<std::size_t> gens;
    std::vector<std::string> scalar_names;
    for (Coordinate c : allowed ? *allowed : ctx->coordinates()) {
        if (c.generator)
            gens.push_back(c.index);
        else
            scalar_names.push_back(ctx->name(c));
    }
    std::vector<GradedMonomial> monomials;
    GradedMonomial m(ctx->ngenerators(), 0);
    enumerate(*ctx, gens, 0, spec.max_factors, degree, m, monomials);
    GradedElement out(ctx);
    if (monomials.empty())
        return out;
    auto coeff_vars = poly::make_vars(scalar_names);
    long nterms = 1 + static_cast<long>(rng() % static_cast<unsigned long>(spec.max_terms));
    for (long t = 0; t < nterms; ++t) {
        const auto& mono = monomials[rng() % monomials.size()];
        out.add_term(mono, poly::random_polynomial(coeff_vars, spec.coefficients, rng));
    }
    return out;
}

}  // namespace eform::graded
