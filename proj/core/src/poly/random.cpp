#include <eform/poly/random.hpp>

namespace eform::poly {

namespace {

// Plain modular reduction keeps the stream identical across standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi)
{
    auto span = static_cast<unsigned long long>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

}  // namespace

Polynomial random_polynomial(const VarList& vars, const RandomPolySpec& spec, std::mt19937_64& rng)
{
    Polynomial p(vars);
    if (spec.zero_probability > 0.0) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < spec.zero_probability)
            return p;
    }
    long nterms = draw(rng, 1, spec.max_terms);
    for (long t = 0; t < nterms; ++t) {
        Exponents e(vars->size(), 0);
        long deg = draw(rng, 0, spec.max_degree);
        for (long k = 0; k < deg && !e.empty(); ++k)
            ++e[static_cast<std::size_t>(draw(rng, 0, static_cast<long>(e.size()) - 1))];
        long c = 0;
        while (c == 0)
            c = draw(rng, -spec.coefficient_bound, spec.coefficient_bound);
        p.add_term(e, Rational(c));
    }
    return p;
}

}  // namespace eform::poly
