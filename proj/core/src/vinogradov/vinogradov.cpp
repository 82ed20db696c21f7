#include <eform/vinogradov/vinogradov.hpp>

#include <random>

namespace eform::vinogradov {

using algebroid::e_differential;
using algebroid::e_lie_derivative;
using algebroid::increasing_tuples;
using algebroid::interior_product;
using poly::Polynomial;

namespace {

std::size_t order_of(const VinSection& s) { return s.form.arity() + 1; }

void same_order(const VinSection& a, const VinSection& b)
{
    if (a.form.arity() != b.form.arity() || a.vec.rank() != b.vec.rank() || a.form.dim() != a.vec.rank())
        throw ShapeError("sections of different Vinogradov algebroids");
}

poly::RandomPolySpec section_spec()
{
    poly::RandomPolySpec s;
    s.max_degree = 2;
    s.max_terms = 2;
    s.coefficient_bound = 2;
    s.zero_probability = 0.2;
    return s;
}

std::vector<std::pair<std::string, VinSection>> frame_sections(const LieAlgebroidData& data, std::size_t n)
{
    std::vector<std::pair<std::string, VinSection>> out;
    std::size_t r = data.rank();
    for (std::size_t a = 0; a < r; ++a)
        out.push_back({"e" + std::to_string(a + 1),
                       {ESection::frame(data.vars(), r, a), EForm(data.vars(), r, n - 1)}});
    for (const auto& idx : increasing_tuples(r, n - 1)) {
        EForm f(data.vars(), r, n - 1);
        f.set(idx, Polynomial(data.vars(), 1));
        out.push_back({"e^" + algebroid::index_label(idx), {ESection(data.vars(), r), f}});
    }
    return out;
}

VinSection random_vin(const LieAlgebroidData& data, std::size_t n, std::mt19937_64& rng)
{
    auto spec = section_spec();
    return {algebroid::random_section(data.vars(), data.rank(), spec, rng),
            algebroid::random_tensor<algebroid::ETag>(data.vars(), data.rank(), n - 1, spec, rng)};
}

VinSection bracket_with(const VinSection& s1, const VinSection& s2, const EForm& w, const LieAlgebroidData& data)
{
    EForm form = e_lie_derivative(s1.vec, s2.form, data) - interior_product(s2.vec, e_differential(s1.form, data)) +
                 interior_product(s2.vec, interior_product(s1.vec, w));
    return {algebroid::section_bracket(data, s1.vec, s2.vec), form};
}

Verdict difference(const VinSection& lhs, const VinSection& rhs, const std::string& prefix)
{
    Verdict v;
    v.absorb((lhs.vec - rhs.vec).residuals(prefix + ".vec"));
    v.absorb((lhs.form - rhs.form).residuals(prefix + ".form"));
    return v;
}

}  // namespace

std::string VinSection::to_string() const { return "(" + vec.to_string() + ") + (" + form.to_string() + ")"; }

VinSection operator+(const VinSection& a, const VinSection& b) { return {a.vec + b.vec, a.form + b.form}; }
VinSection operator-(const VinSection& a, const VinSection& b) { return {a.vec - b.vec, a.form - b.form}; }

EForm vin_inner(const VinSection& s1, const VinSection& s2)
{
    same_order(s1, s2);
    if (order_of(s1) < 2)
        throw ShapeError("the pairing needs n >= 2");
    return interior_product(s1.vec, s2.form) + interior_product(s2.vec, s1.form);
}

VinSection dorfman(const VinSection& s1, const VinSection& s2, const BaseForm& omega, const LieAlgebroidData& data)
{
    same_order(s1, s2);
    std::size_t n = order_of(s1);
    if (omega.arity() != n + 1)
        throw ShapeError("form must have arity n+1");
    if (s1.vec.rank() != data.rank())
        throw ShapeError("section rank does not match the algebroid");
    return bracket_with(s1, s2, compat::iota_rho(omega, data), data);
}

VinSection dorfman(const VinSection& s1, const VinSection& s2, const PreNPlectic& omega, const LieAlgebroidData& data)
{
    return dorfman(s1, s2, omega.form(), data);
}

VinSection graph_section(const ESection& u, const EForm& j) { return {u, interior_product(u, j)}; }

Verdict check_leibniz(const BaseForm& omega, const LieAlgebroidData& data, const SampleOptions& opts)
{
    if (omega.arity() < 2)
        throw ShapeError("form must have arity n+1 >= 2");
    std::size_t n = omega.arity() - 1;
    if (omega.dim() != data.dim())
        throw ShapeError("form and algebroid have different bases");
    EForm w = compat::iota_rho(omega, data);
    auto br = [&](const VinSection& a, const VinSection& b) { return bracket_with(a, b, w, data); };
    auto leibniz = [&](const VinSection& a, const VinSection& b, const VinSection& c) {
        return br(a, br(b, c)) - br(br(a, b), c) - br(b, br(a, c));
    };

    Verdict v;
    auto frames = frame_sections(data, n);
    int cyclic_failures = 0;
    for (const auto& [na, a] : frames) {
        for (const auto& [nb, b] : frames) {
            for (const auto& [nc, c] : frames) {
                auto res = leibniz(a, b, c);
                if (v.passed && !(res.vec.is_zero() && res.form.is_zero()))
                    v.absorb(difference(res, {ESection(data.vars(), data.rank()), EForm(data.vars(), data.rank(), n - 1)},
                                        "leibniz(" + na + "," + nb + "," + nc + ")"));
                auto cyc = br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b);
                cyclic_failures += !(cyc.vec.is_zero() && cyc.form.is_zero());
            }
        }
    }
    std::mt19937_64 rng(opts.seed);
    for (int s = 0; s < opts.samples && v.passed; ++s) {
        auto a = random_vin(data, n, rng);
        auto b = random_vin(data, n, rng);
        auto c = random_vin(data, n, rng);
        auto res = leibniz(a, b, c);
        if (!(res.vec.is_zero() && res.form.is_zero()))
            v.absorb(difference(res, {ESection(data.vars(), data.rank()), EForm(data.vars(), data.rank(), n - 1)},
                                "leibniz(random " + std::to_string(s + 1) + ")"));
    }
    if (cyclic_failures > 0)
        v.note("cyclic-sum", std::to_string(cyclic_failures) + " frame triples");
    return v;
}

Verdict check_higher_dirac(const EForm& j, const PreNPlectic& omega, const LieAlgebroidData& data,
                           const SampleOptions& opts)
{
    std::size_t n = static_cast<std::size_t>(omega.n());
    if (j.arity() != n)
        throw ShapeError("J must have arity n");
    if (j.dim() != data.rank())
        throw ShapeError("J rank does not match the algebroid");
    Verdict v;
    v.absorb(algebroid::check_lie_algebroid(data), "algebroid:");

    std::size_t r = data.rank();
    EForm w = compat::iota_rho(omega.form(), data);
    std::vector<std::pair<std::string, ESection>> secs;
    for (std::size_t a = 0; a < r; ++a)
        secs.push_back({"e" + std::to_string(a + 1), ESection::frame(data.vars(), r, a)});
    std::mt19937_64 rng(opts.seed);
    int randoms = std::min(opts.samples, 10);
    for (int s = 0; s < randoms; ++s)
        secs.push_back({"u" + std::to_string(s + 1), algebroid::random_section(data.vars(), r, section_spec(), rng)});

    for (std::size_t x = 0; x < secs.size(); ++x) {
        for (std::size_t y = 0; y < secs.size(); ++y) {
            const auto& [nu, u] = secs[x];
            const auto& [nv, v2] = secs[y];
            auto s1 = graph_section(u, j);
            auto s2 = graph_section(v2, j);
            std::string pair = "(" + nu + "," + nv + ")";
            if (n >= 2 && x <= y)
                v.absorb(vin_inner(s1, s2).residuals("isotropic" + pair));
            auto defect = bracket_with(s1, s2, w, data) - graph_section(algebroid::section_bracket(data, u, v2), j);
            Verdict d = difference(defect, {ESection(data.vars(), r), EForm(data.vars(), r, n - 1)}, "involutive" + pair);
            if (!d.passed) {
                v.absorb(d);
                return v;
            }
        }
    }
    return v;
}

}  // namespace eform::vinogradov
