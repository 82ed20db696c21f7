#include <eform/qgraded/qgraded.hpp>

#include <eform/algebroid/calculus.hpp>
#include <eform/symplectic/spaces.hpp>

namespace eform::qgraded {

using algebroid::Index;
using algebroid::increasing_tuples;
using poly::Rational;
using symplectic::poisson_bracket;

namespace {

int sign(bool negative) { return negative ? -1 : 1; }

GradedElement gen(const PhaseSpace& ps, const std::string& name) { return ps.element(name); }

GradedElement scalar(const PhaseSpace& ps, const poly::Polynomial& p) { return GradedElement(ps.context(), p); }

GradedElement product(const PhaseSpace& ps, const Index& idx, std::string (*name)(std::size_t))
{
    GradedElement out(ps.context(), Rational(1));
    for (auto k : idx)
        out = out * gen(ps, name(k));
    return out;
}

void require_order(int n)
{
    if (n < 1)
        throw ShapeError("order n must be at least 1");
}

GradedVectorField hamiltonian(const GradedElement& f, const PhaseSpace& ps, int degree)
{
    GradedVectorField out(ps.context(), degree);
    for (auto c : ps.context()->coordinates())
        out.set(c, poisson_bracket(f, GradedElement::coordinate(ps.context(), c), ps));
    return out;
}

}  // namespace

GradedElement e_form_function(const EForm& alpha, const PhaseSpace& ps)
{
    GradedElement out(ps.context());
    for (const auto& [idx, v] : alpha.components())
        out += scalar(ps, v) * product(ps, idx, symplectic::q_name);
    return out;
}

GradedElement base_form_function(const BaseForm& h, const PhaseSpace& ps)
{
    GradedElement out(ps.context());
    for (const auto& [idx, v] : h.components())
        out += scalar(ps, v) * product(ps, idx, symplectic::zeta_name);
    return out;
}

GradedElement build_theta_lie(const LieAlgebroidData& data, int n, const PhaseSpace& ps)
{
    require_order(n);
    Rational s(sign((n - 1) % 2 != 0));
    GradedElement out(ps.context());
    for (std::size_t a = 0; a < data.rank(); ++a) {
        for (std::size_t i = 0; i < data.dim(); ++i)
            if (!data.anchor(a, i).is_zero())
                out += s * (scalar(ps, data.anchor(a, i)) * gen(ps, symplectic::z_name(i)) *
                            gen(ps, symplectic::q_name(a)));
        // 1/2 C^a_{bc} q^b q^c summed over b < c.
        for (std::size_t b = 0; b < data.rank(); ++b)
            for (std::size_t c = b + 1; c < data.rank(); ++c)
                if (!data.structure(a, b, c).is_zero())
                    out += s * (scalar(ps, data.structure(a, b, c)) * gen(ps, symplectic::q_name(b)) *
                                gen(ps, symplectic::q_name(c)) * gen(ps, symplectic::y_name(a)));
    }
    return out;
}

GradedVectorField build_q_lie(const LieAlgebroidData& data, int n, const PhaseSpace& ps)
{
    return hamiltonian(-build_theta_lie(data, n, ps), ps, 1);
}

GradedVectorField build_q_comp(const LieAlgebroidData& data, const EForm& j, const PreNPlectic& h,
                               const PhaseSpace& ps)
{
    int n = h.n();
    if (j.arity() != static_cast<std::size_t>(n) || j.dim() != data.rank())
        throw ShapeError("J must be an E-n-form");
    if (h.form().dim() != data.dim())
        throw ShapeError("form and algebroid have different bases");
    GradedElement f = -build_theta_lie(data, n, ps) + Rational(sign(n % 2 != 0)) * e_form_function(j, ps);
    GradedVectorField q = hamiltonian(f, ps, 1);
    algebroid::MixedForm ih = compat::iota_rho_k(h.form(), static_cast<std::size_t>(n), data);
    for (std::size_t i = 0; i < data.dim(); ++i) {
        GradedElement extra(ps.context());
        for (const auto& e : increasing_tuples(data.rank(), static_cast<std::size_t>(n))) {
            auto c = ih.at(e, {i});
            if (!c.is_zero())
                extra += scalar(ps, c) * product(ps, e, symplectic::q_name);
        }
        auto zi = ps.context()->coordinate(symplectic::z_name(i));
        q.set(zi, q.image(zi) + extra);
    }
    return q;
}

Verdict check_q_comp_nilpotent(const LieAlgebroidData& data, const EForm& j, const PreNPlectic& h)
{
    auto ps = symplectic::lie_phase_space(data.base(), data.rank(), h.n());
    return build_q_comp(data, j, h, ps).check_square_zero("Q^2");
}

int theta_tilde_h_sign(int) { return 1; }

GradedElement build_theta_tilde(const BaseForm& h, int n, const PhaseSpace& ps)
{
    require_order(n);
    if (h.arity() != static_cast<std::size_t>(n + 1))
        throw ShapeError("H must be an (n+1)-form");
    GradedElement out(ps.context());
    for (std::size_t i = 0; i < h.dim(); ++i)
        out += gen(ps, symplectic::xi_name(i)) * gen(ps, symplectic::zeta_name(i));
    for (const auto& pr : ps.pairs()) {
        if (ps.context()->name(pr.coordinate).rfind('q', 0) != 0)
            continue;
        std::string a = ps.context()->name(pr.coordinate).substr(1);
        out += GradedElement::coordinate(ps.context(), pr.momentum) * gen(ps, "eta" + a);
    }
    return out + Rational(theta_tilde_h_sign(n)) * base_form_function(h, ps);
}

GradedElement build_phi_lie(const LieAlgebroidData& data, const PhaseSpace& ps)
{
    GradedElement out(ps.context());
    for (std::size_t a = 0; a < data.rank(); ++a) {
        for (std::size_t i = 0; i < data.dim(); ++i)
            if (!data.anchor(a, i).is_zero())
                out += scalar(ps, data.anchor(a, i)) * gen(ps, symplectic::z_name(i)) * gen(ps, symplectic::q_name(a));
        for (std::size_t b = a + 1; b < data.rank(); ++b)
            for (std::size_t c = 0; c < data.rank(); ++c)
                if (!data.structure(c, a, b).is_zero())
                    out -= scalar(ps, data.structure(c, a, b)) * gen(ps, symplectic::q_name(a)) *
                           gen(ps, symplectic::q_name(b)) * gen(ps, symplectic::y_name(c));
    }
    return out;
}

TwistedQpResult twisted_qp(const LieAlgebroidData& data, const EForm& j, const BaseForm& h)
{
    if (h.arity() < 2)
        throw ShapeError("H must have arity n+1 with n >= 1");
    int n = static_cast<int>(h.arity()) - 1;
    if (j.arity() != h.arity() - 1 || j.dim() != data.rank())
        throw ShapeError("J must be an E-n-form");
    auto ps = symplectic::twisted_phase_space(data.base(), data.rank(), n);
    GradedElement theta = build_theta_tilde(h, n, ps);
    GradedElement phi_lie = build_phi_lie(data, ps);
    GradedElement phi = phi_lie - e_form_function(j, ps);

    TwistedQpResult out{symplectic::project_to_base(symplectic::twist(phi, theta, ps), ps),
                        symplectic::project_to_base(
                            poisson_bracket(poisson_bracket(build_theta_tilde(BaseForm(h.vars(), h.dim(), h.arity()), n, ps),
                                                            phi_lie, ps),
                                            phi_lie, ps),
                            ps),
                        GradedElement(ps.context()),
                        {}};
    out.compatibility_obstruction = out.twisted - Rational(1, 2) * out.algebroid_obstruction;
    if (!out.algebroid_obstruction.is_zero())
        out.verdict.fail("algebroid", out.algebroid_obstruction.to_string());
    if (!out.compatibility_obstruction.is_zero())
        out.verdict.fail("compatibility", out.compatibility_obstruction.to_string());
    if (out.verdict.passed && !out.twisted.is_zero())
        out.verdict.fail("twisted", out.twisted.to_string());
    return out;
}

Verdict check_twisted_qp(const LieAlgebroidData& data, const EForm& j, const BaseForm& h)
{
    return twisted_qp(data, j, h).verdict;
}

Verdict check_theta_tilde_master(const LieAlgebroidData& data, const BaseForm& h, int n)
{
    auto ps = symplectic::twisted_phase_space(data.base(), data.rank(), n);
    GradedElement theta = build_theta_tilde(h, n, ps);
    Verdict v;
    GradedElement r = poisson_bracket(theta, theta, ps);
    if (!r.is_zero())
        v.fail("{Theta~,Theta~}", r.to_string());
    return v;
}

}  // namespace eform::qgraded
