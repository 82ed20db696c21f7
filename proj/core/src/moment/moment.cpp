#include <eform/moment/moment.hpp>

#include <eform/algebroid/calculus.hpp>

namespace eform::moment {

using algebroid::increasing_tuples;

const Verdict& Conditions::at(const std::string& name) const
{
    for (const auto& [n, v] : parts)
        if (n == name)
            return v;
    throw std::out_of_range("no condition named " + name);
}

Verdict Conditions::combined() const
{
    Verdict out;
    for (const auto& [n, v] : parts)
        out.absorb(v, n + ":");
    return out;
}

namespace {

void require_order(const PreNPlectic& omega, int n)
{
    if (omega.n() != n)
        throw ShapeError("form has the wrong degree for this check");
}

}  // namespace

Conditions momentum_map_conditions(const EForm& mu, const LieAlgebroidData& data, const PreNPlectic& omega)
{
    require_order(omega, 1);
    if (!data.constant_structure())
        throw PreconditionError("momentum maps need an action algebroid");
    if (mu.arity() != 1 || mu.dim() != data.rank())
        throw ShapeError("mu must be a section of E*");
    Conditions out;
    std::size_t r = data.rank();

    Verdict ham;
    MixedForm iw = compat::iota_rho_k(omega.form(), 1, data);
    for (std::size_t a = 0; a < r; ++a) {
        BaseForm m(data.vars(), data.dim(), 0);
        m.add({}, mu.at({a}));
        BaseForm lhs = algebroid::de_rham_d(m);
        for (std::size_t i = 0; i < data.dim(); ++i) {
            Polynomial res = lhs.at({i}) + iw.at({a}, {i});
            if (!res.is_zero())
                ham.fail("[e" + std::to_string(a + 1) + "]" + algebroid::index_label({i}), res.to_string());
        }
    }
    out.parts.push_back({"hamiltonian", ham});

    Verdict eq;
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b) {
            Polynomial res = algebroid::anchor_apply(data, a, mu.at({b}));
            for (std::size_t c = 0; c < r; ++c)
                res -= data.structure(c, a, b) * mu.at({c});
            if (!res.is_zero())
                eq.fail(algebroid::index_label({a, b}), res.to_string());
        }
    }
    out.parts.push_back({"equivariance", eq});

    out.parts.push_back(
        {"reformulated", (algebroid::e_differential(mu, data) + compat::iota_rho(omega.form(), data)).residuals("")});
    return out;
}

Verdict check_momentum_map(const EForm& mu, const LieAlgebroidData& data, const PreNPlectic& omega)
{
    return momentum_map_conditions(mu, data, omega).combined();
}

Conditions momentum_section_conditions(const EForm& mu, const Connection& conn, const PreNPlectic& omega,
                                       const LieAlgebroidData& data)
{
    require_order(omega, 1);
    if (mu.arity() != 1 || mu.dim() != data.rank())
        throw ShapeError("mu must be a section of E*");
    Conditions out;
    Verdict alg = algebroid::check_lie_algebroid(data);
    if (!alg.passed)
        out.parts.push_back({"algebroid", alg});
    out.parts.push_back(
        {"covariant", (covariant_derivative(mu, conn) + compat::iota_rho_k(omega.form(), 1, data)).residuals("")});
    out.parts.push_back(
        {"compatible", (algebroid::e_differential(mu, data) + compat::iota_rho(omega.form(), data)).residuals("")});
    return out;
}

Verdict check_momentum_section(const EForm& mu, const Connection& conn, const PreNPlectic& omega,
                               const LieAlgebroidData& data)
{
    return momentum_section_conditions(mu, conn, omega, data).combined();
}

Conditions homotopy_section_conditions(const std::vector<MixedForm>& mu, const EConnection& econn,
                                       const PreNPlectic& omega, const LieAlgebroidData& data)
{
    std::size_t n = static_cast<std::size_t>(omega.n());
    if (mu.size() != n)
        throw ShapeError("expected mu_0 .. mu_{n-1}");
    for (std::size_t k = 0; k < n; ++k)
        if (mu[k].base_arity() != k || mu[k].e_arity() != n - k || mu[k].rank() != data.rank())
            throw ShapeError("mu_" + std::to_string(k) + " must lie in wedge^" + std::to_string(k) + " T*M (x) wedge^" +
                             std::to_string(n - k) + " E*");
    Conditions out;
    Verdict alg = algebroid::check_lie_algebroid(data);
    if (!alg.passed)
        out.parts.push_back({"algebroid", alg});
    for (std::size_t k = n + 1; k-- > 0;) {
        MixedForm lhs = compat::iota_rho_k(omega.form(), n + 1 - k, data);
        if (k >= 1)
            lhs += exterior_covariant_derivative(mu[k - 1], econn.base());
        if (k < n)
            lhs += e_exterior_covariant_derivative(mu[k], econn, data);
        out.parts.push_back({"line " + std::to_string(k), lhs.residuals("")});
    }
    return out;
}

Verdict check_homotopy_momentum_section(const std::vector<MixedForm>& mu, const EConnection& econn,
                                        const PreNPlectic& omega, const LieAlgebroidData& data)
{
    return homotopy_section_conditions(mu, econn, omega, data).combined();
}

std::vector<MixedForm> hat(const std::vector<MixedForm>& mu)
{
    std::vector<MixedForm> out = mu;
    std::size_t n = mu.size();
    for (std::size_t k = 0; k < n; ++k)
        if ((n - k + 1) % 2 == 1)
            out[k] = -out[k];
    return out;
}

MixedForm nabla_squared(const EForm& mu, const Connection& conn)
{
    return exterior_covariant_derivative(covariant_derivative(mu, conn), conn);
}

}  // namespace eform::moment
