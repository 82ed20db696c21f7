#include <eform/moment/connection.hpp>

#include <eform/algebroid/calculus.hpp>

namespace eform::moment {

using algebroid::Index;
using algebroid::increasing_tuples;

namespace {

Index erase_at(const Index& idx, std::size_t pos)
{
    Index out = idx;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
    return out;
}

Index replace_at(Index idx, std::size_t pos, std::size_t value)
{
    idx[pos] = value;
    return idx;
}

void check_shape(const MixedForm& alpha, std::size_t rank, std::size_t dim)
{
    if (alpha.rank() != rank || alpha.dim() != dim)
        throw ShapeError("mixed form does not match the connection");
}

}  // namespace

Connection::Connection(VarList vars, std::size_t rank)
    : vars_(std::move(vars)), rank_(rank), gamma_(rank * vars_->size() * rank, Polynomial(vars_))
{
}

const Polynomial& Connection::gamma(std::size_t b, std::size_t i, std::size_t a) const
{
    if (b >= rank_ || a >= rank_ || i >= dim())
        throw ShapeError("connection index out of range");
    return gamma_[(b * dim() + i) * rank_ + a];
}

void Connection::set_gamma(std::size_t b, std::size_t i, std::size_t a, const Polynomial& p)
{
    if (b >= rank_ || a >= rank_ || i >= dim())
        throw ShapeError("connection index out of range");
    gamma_[(b * dim() + i) * rank_ + a] = p.embed(vars_);
}

bool Connection::is_trivial() const
{
    for (const auto& g : gamma_)
        if (!g.is_zero())
            return false;
    return true;
}

EConnection::EConnection(Connection base)
    : base_(std::move(base)), chi_(base_.rank() * base_.rank() * base_.rank(), Polynomial(base_.vars()))
{
}

const Polynomial& EConnection::chi(std::size_t c, std::size_t a, std::size_t b) const
{
    std::size_t r = base_.rank();
    return chi_.at((c * r + a) * r + b);
}

void EConnection::set_chi(std::size_t c, std::size_t a, std::size_t b, const Polynomial& p)
{
    std::size_t r = base_.rank();
    if (c >= r || a >= r || b >= r)
        throw ShapeError("chi index out of range");
    chi_[(c * r + a) * r + b] = p.embed(base_.vars());
}

ESection EConnection::apply(const LieAlgebroidData& data, std::size_t a, std::size_t b) const
{
    std::size_t r = base_.rank();
    ESection out(data.vars(), r);
    for (std::size_t c = 0; c < r; ++c) {
        Polynomial v = data.structure(c, a, b) - chi(c, a, b);
        for (std::size_t i = 0; i < data.dim(); ++i)
            v += data.anchor(a, i) * base_.gamma(c, i, b);
        out.set(c, v);
    }
    return out;
}

std::vector<BaseForm> covariant_derivative(const ESection& u, const Connection& conn)
{
    std::vector<BaseForm> out;
    for (std::size_t b = 0; b < conn.rank(); ++b) {
        BaseForm f(conn.vars(), conn.dim(), 1);
        for (std::size_t i = 0; i < conn.dim(); ++i) {
            Polynomial v = u[b].partial_derivative(i);
            for (std::size_t a = 0; a < conn.rank(); ++a)
                v += conn.gamma(b, i, a) * u[a];
            f.add({i}, v);
        }
        out.push_back(std::move(f));
    }
    return out;
}

MixedForm covariant_derivative(const EForm& mu, const Connection& conn)
{
    if (mu.arity() != 1)
        throw ShapeError("expected a section of E*");
    return exterior_covariant_derivative(MixedForm::from_eform(mu), conn);
}

MixedForm exterior_covariant_derivative(const MixedForm& alpha, const Connection& conn)
{
    check_shape(alpha, conn.rank(), conn.dim());
    std::size_t m = alpha.e_arity(), k = alpha.base_arity();
    MixedForm out(alpha.vars(), alpha.rank(), m, k + 1);
    for (const auto& e : increasing_tuples(alpha.rank(), m)) {
        for (const auto& jdx : increasing_tuples(conn.dim(), k + 1)) {
            Polynomial total(alpha.vars());
            for (std::size_t s = 0; s <= k; ++s) {
                std::size_t i = jdx[s];
                Index rest = erase_at(jdx, s);
                Polynomial t = alpha.at(e, rest).partial_derivative(i);
                for (std::size_t l = 0; l < m; ++l)
                    for (std::size_t b = 0; b < alpha.rank(); ++b) {
                        const Polynomial& g = conn.gamma(b, i, e[l]);
                        if (!g.is_zero())
                            t -= g * alpha.at(replace_at(e, l, b), rest);
                    }
                total += s % 2 ? -t : t;
            }
            out.add(e, jdx, total);
        }
    }
    return out;
}

MixedForm e_exterior_covariant_derivative(const MixedForm& alpha, const EConnection& econn, const LieAlgebroidData& data)
{
    const Connection& conn = econn.base();
    check_shape(alpha, data.rank(), data.dim());
    check_shape(alpha, conn.rank(), conn.dim());
    std::size_t m = alpha.e_arity(), k = alpha.base_arity();
    std::size_t r = data.rank(), dim = data.dim();
    MixedForm out(alpha.vars(), r, m + 1, k);

    // (E-nabla_{e_a} theta)_J = (L_{rho e_a} theta)_J - sum_l Gamma^b_{j_l a} rho^i_b theta_{..i..}
    auto e_nabla = [&](std::size_t a, const Index& e_rest, const Index& jdx) {
        Polynomial v(alpha.vars());
        for (std::size_t i = 0; i < dim; ++i)
            if (!data.anchor(a, i).is_zero())
                v += data.anchor(a, i) * alpha.at(e_rest, jdx).partial_derivative(i);
        for (std::size_t l = 0; l < k; ++l) {
            for (std::size_t i = 0; i < dim; ++i) {
                Polynomial w = data.anchor(a, i).partial_derivative(jdx[l]);
                for (std::size_t b = 0; b < r; ++b)
                    w -= conn.gamma(b, jdx[l], a) * data.anchor(b, i);
                if (!w.is_zero())
                    v += w * alpha.at(e_rest, replace_at(jdx, l, i));
            }
        }
        return v;
    };

    for (const auto& e : increasing_tuples(r, m + 1)) {
        for (const auto& jdx : increasing_tuples(dim, k)) {
            Polynomial total(alpha.vars());
            for (std::size_t s = 0; s <= m; ++s) {
                Polynomial t = e_nabla(e[s], erase_at(e, s), jdx);
                total += s % 2 ? -t : t;
            }
            for (std::size_t s = 0; s <= m; ++s) {
                for (std::size_t t = s + 1; t <= m; ++t) {
                    Index rest = erase_at(erase_at(e, t), s);
                    for (std::size_t c = 0; c < r; ++c) {
                        Polynomial cst = data.structure(c, e[s], e[t]);
                        if (cst.is_zero())
                            continue;
                        Index full{c};
                        full.insert(full.end(), rest.begin(), rest.end());
                        Polynomial term = cst * alpha.at(full, jdx);
                        total += (s + t) % 2 ? -term : term;
                    }
                }
            }
            out.add(e, jdx, total);
        }
    }
    return out;
}

std::vector<BaseForm> curvature(const Connection& conn)
{
    std::size_t r = conn.rank(), dim = conn.dim();
    auto gamma_form = [&](std::size_t b, std::size_t a) {
        BaseForm g(conn.vars(), dim, 1);
        for (std::size_t i = 0; i < dim; ++i)
            g.add({i}, conn.gamma(b, i, a));
        return g;
    };
    std::vector<BaseForm> out;
    for (std::size_t b = 0; b < r; ++b) {
        for (std::size_t a = 0; a < r; ++a) {
            BaseForm rba = algebroid::de_rham_d(gamma_form(b, a));
            for (std::size_t c = 0; c < r; ++c) {
                BaseForm g1 = gamma_form(b, c), g2 = gamma_form(c, a);
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j)
                        if (i != j)
                            rba.add({i, j}, g1.at({i}) * g2.at({j}));
            }
            out.push_back(std::move(rba));
        }
    }
    return out;
}

MixedForm curvature_action(const MixedForm& alpha, const Connection& conn)
{
    check_shape(alpha, conn.rank(), conn.dim());
    auto rs = curvature(conn);
    std::size_t m = alpha.e_arity(), k = alpha.base_arity(), r = conn.rank(), dim = conn.dim();
    MixedForm out(alpha.vars(), r, m, k + 2);
    for (const auto& e : increasing_tuples(r, m)) {
        for (const auto& jdx : increasing_tuples(dim, k + 2)) {
            Polynomial total(alpha.vars());
            // (R ^ theta)_{j0..j(k+1)} = sum over the 2-element positions of the shuffle sign.
            for (const auto& pos : increasing_tuples(k + 2, 2)) {
                Index front{jdx[pos[0]], jdx[pos[1]]};
                Index back;
                for (std::size_t q = 0; q < k + 2; ++q)
                    if (q != pos[0] && q != pos[1])
                        back.push_back(jdx[q]);
                int sign = ((pos[0] + pos[1] - 1) % 2) ? -1 : 1;
                for (std::size_t l = 0; l < m; ++l) {
                    for (std::size_t b = 0; b < r; ++b) {
                        Polynomial rv = rs[b * r + e[l]].at(front);
                        if (rv.is_zero())
                            continue;
                        Polynomial t = rv * alpha.at(replace_at(e, l, b), back);
                        total -= sign > 0 ? t : -t;
                    }
                }
            }
            out.add(e, jdx, total);
        }
    }
    return out;
}

}  // namespace eform::moment
