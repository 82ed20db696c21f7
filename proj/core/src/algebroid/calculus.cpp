#include <eform/algebroid/calculus.hpp>

#include <algorithm>

#include <eform/errors.hpp>

namespace eform::algebroid {

namespace {

Index without(const Index& idx, std::size_t i)
{
    Index out;
    for (std::size_t k = 0; k < idx.size(); ++k)
        if (k != i)
            out.push_back(idx[k]);
    return out;
}

Index without(const Index& idx, std::size_t i, std::size_t j)
{
    Index out;
    for (std::size_t k = 0; k < idx.size(); ++k)
        if (k != i && k != j)
            out.push_back(idx[k]);
    return out;
}

}  // namespace

EForm e_differential(const EForm& alpha, const LieAlgebroidData& data)
{
    if (alpha.dim() != data.rank())
        throw ShapeError("E-form rank does not match the algebroid");
    std::size_t m = alpha.arity();
    EForm out(data.vars(), data.rank(), m + 1);
    for (const auto& idx : increasing_tuples(data.rank(), m + 1)) {
        Polynomial total(data.vars());
        for (std::size_t i = 0; i <= m; ++i) {
            Polynomial t = anchor_apply(data, idx[i], alpha.at(without(idx, i)));
            total += i % 2 ? -t : t;
        }
        for (std::size_t i = 0; i <= m; ++i) {
            for (std::size_t j = i + 1; j <= m; ++j) {
                Index rest = without(idx, i, j);
                for (std::size_t c = 0; c < data.rank(); ++c) {
                    Polynomial s = data.structure(c, idx[i], idx[j]);
                    if (s.is_zero())
                        continue;
                    Index full{c};
                    full.insert(full.end(), rest.begin(), rest.end());
                    Polynomial t = s * alpha.at(full);
                    total += (i + j) % 2 ? -t : t;
                }
            }
        }
        out.add(idx, total);
    }
    return out;
}

EForm interior_product(const ESection& u, const EForm& alpha)
{
    if (alpha.arity() == 0)
        throw ShapeError("interior product of a 0-form");
    if (u.rank() != alpha.dim())
        throw ShapeError("section rank does not match the form");
    EForm out(alpha.vars(), alpha.dim(), alpha.arity() - 1);
    for (const auto& idx : increasing_tuples(alpha.dim(), alpha.arity() - 1)) {
        Polynomial total(alpha.vars());
        for (std::size_t a = 0; a < alpha.dim(); ++a) {
            if (u[a].is_zero())
                continue;
            Index full{a};
            full.insert(full.end(), idx.begin(), idx.end());
            total += u[a] * alpha.at(full);
        }
        out.add(idx, total);
    }
    return out;
}

EForm e_lie_derivative(const ESection& u, const EForm& alpha, const LieAlgebroidData& data)
{
    EForm out = interior_product(u, e_differential(alpha, data));
    if (alpha.arity() > 0)
        out += e_differential(interior_product(u, alpha), data);
    return out;
}

EForm wedge(const EForm& a, const EForm& b)
{
    if (a.dim() != b.dim())
        throw ShapeError("wedge of forms of different rank");
    std::size_t p = a.arity(), q = b.arity();
    EForm out(a.vars(), a.dim(), p + q);
    for (const auto& idx : increasing_tuples(a.dim(), p + q)) {
        Polynomial total(a.vars());
        for (const auto& pos : increasing_tuples(p + q, p)) {
            Index left, right, perm = pos;
            for (auto k : pos)
                left.push_back(idx[k]);
            for (std::size_t k = 0; k < p + q; ++k)
                if (std::find(pos.begin(), pos.end(), k) == pos.end()) {
                    right.push_back(idx[k]);
                    perm.push_back(k);
                }
            Polynomial t = a.at(left) * b.at(right);
            total += sort_with_sign(perm) > 0 ? t : -t;
        }
        out.add(idx, total);
    }
    return out;
}

BaseForm de_rham_d(const BaseForm& omega)
{
    std::size_t k = omega.arity();
    BaseForm out(omega.vars(), omega.dim(), k + 1);
    for (const auto& idx : increasing_tuples(omega.dim(), k + 1)) {
        Polynomial total(omega.vars());
        for (std::size_t l = 0; l <= k; ++l) {
            Polynomial t = omega.at(without(idx, l)).partial_derivative(idx[l]);
            total += l % 2 ? -t : t;
        }
        out.add(idx, total);
    }
    return out;
}

BaseForm contract(const MultiVector& x, const BaseForm& omega)
{
    if (x.arity() != 1 || omega.arity() == 0)
        throw ShapeError("contraction needs a vector field and a positive-degree form");
    BaseForm out(omega.vars(), omega.dim(), omega.arity() - 1);
    for (const auto& idx : increasing_tuples(omega.dim(), omega.arity() - 1)) {
        Polynomial total(omega.vars());
        for (std::size_t i = 0; i < omega.dim(); ++i) {
            Polynomial xi = x.at({i});
            if (xi.is_zero())
                continue;
            Index full{i};
            full.insert(full.end(), idx.begin(), idx.end());
            total += xi * omega.at(full);
        }
        out.add(idx, total);
    }
    return out;
}

MultiVector lie_bracket(const MultiVector& x, const MultiVector& y)
{
    MultiVector out(x.vars(), x.dim(), 1);
    for (std::size_t j = 0; j < x.dim(); ++j) {
        Polynomial c(x.vars());
        for (std::size_t i = 0; i < x.dim(); ++i)
            c += x.at({i}) * y.at({j}).partial_derivative(i) - y.at({i}) * x.at({j}).partial_derivative(i);
        out.add({j}, c);
    }
    return out;
}

}  // namespace eform::algebroid
