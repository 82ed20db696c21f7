#include "schouten_oracle.hpp"

#include <vector>

namespace oracle {

using eform::algebroid::Index;
using eform::algebroid::MultiVector;
using eform::poly::Polynomial;
using eform::poly::VarList;

namespace {

using Field = std::vector<Polynomial>;

struct Term {
    Polynomial scalar;          // only used for arity 0
    std::vector<Field> fields;  // X1 ^ ... ^ Xk
};

Field coordinate_field(const VarList& vars, std::size_t i, const Polynomial& coeff)
{
    Field f(vars->size(), Polynomial(vars));
    f[i] = coeff;
    return f;
}

Polynomial apply(const Field& x, const Polynomial& f)
{
    Polynomial out(f.vars());
    for (std::size_t i = 0; i < x.size(); ++i)
        out += x[i] * f.partial_derivative(i);
    return out;
}

Field bracket(const Field& x, const Field& y)
{
    Field out(x.size(), Polynomial(x[0].vars()));
    for (std::size_t k = 0; k < x.size(); ++k)
        out[k] = apply(x, y[k]) - apply(y, x[k]);
    return out;
}

std::vector<Term> decompose(const MultiVector& p)
{
    std::vector<Term> out;
    const VarList& vars = p.vars();
    for (const auto& [idx, c] : p.components()) {
        Term t{Polynomial(vars), {}};
        if (idx.empty()) {
            t.scalar = c;
        } else {
            for (std::size_t k = 0; k < idx.size(); ++k)
                t.fields.push_back(coordinate_field(vars, idx[k], k == 0 ? c : Polynomial(vars, 1)));
        }
        out.push_back(std::move(t));
    }
    return out;
}

// Adds the wedge of the given fields (scaled by s) into out.
void add_wedge(MultiVector& out, const std::vector<Field>& fields, int s)
{
    std::size_t k = fields.size();
    std::size_t dim = out.dim();
    Index idx(k, 0);
    while (true) {
        bool distinct = true;
        for (std::size_t a = 0; a < k && distinct; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (idx[a] == idx[b])
                    distinct = false;
        if (distinct) {
            Polynomial v(out.vars(), s);
            for (std::size_t a = 0; a < k; ++a)
                v *= fields[a][idx[a]];
            out.add(idx, v);
        }
        std::size_t pos = 0;
        while (pos < k && ++idx[pos] == dim)
            idx[pos++] = 0;
        if (pos == k)
            break;
    }
}

void add_scaled_wedge(MultiVector& out, const Polynomial& f, std::vector<Field> fields, int s)
{
    if (fields.empty()) {
        out.add({}, s > 0 ? f : -f);
        return;
    }
    for (auto& c : fields[0])
        c *= f;
    add_wedge(out, fields, s);
}

std::vector<Field> drop(const std::vector<Field>& v, std::size_t i)
{
    std::vector<Field> out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (k != i)
            out.push_back(v[k]);
    return out;
}

// [X1^..^Xp, f]
void field_with_scalar(MultiVector& out, const std::vector<Field>& xs, const Polynomial& f, int s)
{
    std::size_t p = xs.size();
    for (std::size_t i = 0; i < p; ++i) {
        int sign = (p - 1 - i) % 2 ? -s : s;
        add_scaled_wedge(out, apply(xs[i], f), drop(xs, i), sign);
    }
}

}  // namespace

MultiVector schouten(const MultiVector& p, const MultiVector& q)
{
    std::size_t a = p.arity();
    std::size_t b = q.arity();
    std::size_t r = a + b == 0 ? 0 : a + b - 1;
    MultiVector out(p.vars(), p.dim(), r);
    if (a + b == 0)
        return out;
    for (const auto& tp : decompose(p)) {
        for (const auto& tq : decompose(q)) {
            if (b == 0) {
                field_with_scalar(out, tp.fields, tq.scalar, 1);
            } else if (a == 0) {
                // [f, Q] = -(-1)^{(q-1)(0-1)} [Q, f]
                int s = (b - 1) % 2 ? 1 : -1;
                field_with_scalar(out, tq.fields, tp.scalar, s);
            } else {
                for (std::size_t i = 0; i < a; ++i) {
                    for (std::size_t j = 0; j < b; ++j) {
                        std::vector<Field> fields{bracket(tp.fields[i], tq.fields[j])};
                        for (auto& f : drop(tp.fields, i))
                            fields.push_back(f);
                        for (auto& f : drop(tq.fields, j))
                            fields.push_back(f);
                        add_wedge(out, fields, (i + j) % 2 ? -1 : 1);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace oracle
