#include <eform/compat/compat.hpp>

namespace eform::compat {

using algebroid::Index;
using algebroid::increasing_tuples;
using poly::Polynomial;

PreNPlectic::PreNPlectic(BaseForm form, int n) : form_(std::move(form)), n_(n)
{
    if (n < 1 || form_.arity() != static_cast<std::size_t>(n) + 1)
        throw ShapeError("pre-n-plectic form must have arity n+1");
    if (!algebroid::de_rham_d(form_).is_zero())
        throw PreconditionError("form is not closed");
}

Verdict closure(const BaseForm& omega, const std::string& label)
{
    return algebroid::de_rham_d(omega).residuals(label);
}

MixedForm iota_rho_k(const BaseForm& omega, std::size_t k, const LieAlgebroidData& data)
{
    if (k < 1 || k > omega.arity())
        throw ShapeError("contraction order out of range");
    if (omega.dim() != data.dim())
        throw ShapeError("form and algebroid have different bases");
    std::size_t rest = omega.arity() - k;
    MixedForm out(data.vars(), data.rank(), k, rest);
    std::size_t dim = data.dim();
    if (dim == 0)
        return out;
    for (const auto& e : increasing_tuples(data.rank(), k)) {
        for (const auto& b : increasing_tuples(dim, rest)) {
            Polynomial total(data.vars());
            Index slots(k, 0);
            for (;;) {
                Polynomial coeff(data.vars(), 1);
                for (std::size_t s = 0; s < k && !coeff.is_zero(); ++s)
                    coeff *= data.anchor(e[s], slots[s]);
                if (!coeff.is_zero()) {
                    Index full = slots;
                    full.insert(full.end(), b.begin(), b.end());
                    total += coeff * omega.at(full);
                }
                std::size_t pos = 0;
                while (pos < k && ++slots[pos] == dim)
                    slots[pos++] = 0;
                if (pos == k)
                    break;
            }
            out.add(e, b, total);
        }
    }
    return out;
}

EForm iota_rho(const BaseForm& omega, const LieAlgebroidData& data)
{
    if (omega.arity() == 0) {
        EForm out(data.vars(), data.rank(), 0);
        out.add({}, omega.at({}));
        return out;
    }
    return iota_rho_k(omega, omega.arity(), data).to_eform();
}

Verdict check_compatible(const EForm& j, const PreNPlectic& omega, const LieAlgebroidData& data)
{
    if (j.arity() != static_cast<std::size_t>(omega.n()))
        throw ShapeError("J must have arity n");
    if (j.dim() != data.rank())
        throw ShapeError("J rank does not match the algebroid");
    Verdict v;
    v.absorb(algebroid::check_lie_algebroid(data), "algebroid:");
    v.absorb((algebroid::e_differential(j, data) + iota_rho(omega.form(), data)).residuals("dJ+iw"));
    return v;
}

Verdict check_consistency(const PreNPlectic& omega, const LieAlgebroidData& data)
{
    return check_consistency(omega.form(), data);
}

Verdict check_consistency(const BaseForm& omega, const LieAlgebroidData& data)
{
    return algebroid::e_differential(iota_rho(omega, data), data).residuals("d(iw)");
}

GaugeResult gauge_transform(const EForm& j, const BaseForm& lambda, const LieAlgebroidData& data)
{
    if (lambda.arity() != j.arity())
        throw ShapeError("lambda must have the arity of J");
    return {j - iota_rho(lambda, data), algebroid::de_rham_d(lambda)};
}

EForm exact_shift(const EForm& j, const EForm& k, const LieAlgebroidData& data)
{
    if (k.arity() + 1 != j.arity())
        throw ShapeError("K must have arity n-1");
    return j + algebroid::e_differential(k, data);
}

}  // namespace eform::compat
