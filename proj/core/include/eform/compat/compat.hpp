#pragma once

#include <eform/algebroid/calculus.hpp>
#include <eform/algebroid/mixed.hpp>

namespace eform::compat {

using algebroid::BaseForm;
using algebroid::EForm;
using algebroid::LieAlgebroidData;
using algebroid::MixedForm;

// A closed (n+1)-form.
class PreNPlectic {
public:
    // Throws ShapeError when arity != n+1 and PreconditionError when d(form) != 0.
    PreNPlectic(BaseForm form, int n);

    const BaseForm& form() const { return form_; }
    int n() const { return n_; }

private:
    BaseForm form_;
    int n_;
};

// dw = 0, with the nonzero components of dw as residuals labelled "dH[...]".
Verdict closure(const BaseForm& omega, const std::string& label = "dH");

// (i^k w)(e_1..e_k; v_{k+1}..) = w(rho e_1, .., rho e_k, v_{k+1}, ..).
MixedForm iota_rho_k(const BaseForm& omega, std::size_t k, const LieAlgebroidData& data);
// i^{n+1} w as an E-form.
EForm iota_rho(const BaseForm& omega, const LieAlgebroidData& data);

// dJ = -i^{n+1} w. The residual dJ + i^{n+1} w is labelled "dJ+iw[...]"; an
// algebroid that fails check_lie_algebroid fails this check as well.
Verdict check_compatible(const EForm& j, const PreNPlectic& omega, const LieAlgebroidData& data);

// d(i^{n+1} w) = 0. The raw overload accepts non-closed forms.
Verdict check_consistency(const PreNPlectic& omega, const LieAlgebroidData& data);
Verdict check_consistency(const BaseForm& omega, const LieAlgebroidData& data);

struct GaugeResult {
    EForm j;            // J - i^n lambda
    BaseForm d_lambda;  // to be added to w by the caller
};

GaugeResult gauge_transform(const EForm& j, const BaseForm& lambda, const LieAlgebroidData& data);

// J + dK.
EForm exact_shift(const EForm& j, const EForm& k, const LieAlgebroidData& data);

}  // namespace eform::compat
