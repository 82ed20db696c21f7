#pragma once

#include <eform/algebroid/data.hpp>
#include <eform/algebroid/mixed.hpp>

namespace eform::moment {

using algebroid::BaseForm;
using algebroid::EForm;
using algebroid::ESection;
using algebroid::LieAlgebroidData;
using algebroid::MixedForm;
using poly::Polynomial;
using poly::VarList;

// nabla e_a = Gamma^b_{ia} dx^i (x) e_b.
class Connection {
public:
    Connection(VarList vars, std::size_t rank);

    const VarList& vars() const { return vars_; }
    std::size_t rank() const { return rank_; }
    std::size_t dim() const { return vars_->size(); }

    const Polynomial& gamma(std::size_t b, std::size_t i, std::size_t a) const;
    void set_gamma(std::size_t b, std::size_t i, std::size_t a, const Polynomial& p);
    bool is_trivial() const;

private:
    VarList vars_;
    std::size_t rank_;
    std::vector<Polynomial> gamma_;  // index (b * dim + i) * rank + a
};

// E-connection on E: nabla_{rho(e)} e' + [e, e'] - chi(e, e'), chi^c_{ab} = chi(e_a, e_b)^c.
class EConnection {
public:
    explicit EConnection(Connection base);

    const Connection& base() const { return base_; }
    const Polynomial& chi(std::size_t c, std::size_t a, std::size_t b) const;
    void set_chi(std::size_t c, std::size_t a, std::size_t b, const Polynomial& p);

    // Components of E-nabla_{e_a} e_b.
    ESection apply(const LieAlgebroidData& data, std::size_t a, std::size_t b) const;

private:
    Connection base_;
    std::vector<Polynomial> chi_;
};

// (nabla u)^b_i = d_i u^b + Gamma^b_{ia} u^a, returned as one 1-form per frame index b.
std::vector<BaseForm> covariant_derivative(const ESection& u, const Connection& conn);

// (nabla mu)_{a;i} = d_i mu_a - Gamma^b_{ia} mu_b, the dual connection on E*.
MixedForm covariant_derivative(const EForm& mu, const Connection& conn);

// d^nabla on wedge^k T*M (x) wedge^m E*, with nabla acting on the E-legs as a derivation.
MixedForm exterior_covariant_derivative(const MixedForm& alpha, const Connection& conn);

// E-d^nabla on wedge^k T*M (x) wedge^m E*, using on T*M the dual of the opposite
// E-connection E-nabla_e v = [rho e, v] + rho(nabla_v e).
MixedForm e_exterior_covariant_derivative(const MixedForm& alpha, const EConnection& econn, const LieAlgebroidData& data);

// Curvature 2-forms R^b_a = dGamma^b_a + Gamma^b_c ^ Gamma^c_a, indexed [b * rank + a].
std::vector<BaseForm> curvature(const Connection& conn);

// Curvature acting on wedge^k T*M (x) wedge^m E* by (R.alpha)_A = -sum_l R^b_{a_l} ^ alpha_{..b..}.
MixedForm curvature_action(const MixedForm& alpha, const Connection& conn);

}  // namespace eform::moment
