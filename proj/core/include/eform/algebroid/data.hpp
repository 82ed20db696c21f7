#pragma once

#include <string>
#include <vector>

#include <eform/algebroid/tensor.hpp>
#include <eform/graded/vector_field.hpp>

namespace eform::algebroid {

// Anchor rho(e_a) = rho^i_a d_i and bracket [e_a, e_b] = C^c_{ab} e_c in a
// global frame of E.
class LieAlgebroidData {
public:
    LieAlgebroidData(std::vector<std::string> base, std::size_t rank);

    const VarList& vars() const { return vars_; }
    const std::vector<std::string>& base() const { return *vars_; }
    std::size_t dim() const { return vars_->size(); }
    std::size_t rank() const { return rank_; }

    const Polynomial& anchor(std::size_t a, std::size_t i) const { return anchor_.at(a).at(i); }
    void set_anchor(std::size_t a, std::size_t i, const Polynomial& p);

    Polynomial structure(std::size_t c, std::size_t a, std::size_t b) const;
    // Sets C^c_{ab} and C^c_{ba} = -C^c_{ab}.
    void set_structure(std::size_t c, std::size_t a, std::size_t b, const Polynomial& p);
    // True when every C^c_{ab} is a constant.
    bool constant_structure() const;

private:
    VarList vars_;
    std::size_t rank_;
    std::vector<std::vector<Polynomial>> anchor_;
    // structure_[c] holds the antisymmetric pair (a, b).
    std::vector<AltTensor<ETag>> structure_;
};

LieAlgebroidData tangent_algebroid(const std::vector<std::string>& base);

// rho(u) f = u^a rho^i_a d_i f.
Polynomial anchor_apply(const LieAlgebroidData& data, const ESection& u, const Polynomial& f);
Polynomial anchor_apply(const LieAlgebroidData& data, std::size_t a, const Polynomial& f);
// rho(u) as a vector field.
MultiVector anchor_of(const LieAlgebroidData& data, const ESection& u);

// [u, v] = rho(u)v - rho(v)u + u^a v^b C^c_{ab} e_c.
ESection section_bracket(const LieAlgebroidData& data, const ESection& u, const ESection& v);

// Q = rho^i_a q^a d/dx^i - 1/2 C^a_{bc} q^b q^c d/dq^a on E[1].
graded::GradedVectorField algebroid_q(const LieAlgebroidData& data);

// Q^2 = 0 on E[1]; residuals on x^i are anchor defects, on q^a Jacobi defects.
Verdict check_lie_algebroid(const LieAlgebroidData& data);

// Frame-wise Jacobi identity and anchor morphism [rho e_a, rho e_b] = rho[e_a, e_b].
Verdict check_lie_algebroid_framewise(const LieAlgebroidData& data);

}  // namespace eform::algebroid
