#pragma once

#include <eform/algebroid/data.hpp>
#include <eform/compat/compat.hpp>
#include <eform/graded/vector_field.hpp>
#include <eform/symplectic/phase_space.hpp>

namespace eform::qgraded {

using algebroid::BaseForm;
using algebroid::EForm;
using algebroid::LieAlgebroidData;
using compat::PreNPlectic;
using graded::GradedElement;
using graded::GradedVectorField;
using symplectic::PhaseSpace;

// sum over increasing A of alpha_A q^{a1} .. q^{am}, i.e. (1/m!) alpha_{a..} q^{a..}.
GradedElement e_form_function(const EForm& alpha, const PhaseSpace& ps);
// sum over increasing I of H_I zeta^{i1} .. zeta^{ik}; needs the twisted phase space.
GradedElement base_form_function(const BaseForm& h, const PhaseSpace& ps);

// On T*[n-1]E[1]:
// Theta_Lie = (-1)^{n-1} rho^i_a z_i q^a + (-1)^{n-1}/2 C^a_{bc} q^b q^c y_a.
GradedElement build_theta_lie(const LieAlgebroidData& data, int n, const PhaseSpace& ps);
// Q_Lie = -{Theta_Lie, -}.
GradedVectorField build_q_lie(const LieAlgebroidData& data, int n, const PhaseSpace& ps);
// Q_comp = {-Theta_Lie + (-1)^n J, -} + (iota_rho(q)^n H)_i d/dz_i.
GradedVectorField build_q_comp(const LieAlgebroidData& data, const EForm& j, const PreNPlectic& h,
                               const PhaseSpace& ps);
// Labels "Q^2(coordinate)".
Verdict check_q_comp_nilpotent(const LieAlgebroidData& data, const EForm& j, const PreNPlectic& h);

// Prefactor of H~ in Theta~. Fixed to +1: pr e^{ad phi} Theta~ is then
// E-d J + iota_rho^{n+1} H as a function of q for every n.
int theta_tilde_h_sign(int n);

// On T*[n]T*[n-1]E[1]:
// Theta~ = xi_i zeta^i + p_a eta^a + theta_tilde_h_sign(n) H~.
GradedElement build_theta_tilde(const BaseForm& h, int n, const PhaseSpace& ps);
// phi_Lie = rho^i_a z_i q^a - 1/2 C^c_{ab} q^a q^b y_c.
GradedElement build_phi_lie(const LieAlgebroidData& data, const PhaseSpace& ps);

struct TwistedQpResult {
    // pr e^{ad phi} Theta~ with phi = phi_Lie - J.
    GradedElement twisted;
    // pr {{Theta~_0, phi_Lie}, phi_Lie} with Theta~_0 = xi_i zeta^i + p_a eta^a.
    GradedElement algebroid_obstruction;
    // The remainder twisted - 1/2 algebroid_obstruction; equals
    // E-d J + iota_rho^{n+1} H written as a function of q.
    GradedElement compatibility_obstruction;
    Verdict verdict;
};

TwistedQpResult twisted_qp(const LieAlgebroidData& data, const EForm& j, const BaseForm& h);
// Verdict of twisted_qp; residual labels "algebroid" and "compatibility".
Verdict check_twisted_qp(const LieAlgebroidData& data, const EForm& j, const BaseForm& h);
// {Theta~, Theta~} = 0, which holds iff dH = 0.
Verdict check_theta_tilde_master(const LieAlgebroidData& data, const BaseForm& h, int n);

}  // namespace eform::qgraded
