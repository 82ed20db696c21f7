#pragma once

#include <string>
#include <utility>
#include <vector>

#include <eform/compat/compat.hpp>
#include <eform/moment/connection.hpp>

namespace eform::moment {

using compat::PreNPlectic;

// Named sub-conditions of a check, each with its own verdict.
struct Conditions {
    std::vector<std::pair<std::string, Verdict>> parts;

    const Verdict& at(const std::string& name) const;
    // All parts, residuals prefixed "name:".
    Verdict combined() const;
};

// For an action algebroid (constant structure functions) and n = 1:
//   "hamiltonian"   d mu(e_a) = -i_{rho(e_a)} w for every a,
//   "equivariance"  rho(e_a) mu(e_b) = mu([e_a, e_b]),
//   "reformulated"  E-d mu = -i_rho^2 w.
// The verdict requires all three. Throws PreconditionError for non-constant structure.
Conditions momentum_map_conditions(const EForm& mu, const LieAlgebroidData& data, const PreNPlectic& omega);
Verdict check_momentum_map(const EForm& mu, const LieAlgebroidData& data, const PreNPlectic& omega);

// "covariant" nabla mu = -i_rho w and "compatible" E-d mu = -i_rho^2 w.
Conditions momentum_section_conditions(const EForm& mu, const Connection& conn, const PreNPlectic& omega,
                                       const LieAlgebroidData& data);
Verdict check_momentum_section(const EForm& mu, const Connection& conn, const PreNPlectic& omega,
                               const LieAlgebroidData& data);

// mu[k] in wedge^k T*M (x) wedge^{n-k} E* for k = 0..n-1. Part "line k" checks
// d^nabla mu_{k-1} + E-d^nabla mu_k = -i_rho^{n+1-k} w for k = n, n-1, .., 0.
Conditions homotopy_section_conditions(const std::vector<MixedForm>& mu, const EConnection& econn,
                                       const PreNPlectic& omega, const LieAlgebroidData& data);
Verdict check_homotopy_momentum_section(const std::vector<MixedForm>& mu, const EConnection& econn,
                                        const PreNPlectic& omega, const LieAlgebroidData& data);

// Homotopy momentum map components mu_k to the cascade normalisation,
// hat mu_k = (-1)^{n-k+1} mu_k. The map is an involution.
std::vector<MixedForm> hat(const std::vector<MixedForm>& mu);

// d^nabla d^nabla mu, reported for inspection only.
MixedForm nabla_squared(const EForm& mu, const Connection& conn);

}  // namespace eform::moment
