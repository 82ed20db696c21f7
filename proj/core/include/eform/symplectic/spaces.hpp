#pragma once

#include <string>
#include <vector>

#include <eform/symplectic/phase_space.hpp>

namespace eform::symplectic {

// T*[1]M with pairs (x_i, theta_i); multivector fields live here.
PhaseSpace schouten_space(const std::vector<std::string>& base);

// T*[n-1]E[1]: pairs (x_i, z_i) and (q_a, y_a) of degrees (0, n-1), (1, n-2).
PhaseSpace lie_phase_space(const std::vector<std::string>& base, std::size_t rank, int n);

// T*[n]T*[n-1]E[1]: adds the fibre pairs (x_i, xi_i), (q_a, p_a), (z_i, zeta_i),
// (y_a, eta_a) of degrees (0, n), (1, n-1), (n-1, 1), (n-2, 2).
PhaseSpace twisted_phase_space(const std::vector<std::string>& base, std::size_t rank, int n);

// Generator names used by the factories above.
std::string q_name(std::size_t a);
std::string y_name(std::size_t a);
std::string z_name(std::size_t i);
std::string xi_name(std::size_t i);
std::string p_name(std::size_t a);
std::string zeta_name(std::size_t i);
std::string eta_name(std::size_t a);
std::string theta_name(std::size_t i);

}  // namespace eform::symplectic
