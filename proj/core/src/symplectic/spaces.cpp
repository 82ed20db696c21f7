#include <eform/symplectic/spaces.hpp>

#include <fmt/format.h>

namespace eform::symplectic {

std::string q_name(std::size_t a) { return fmt::format("q{}", a + 1); }
std::string y_name(std::size_t a) { return fmt::format("y{}", a + 1); }
std::string z_name(std::size_t i) { return fmt::format("z{}", i + 1); }
std::string xi_name(std::size_t i) { return fmt::format("xi{}", i + 1); }
std::string p_name(std::size_t a) { return fmt::format("p{}", a + 1); }
std::string zeta_name(std::size_t i) { return fmt::format("zeta{}", i + 1); }
std::string eta_name(std::size_t a) { return fmt::format("eta{}", a + 1); }
std::string theta_name(std::size_t i) { return fmt::format("theta{}", i + 1); }

PhaseSpace schouten_space(const std::vector<std::string>& base)
{
    std::vector<CanonicalPair> pairs;
    for (std::size_t i = 0; i < base.size(); ++i)
        pairs.push_back({base[i], 0, theta_name(i), 1});
    return PhaseSpace::create(1, pairs);
}

PhaseSpace lie_phase_space(const std::vector<std::string>& base, std::size_t rank, int n)
{
    std::vector<CanonicalPair> pairs;
    for (std::size_t i = 0; i < base.size(); ++i)
        pairs.push_back({base[i], 0, z_name(i), n - 1});
    for (std::size_t a = 0; a < rank; ++a)
        pairs.push_back({q_name(a), 1, y_name(a), n - 2});
    return PhaseSpace::create(n - 1, pairs);
}

PhaseSpace twisted_phase_space(const std::vector<std::string>& base, std::size_t rank, int n)
{
    std::vector<CanonicalPair> pairs;
    for (std::size_t i = 0; i < base.size(); ++i)
        pairs.push_back({base[i], 0, xi_name(i), n});
    for (std::size_t a = 0; a < rank; ++a)
        pairs.push_back({q_name(a), 1, p_name(a), n - 1});
    for (std::size_t i = 0; i < base.size(); ++i)
        pairs.push_back({z_name(i), n - 1, zeta_name(i), 1});
    for (std::size_t a = 0; a < rank; ++a)
        pairs.push_back({y_name(a), n - 2, eta_name(a), 2});
    return PhaseSpace::create(n, pairs);
}

}  // namespace eform::symplectic
