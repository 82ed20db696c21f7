#pragma once

#include <optional>
#include <random>
#include <vector>

#include <eform/graded/element.hpp>
#include <eform/poly/random.hpp>

namespace eform::graded {

struct RandomGradedSpec {
    int max_factors = 3;
    int max_terms = 3;
    poly::RandomPolySpec coefficients{1, 2, 3, 0.0};
};

// Random element of the given degree whose monomials use only the allowed
// generators and whose coefficients use only the allowed scalar variables.
// All coordinates are allowed when the list is absent. Returns zero when no
// monomial of that degree exists.
GradedElement random_homogeneous(const ContextPtr& ctx, int degree, const std::optional<std::vector<Coordinate>>& allowed,
                                 const RandomGradedSpec& spec, std::mt19937_64& rng);

}  // namespace eform::graded
