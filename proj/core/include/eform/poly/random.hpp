#pragma once

#include <random>

#include <eform/poly/polynomial.hpp>

namespace eform::poly {

struct RandomPolySpec {
    int max_degree = 2;
    int max_terms = 3;
    int coefficient_bound = 3;
    // Probability of returning the zero polynomial.
    double zero_probability = 0.0;
};

Polynomial random_polynomial(const VarList& vars, const RandomPolySpec& spec, std::mt19937_64& rng);

}  // namespace eform::poly
