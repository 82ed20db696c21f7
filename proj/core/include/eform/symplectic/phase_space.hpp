#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <eform/graded/element.hpp>

namespace eform::symplectic {

using graded::Coordinate;
using graded::GradedElement;

struct CanonicalPair {
    std::string coordinate;
    int coordinate_degree = 0;
    std::string momentum;
    int momentum_degree = 0;
};

// Canonical graded symplectic manifold of degree N: {c, p} = 1 for each pair
// and {p, c} = -(-1)^{|c||p|}. Degree-0 members of a pair become scalar
// variables of the coefficient ring.
class PhaseSpace {
public:
    struct Pair {
        Coordinate coordinate;
        Coordinate momentum;
        int coordinate_degree;
        int momentum_degree;
    };

    static PhaseSpace create(int degree, const std::vector<CanonicalPair>& pairs);

    const graded::ContextPtr& context() const { return ctx_; }
    int degree() const { return degree_; }
    const std::vector<Pair>& pairs() const { return pairs_; }
    const std::vector<Coordinate>& momenta() const { return momenta_; }
    bool is_momentum(Coordinate c) const;

    GradedElement element(std::string_view name) const;
    GradedElement parse(std::string_view source) const;
    GradedElement zero() const { return GradedElement(ctx_); }

    // Highest total power of momentum coordinates over the terms of f.
    int momentum_multiplicity(const GradedElement& f) const;

private:
    graded::ContextPtr ctx_;
    int degree_ = 0;
    std::vector<Pair> pairs_;
    std::vector<Coordinate> momenta_;
};

// Bidifferential bracket extended from the pair table:
// {f,g} = sum (f d<_c)(d>_p g) - (-1)^{|c||p|} (f d<_p)(d>_c g).
GradedElement poisson_bracket(const GradedElement& f, const GradedElement& g, const PhaseSpace& ps);

// e^{ad phi} f = f + {f,phi} + 1/2 {{f,phi},phi} + ...; phi must have degree N
// (or be zero) and contain no momenta.
GradedElement twist(const GradedElement& phi, const GradedElement& f, const PhaseSpace& ps);

GradedElement project_to_base(const GradedElement& f, const PhaseSpace& ps);

// pr {{f, theta}, g} for momentum-free f and g.
GradedElement derived_bracket(const GradedElement& f, const GradedElement& g, const GradedElement& theta,
                              const PhaseSpace& ps);

}  // namespace eform::symplectic
