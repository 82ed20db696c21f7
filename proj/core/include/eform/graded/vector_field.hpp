#pragma once

#include <map>
#include <string>

#include <eform/graded/element.hpp>
#include <eform/verdict.hpp>

namespace eform::graded {

// A derivation acting from the left, determined by its values on the
// coordinates.
class GradedVectorField {
public:
    GradedVectorField(ContextPtr ctx, int degree);

    const ContextPtr& context() const { return ctx_; }
    int degree() const { return degree_; }

    // Checks that the image has degree |c| + degree().
    void set(Coordinate c, GradedElement image);
    GradedElement image(Coordinate c) const;

    GradedElement apply(const GradedElement& f) const;
    GradedVectorField operator+(const GradedVectorField& o) const;
    GradedVectorField operator*(const poly::Rational& c) const;

    // Graded commutator X Y - (-1)^{|X||Y|} Y X.
    static GradedVectorField commutator(const GradedVectorField& x, const GradedVectorField& y);

    // Components of X∘X on each coordinate that are nonzero.
    Verdict check_square_zero(const std::string& label = "Q^2") const;

private:
    ContextPtr ctx_;
    int degree_;
    std::map<Coordinate, GradedElement> images_;
};

}  // namespace eform::graded
