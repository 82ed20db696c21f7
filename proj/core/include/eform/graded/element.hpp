#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <eform/graded/context.hpp>

namespace eform::graded {

// Exponent of each generator; odd generators only take 0 or 1. The monomial
// stands for the product of generators in context order.
using GradedMonomial = std::vector<std::uint16_t>;

struct Degree {
    enum class Kind { zero, homogeneous, mixed };
    Kind kind = Kind::zero;
    int value = 0;

    bool is(int d) const { return kind == Kind::zero || (kind == Kind::homogeneous && value == d); }
};

class GradedElement {
public:
    using TermMap = std::map<GradedMonomial, poly::Polynomial>;

    explicit GradedElement(ContextPtr ctx);
    GradedElement(ContextPtr ctx, const poly::Polynomial& scalar);
    GradedElement(ContextPtr ctx, const poly::Rational& c);

    static GradedElement coordinate(ContextPtr ctx, Coordinate c);
    static GradedElement coordinate(ContextPtr ctx, std::string_view name);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int monomial_degree(const GradedMonomial& m) const;
    Degree degree() const;
    // Coefficient of a monomial, zero polynomial when absent.
    poly::Polynomial coefficient(const GradedMonomial& m) const;
    // Highest power of a coordinate appearing anywhere in the element.
    int max_power(Coordinate c) const;

    void add_term(const GradedMonomial& m, const poly::Polynomial& coeff);

    GradedElement& operator+=(const GradedElement& o);
    GradedElement& operator-=(const GradedElement& o);
    GradedElement& operator*=(const poly::Rational& c);
    GradedElement operator-() const;

    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator*(GradedElement a, const poly::Rational& c) { return a *= c; }
    friend GradedElement operator*(const poly::Rational& c, GradedElement a) { return a *= c; }
    friend GradedElement operator*(const GradedElement& a, const GradedElement& b);

    bool operator==(const GradedElement& o) const;

    GradedElement left_derivative(Coordinate c) const;
    GradedElement right_derivative(Coordinate c) const;
    // Sets the listed coordinates to zero.
    GradedElement substitute_zero(std::span<const Coordinate> coords) const;
    // Keeps only terms of the given polynomial degree in the listed coordinates.
    GradedElement filter_degree(std::span<const Coordinate> coords, int power) const;

    std::string to_string() const;

private:
    ContextPtr ctx_;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const GradedElement& e) { return os << e.to_string(); }

// Sign of moving the odd generators of b past those of a when forming a*b.
int koszul_sign(const GradedContext& ctx, const GradedMonomial& a, const GradedMonomial& b);

GradedElement gmul(const GradedElement& a, const GradedElement& b);
Degree degree_of(const GradedElement& a);
GradedElement left_derivative(const GradedElement& a, Coordinate c);
GradedElement right_derivative(const GradedElement& a, Coordinate c);

// Same grammar as the polynomial parser; products are taken in the written
// order with Koszul signs.
GradedElement parse_graded(std::string_view source, const ContextPtr& ctx);

}  // namespace eform::graded
