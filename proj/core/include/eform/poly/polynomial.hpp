#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <eform/poly/rational.hpp>

namespace eform::poly {

using VarList = std::shared_ptr<const std::vector<std::string>>;
using Exponents = std::vector<std::uint16_t>;

VarList make_vars(std::vector<std::string> names);

// Order-preserving union: the variables of a followed by the new ones of b.
VarList union_vars(const VarList& a, const VarList& b);

bool same_vars(const VarList& a, const VarList& b);

// Graded lexicographic order: total degree first, then the earliest variable
// with a larger exponent wins.
struct GrLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrLexLess>;

    Polynomial();
    explicit Polynomial(VarList vars);
    Polynomial(VarList vars, const Rational& c);

    static Polynomial variable(VarList vars, std::size_t index);
    static Polynomial variable(VarList vars, std::string_view name);

    const VarList& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Rational> constant_value() const;
    Rational coefficient(const Exponents& e) const;
    int total_degree() const;
    std::optional<std::size_t> index_of(std::string_view name) const;

    // Re-expresses the polynomial over a superset of its variables.
    Polynomial embed(const VarList& target) const;

    void add_term(const Exponents& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    // Equal as functions; the variable lists may differ.
    bool operator==(const Polynomial& o) const;

    Polynomial partial_derivative(std::size_t index) const;
    Polynomial partial_derivative(std::string_view name) const;
    Polynomial substitute_zero(std::size_t index) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // Terms in descending grlex order; reparses to the same polynomial.
    std::string to_string() const;

private:
    VarList vars_;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, const Rational& c);
Polynomial partial_derivative(const Polynomial& a, std::string_view var);

}  // namespace eform::poly
