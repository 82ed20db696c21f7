#pragma once

#include <map>
#include <ostream>
#include <utility>

#include <eform/algebroid/tensor.hpp>

namespace eform::algebroid {

// Sections of wedge^k T*M (x) wedge^m E*. Components are stored with the
// E-indices first: A_{a1..am; i1..ik} = A(e_{a1},..,e_{am}; d_{i1},..,d_{ik}),
// antisymmetric within each block.
class MixedForm {
public:
    using Key = std::pair<Index, Index>;

    MixedForm() = default;
    MixedForm(VarList vars, std::size_t rank, std::size_t e_arity, std::size_t base_arity);

    static MixedForm from_eform(const EForm& alpha);
    static MixedForm from_base(const BaseForm& omega, std::size_t rank);

    const VarList& vars() const { return vars_; }
    std::size_t rank() const { return rank_; }
    std::size_t dim() const { return vars_->size(); }
    std::size_t e_arity() const { return e_arity_; }
    std::size_t base_arity() const { return base_arity_; }
    const std::map<Key, Polynomial>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    Polynomial at(Index e, Index b) const;
    void add(Index e, Index b, const Polynomial& value);
    void set(Index e, Index b, const Polynomial& value);

    // Requires base_arity() == 0, respectively e_arity() == 0.
    EForm to_eform() const;
    BaseForm to_base() const;

    MixedForm& operator+=(const MixedForm& o);
    MixedForm& operator-=(const MixedForm& o);
    MixedForm operator-() const;
    friend MixedForm operator+(MixedForm a, const MixedForm& b) { return a += b; }
    friend MixedForm operator-(MixedForm a, const MixedForm& b) { return a -= b; }
    friend MixedForm operator*(const Polynomial& f, const MixedForm& a);
    friend MixedForm operator*(const Rational& c, const MixedForm& a);
    bool operator==(const MixedForm& o) const;

    // Nonzero components labelled prefix[a..;i..].
    Verdict residuals(const std::string& prefix) const;
    std::string to_string() const;

private:
    void check(const Index& e, const Index& b) const;
    void same_shape(const MixedForm& o) const;

    VarList vars_;
    std::size_t rank_ = 0;
    std::size_t e_arity_ = 0;
    std::size_t base_arity_ = 0;
    std::map<Key, Polynomial> comps_;
};

std::string mixed_label(const Index& e, const Index& b);

inline std::ostream& operator<<(std::ostream& os, const MixedForm& m) { return os << m.to_string(); }

MixedForm random_mixed(const VarList& vars, std::size_t rank, std::size_t e_arity, std::size_t base_arity,
                       const poly::RandomPolySpec& spec, std::mt19937_64& rng);

}  // namespace eform::algebroid
