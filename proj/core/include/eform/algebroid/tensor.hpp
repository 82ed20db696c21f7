#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <eform/errors.hpp>
#include <eform/poly/polynomial.hpp>
#include <eform/poly/random.hpp>
#include <eform/verdict.hpp>

namespace eform::algebroid {

using poly::Polynomial;
using poly::Rational;
using poly::VarList;
using Index = std::vector<std::size_t>;

// Sorts idx in place and returns the permutation sign, or 0 on a repeated entry.
int sort_with_sign(Index& idx);

// All strictly increasing index tuples of the given length below dim.
std::vector<Index> increasing_tuples(std::size_t dim, std::size_t length);

// "[1,2,3]" with 1-based entries.
std::string index_label(const Index& idx);

// Totally antisymmetric array of polynomials. Only strictly increasing index
// tuples are stored; other orderings are read through the permutation sign.
template <class Tag>
class AltTensor {
public:
    AltTensor() = default;
    AltTensor(VarList vars, std::size_t dim, std::size_t arity) : vars_(std::move(vars)), dim_(dim), arity_(arity) {}

    const VarList& vars() const { return vars_; }
    std::size_t dim() const { return dim_; }
    std::size_t arity() const { return arity_; }
    const std::map<Index, Polynomial>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    Polynomial at(Index idx) const
    {
        check(idx);
        int s = sort_with_sign(idx);
        if (s == 0)
            return Polynomial(vars_);
        auto it = comps_.find(idx);
        if (it == comps_.end())
            return Polynomial(vars_);
        return s > 0 ? it->second : -it->second;
    }

    void add(Index idx, const Polynomial& value)
    {
        check(idx);
        if (value.is_zero())
            return;
        int s = sort_with_sign(idx);
        if (s == 0)
            throw ShapeError("repeated index in antisymmetric component");
        Polynomial v = value.embed(vars_);
        if (s < 0)
            v = -v;
        auto it = comps_.find(idx);
        if (it == comps_.end()) {
            comps_.emplace(std::move(idx), std::move(v));
            return;
        }
        it->second += v;
        if (it->second.is_zero())
            comps_.erase(it);
    }

    void set(Index idx, const Polynomial& value)
    {
        Index sorted = idx;
        int s = sort_with_sign(sorted);
        if (s == 0) {
            if (!value.is_zero())
                throw ShapeError("repeated index in antisymmetric component");
            return;
        }
        comps_.erase(sorted);
        add(std::move(idx), value);
    }

    AltTensor& operator+=(const AltTensor& o)
    {
        same_shape(o);
        for (const auto& [k, v] : o.comps_)
            add(k, v);
        return *this;
    }
    AltTensor& operator-=(const AltTensor& o)
    {
        same_shape(o);
        for (const auto& [k, v] : o.comps_)
            add(k, -v);
        return *this;
    }
    AltTensor operator-() const
    {
        AltTensor out = *this;
        for (auto& [k, v] : out.comps_)
            v = -v;
        return out;
    }
    friend AltTensor operator+(AltTensor a, const AltTensor& b) { return a += b; }
    friend AltTensor operator-(AltTensor a, const AltTensor& b) { return a -= b; }
    friend AltTensor operator*(const Polynomial& f, const AltTensor& a)
    {
        AltTensor out(a.vars_, a.dim_, a.arity_);
        for (const auto& [k, v] : a.comps_)
            out.add(k, f * v);
        return out;
    }
    friend AltTensor operator*(const Rational& c, const AltTensor& a) { return Polynomial(a.vars_, c) * a; }

    bool operator==(const AltTensor& o) const
    {
        return dim_ == o.dim_ && arity_ == o.arity_ && comps_ == o.comps_;
    }

    // Nonzero components, each labelled prefix[i,j,...].
    Verdict residuals(const std::string& prefix) const
    {
        Verdict v;
        for (const auto& [k, p] : comps_)
            v.fail(prefix + index_label(k), p.to_string());
        return v;
    }

    std::string to_string() const
    {
        if (comps_.empty())
            return "0";
        std::string out;
        for (const auto& [k, p] : comps_) {
            if (!out.empty())
                out += "; ";
            out += index_label(k) + ": " + p.to_string();
        }
        return out;
    }

private:
    void check(const Index& idx) const
    {
        if (idx.size() != arity_)
            throw ShapeError("index tuple has wrong length");
        for (auto i : idx)
            if (i >= dim_)
                throw ShapeError("index out of range");
    }

    void same_shape(const AltTensor& o) const
    {
        if (o.dim_ != dim_ || o.arity_ != arity_)
            throw ShapeError("tensor shapes differ");
    }

    VarList vars_;
    std::size_t dim_ = 0;
    std::size_t arity_ = 0;
    std::map<Index, Polynomial> comps_;
};

template <class Tag>
std::ostream& operator<<(std::ostream& os, const AltTensor<Tag>& t)
{
    return os << t.to_string();
}

struct ETag {};
struct BaseTag {};
struct MultiTag {};

// Sections of wedge^n E*, components J_{a1..an} = J(e_{a1}, ..., e_{an}).
using EForm = AltTensor<ETag>;
// Differential forms on the base, components w_{i1..ik} = w(d_{i1}, ..., d_{ik}).
using BaseForm = AltTensor<BaseTag>;
// Multivector fields, components P^{i1..ik} = P(dx^{i1}, ..., dx^{ik}).
using MultiVector = AltTensor<MultiTag>;

// A section of E in the global frame.
class ESection {
public:
    ESection() = default;
    ESection(VarList vars, std::size_t rank);
    static ESection frame(VarList vars, std::size_t rank, std::size_t a);

    const VarList& vars() const { return vars_; }
    std::size_t rank() const { return comps_.size(); }
    const Polynomial& operator[](std::size_t a) const { return comps_.at(a); }
    void set(std::size_t a, const Polynomial& p) { comps_.at(a) = p.embed(vars_); }
    bool is_zero() const;

    ESection& operator+=(const ESection& o);
    ESection& operator-=(const ESection& o);
    friend ESection operator+(ESection a, const ESection& b) { return a += b; }
    friend ESection operator-(ESection a, const ESection& b) { return a -= b; }
    friend ESection operator*(const Polynomial& f, const ESection& u);
    bool operator==(const ESection& o) const { return comps_ == o.comps_; }

    Verdict residuals(const std::string& prefix) const;
    std::string to_string() const;

private:
    VarList vars_;
    std::vector<Polynomial> comps_;
};

template <class Tag>
AltTensor<Tag> random_tensor(const VarList& vars, std::size_t dim, std::size_t arity, const poly::RandomPolySpec& spec,
                             std::mt19937_64& rng)
{
    AltTensor<Tag> out(vars, dim, arity);
    for (const auto& idx : increasing_tuples(dim, arity))
        out.add(idx, poly::random_polynomial(vars, spec, rng));
    return out;
}

ESection random_section(const VarList& vars, std::size_t rank, const poly::RandomPolySpec& spec, std::mt19937_64& rng);

}  // namespace eform::algebroid
