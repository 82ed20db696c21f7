#include <eform/poly/polynomial.hpp>

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <fmt/format.h>

#include <eform/errors.hpp>

namespace eform::poly {

namespace {

const VarList& empty_vars()
{
    static const VarList empty = std::make_shared<const std::vector<std::string>>();
    return empty;
}

int degree_of(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

VarList make_vars(std::vector<std::string> names)
{
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ShapeError("duplicate variable name");
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b)
{
    return a == b || *a == *b;
}

VarList union_vars(const VarList& a, const VarList& b)
{
    if (same_vars(a, b) || b->empty())
        return a;
    if (a->empty())
        return b;
    std::vector<std::string> out = *a;
    bool grew = false;
    for (const auto& name : *b) {
        if (std::find(a->begin(), a->end(), name) == a->end()) {
            out.push_back(name);
            grew = true;
        }
    }
    return grew ? std::make_shared<const std::vector<std::string>>(std::move(out)) : a;
}

bool GrLexLess::operator()(const Exponents& a, const Exponents& b) const
{
    int da = degree_of(a), db = degree_of(b);
    if (da != db)
        return da < db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned ea = i < a.size() ? a[i] : 0;
        unsigned eb = i < b.size() ? b[i] : 0;
        if (ea != eb)
            return ea < eb;
    }
    return false;
}

Polynomial::Polynomial() : vars_(empty_vars()) {}

Polynomial::Polynomial(VarList vars) : vars_(vars ? std::move(vars) : empty_vars()) {}

Polynomial::Polynomial(VarList vars, const Rational& c) : Polynomial(std::move(vars))
{
    if (c != 0)
        terms_.emplace(Exponents(nvars(), 0), c);
}

Polynomial Polynomial::variable(VarList vars, std::size_t index)
{
    Polynomial p(std::move(vars));
    if (index >= p.nvars())
        throw ShapeError("variable index out of range");
    Exponents e(p.nvars(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::variable(VarList vars, std::string_view name)
{
    auto it = std::find(vars->begin(), vars->end(), name);
    if (it == vars->end())
        throw ShapeError(fmt::format("unknown variable '{}'", name));
    return variable(vars, static_cast<std::size_t>(it - vars->begin()));
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

std::optional<Rational> Polynomial::constant_value() const
{
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        return std::nullopt;
    return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const
{
    if (terms_.empty())
        return -1;
    return degree_of(terms_.rbegin()->first);
}

std::optional<std::size_t> Polynomial::index_of(std::string_view name) const
{
    auto it = std::find(vars_->begin(), vars_->end(), name);
    if (it == vars_->end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vars_->begin());
}

Polynomial Polynomial::embed(const VarList& target) const
{
    if (same_vars(vars_, target)) {
        Polynomial p = *this;
        p.vars_ = target;
        return p;
    }
    std::vector<std::size_t> where(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
        if (it == target->end()) {
            bool used = std::any_of(terms_.begin(), terms_.end(),
                                    [i](const auto& t) { return t.first[i] != 0; });
            if (used)
                throw ShapeError(fmt::format("variable '{}' missing from target", (*vars_)[i]));
            where[i] = target->size();
            continue;
        }
        where[i] = static_cast<std::size_t>(it - target->begin());
    }
    Polynomial p(target);
    for (const auto& [e, c] : terms_) {
        Exponents f(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                f[where[i]] = e[i];
        p.terms_.emplace(std::move(f), c);
    }
    return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c)
{
    if (e.size() != nvars())
        throw ShapeError("exponent vector has wrong length");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.terms_.empty())
        return *this;
    if (!same_vars(vars_, o.vars_)) {
        VarList u = union_vars(vars_, o.vars_);
        if (!same_vars(u, vars_))
            *this = embed(u);
        Polynomial oe = o.embed(u);
        for (const auto& [e, c] : oe.terms_)
            add_term(e, c);
        return *this;
    }
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    return *this += -o;
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto& [e, c] : p.terms_)
        c = -c;
    return p;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (!same_vars(a.vars_, b.vars_)) {
        VarList u = union_vars(a.vars_, b.vars_);
        return a.embed(u) * b.embed(u);
    }
    Polynomial p(a.vars_);
    if (a.terms_.empty() || b.terms_.empty())
        return p;
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

bool Polynomial::operator==(const Polynomial& o) const
{
    if (same_vars(vars_, o.vars_))
        return terms_ == o.terms_;
    VarList u = union_vars(vars_, o.vars_);
    return embed(u).terms_ == o.embed(u).terms_;
}

Polynomial Polynomial::partial_derivative(std::size_t index) const
{
    if (index >= nvars())
        throw ShapeError("variable index out of range");
    Polynomial p(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0)
            continue;
        Exponents f = e;
        --f[index];
        p.add_term(f, c * e[index]);
    }
    return p;
}

Polynomial Polynomial::partial_derivative(std::string_view name) const
{
    auto i = index_of(name);
    if (!i)
        return Polynomial(vars_);
    return partial_derivative(*i);
}

Polynomial Polynomial::substitute_zero(std::size_t index) const
{
    Polynomial p(vars_);
    for (const auto& [e, c] : terms_)
        if (e[index] == 0)
            p.terms_.emplace(e, c);
    return p;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const
{
    if (point.size() != nvars())
        throw ShapeError("evaluation point has wrong dimension");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k)
                t *= point[i];
        total += t;
    }
    return total;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += (*vars_)[i];
            if (e[i] > 1)
                mono += fmt::format("^{}", e[i]);
        }
        Rational a = abs(c);
        std::string body;
        if (mono.empty())
            body = poly::to_string(a);
        else if (a == 1)
            body = mono;
        else
            body = poly::to_string(a) + "*" + mono;
        if (first)
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

Polynomial add(const Polynomial& a, const Polynomial& b)
{
    return a + b;
}

Polynomial mul(const Polynomial& a, const Polynomial& b)
{
    return a * b;
}

Polynomial scale(const Polynomial& a, const Rational& c)
{
    return a * c;
}

Polynomial partial_derivative(const Polynomial& a, std::string_view var)
{
    return a.partial_derivative(var);
}

}  // namespace eform::poly
