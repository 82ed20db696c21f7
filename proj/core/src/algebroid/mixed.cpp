#include <eform/algebroid/mixed.hpp>

namespace eform::algebroid {

MixedForm::MixedForm(VarList vars, std::size_t rank, std::size_t e_arity, std::size_t base_arity)
    : vars_(std::move(vars)), rank_(rank), e_arity_(e_arity), base_arity_(base_arity)
{
}

MixedForm MixedForm::from_eform(const EForm& alpha)
{
    MixedForm out(alpha.vars(), alpha.dim(), alpha.arity(), 0);
    for (const auto& [k, v] : alpha.components())
        out.comps_.emplace(Key{k, {}}, v);
    return out;
}

MixedForm MixedForm::from_base(const BaseForm& omega, std::size_t rank)
{
    MixedForm out(omega.vars(), rank, 0, omega.arity());
    for (const auto& [k, v] : omega.components())
        out.comps_.emplace(Key{{}, k}, v);
    return out;
}

void MixedForm::check(const Index& e, const Index& b) const
{
    if (e.size() != e_arity_ || b.size() != base_arity_)
        throw ShapeError("mixed form index has wrong length");
    for (auto a : e)
        if (a >= rank_)
            throw ShapeError("E-index out of range");
    for (auto i : b)
        if (i >= dim())
            throw ShapeError("base index out of range");
}

Polynomial MixedForm::at(Index e, Index b) const
{
    check(e, b);
    int s = sort_with_sign(e) * sort_with_sign(b);
    if (s == 0)
        return Polynomial(vars_);
    auto it = comps_.find({e, b});
    if (it == comps_.end())
        return Polynomial(vars_);
    return s > 0 ? it->second : -it->second;
}

void MixedForm::add(Index e, Index b, const Polynomial& value)
{
    check(e, b);
    if (value.is_zero())
        return;
    int s = sort_with_sign(e) * sort_with_sign(b);
    if (s == 0)
        throw ShapeError("repeated index in antisymmetric component");
    Polynomial v = value.embed(vars_);
    if (s < 0)
        v = -v;
    Key key{std::move(e), std::move(b)};
    auto it = comps_.find(key);
    if (it == comps_.end()) {
        comps_.emplace(std::move(key), std::move(v));
        return;
    }
    it->second += v;
    if (it->second.is_zero())
        comps_.erase(it);
}

void MixedForm::set(Index e, Index b, const Polynomial& value)
{
    Index se = e, sb = b;
    if (sort_with_sign(se) * sort_with_sign(sb) == 0) {
        if (!value.is_zero())
            throw ShapeError("repeated index in antisymmetric component");
        return;
    }
    comps_.erase({se, sb});
    add(std::move(e), std::move(b), value);
}

EForm MixedForm::to_eform() const
{
    if (base_arity_ != 0)
        throw ShapeError("mixed form has base legs");
    EForm out(vars_, rank_, e_arity_);
    for (const auto& [k, v] : comps_)
        out.add(k.first, v);
    return out;
}

BaseForm MixedForm::to_base() const
{
    if (e_arity_ != 0)
        throw ShapeError("mixed form has E-legs");
    BaseForm out(vars_, dim(), base_arity_);
    for (const auto& [k, v] : comps_)
        out.add(k.second, v);
    return out;
}

void MixedForm::same_shape(const MixedForm& o) const
{
    if (o.rank_ != rank_ || o.e_arity_ != e_arity_ || o.base_arity_ != base_arity_ || o.dim() != dim())
        throw ShapeError("mixed form shapes differ");
}

MixedForm& MixedForm::operator+=(const MixedForm& o)
{
    same_shape(o);
    for (const auto& [k, v] : o.comps_)
        add(k.first, k.second, v);
    return *this;
}

MixedForm& MixedForm::operator-=(const MixedForm& o)
{
    same_shape(o);
    for (const auto& [k, v] : o.comps_)
        add(k.first, k.second, -v);
    return *this;
}

MixedForm MixedForm::operator-() const
{
    MixedForm out = *this;
    for (auto& [k, v] : out.comps_)
        v = -v;
    return out;
}

MixedForm operator*(const Polynomial& f, const MixedForm& a)
{
    MixedForm out(a.vars_, a.rank_, a.e_arity_, a.base_arity_);
    for (const auto& [k, v] : a.comps_)
        out.add(k.first, k.second, f * v);
    return out;
}

MixedForm operator*(const Rational& c, const MixedForm& a) { return Polynomial(a.vars_, c) * a; }

bool MixedForm::operator==(const MixedForm& o) const
{
    return rank_ == o.rank_ && e_arity_ == o.e_arity_ && base_arity_ == o.base_arity_ && comps_ == o.comps_;
}

std::string mixed_label(const Index& e, const Index& b)
{
    std::string l = index_label(e);
    std::string r = index_label(b);
    return l.substr(0, l.size() - 1) + ";" + r.substr(1);
}

Verdict MixedForm::residuals(const std::string& prefix) const
{
    Verdict v;
    for (const auto& [k, p] : comps_)
        v.fail(prefix + mixed_label(k.first, k.second), p.to_string());
    return v;
}

std::string MixedForm::to_string() const
{
    if (comps_.empty())
        return "0";
    std::string out;
    for (const auto& [k, p] : comps_) {
        if (!out.empty())
            out += "; ";
        out += mixed_label(k.first, k.second) + ": " + p.to_string();
    }
    return out;
}

MixedForm random_mixed(const VarList& vars, std::size_t rank, std::size_t e_arity, std::size_t base_arity,
                       const poly::RandomPolySpec& spec, std::mt19937_64& rng)
{
    MixedForm out(vars, rank, e_arity, base_arity);
    for (const auto& e : increasing_tuples(rank, e_arity))
        for (const auto& b : increasing_tuples(vars->size(), base_arity))
            out.add(e, b, poly::random_polynomial(vars, spec, rng));
    return out;
}

}  // namespace eform::algebroid
