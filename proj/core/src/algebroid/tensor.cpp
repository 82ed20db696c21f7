#include <eform/algebroid/tensor.hpp>

#include <fmt/format.h>

namespace eform::algebroid {

int sort_with_sign(Index& idx)
{
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j])
                return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    return sign;
}

std::vector<Index> increasing_tuples(std::size_t dim, std::size_t length)
{
    std::vector<Index> out;
    if (length > dim)
        return out;
    Index cur(length);
    for (std::size_t i = 0; i < length; ++i)
        cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t k = length;
        while (k > 0 && cur[k - 1] == dim - length + k - 1)
            --k;
        if (k == 0)
            return out;
        ++cur[k - 1];
        for (std::size_t j = k; j < length; ++j)
            cur[j] = cur[j - 1] + 1;
    }
}

std::string index_label(const Index& idx)
{
    std::string out = "[";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k)
            out += ',';
        out += std::to_string(idx[k] + 1);
    }
    return out + "]";
}

ESection::ESection(VarList vars, std::size_t rank) : vars_(std::move(vars)), comps_(rank, Polynomial(vars_)) {}

ESection ESection::frame(VarList vars, std::size_t rank, std::size_t a)
{
    ESection u(vars, rank);
    u.comps_.at(a) = Polynomial(vars, 1);
    return u;
}

bool ESection::is_zero() const
{
    for (const auto& p : comps_)
        if (!p.is_zero())
            return false;
    return true;
}

ESection& ESection::operator+=(const ESection& o)
{
    if (o.rank() != rank())
        throw ShapeError("section ranks differ");
    for (std::size_t a = 0; a < rank(); ++a)
        comps_[a] += o.comps_[a];
    return *this;
}

ESection& ESection::operator-=(const ESection& o)
{
    if (o.rank() != rank())
        throw ShapeError("section ranks differ");
    for (std::size_t a = 0; a < rank(); ++a)
        comps_[a] -= o.comps_[a];
    return *this;
}

ESection operator*(const Polynomial& f, const ESection& u)
{
    ESection out = u;
    for (auto& p : out.comps_)
        p = f * p;
    return out;
}

Verdict ESection::residuals(const std::string& prefix) const
{
    Verdict v;
    for (std::size_t a = 0; a < rank(); ++a)
        if (!comps_[a].is_zero())
            v.fail(fmt::format("{}(e{})", prefix, a + 1), comps_[a].to_string());
    return v;
}

std::string ESection::to_string() const
{
    std::string out;
    for (std::size_t a = 0; a < rank(); ++a) {
        if (comps_[a].is_zero())
            continue;
        if (!out.empty())
            out += "; ";
        out += fmt::format("e{}: {}", a + 1, comps_[a].to_string());
    }
    return out.empty() ? "0" : out;
}

ESection random_section(const VarList& vars, std::size_t rank, const poly::RandomPolySpec& spec, std::mt19937_64& rng)
{
    ESection u(vars, rank);
    for (std::size_t a = 0; a < rank; ++a)
        u.set(a, poly::random_polynomial(vars, spec, rng));
    return u;
}

}  // namespace eform::algebroid
