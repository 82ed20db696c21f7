#include <eform/graded/context.hpp>

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include <eform/errors.hpp>

namespace eform::graded {

ContextPtr GradedContext::create(std::vector<std::string> scalars, std::vector<GradedGenerator> generators)
{
    std::set<std::string> seen;
    for (const auto& s : scalars)
        if (!seen.insert(s).second)
            throw ShapeError(fmt::format("duplicate coordinate '{}'", s));
    for (const auto& g : generators) {
        if (g.degree == 0)
            throw ShapeError(fmt::format("generator '{}' has degree 0; declare it as a scalar variable", g.name));
        if (!seen.insert(g.name).second)
            throw ShapeError(fmt::format("duplicate coordinate '{}'", g.name));
    }
    std::stable_sort(generators.begin(), generators.end(), [](const auto& a, const auto& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.name < b.name;
    });
    auto ctx = std::shared_ptr<GradedContext>(new GradedContext());
    ctx->scalars_ = poly::make_vars(std::move(scalars));
    ctx->generators_ = std::move(generators);
    return ctx;
}

const std::string& GradedContext::name(Coordinate c) const
{
    return c.generator ? generators_.at(c.index).name : scalars_->at(c.index);
}

std::optional<Coordinate> GradedContext::find(std::string_view name) const
{
    for (std::size_t i = 0; i < scalars_->size(); ++i)
        if ((*scalars_)[i] == name)
            return Coordinate{false, i};
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return Coordinate{true, i};
    return std::nullopt;
}

Coordinate GradedContext::coordinate(std::string_view name) const
{
    auto c = find(name);
    if (!c)
        throw ShapeError(fmt::format("unknown coordinate '{}'", name));
    return *c;
}

std::vector<Coordinate> GradedContext::coordinates() const
{
    std::vector<Coordinate> out;
    for (std::size_t i = 0; i < scalars_->size(); ++i)
        out.push_back({false, i});
    for (std::size_t i = 0; i < generators_.size(); ++i)
        out.push_back({true, i});
    return out;
}

}  // namespace eform::graded
