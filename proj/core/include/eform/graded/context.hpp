#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <eform/poly/polynomial.hpp>

namespace eform::graded {

struct GradedGenerator {
    std::string name;
    int degree = 1;

    bool odd() const { return degree % 2 != 0; }
};

// A coordinate is either a degree-0 variable of the coefficient ring or one
// of the graded generators.
struct Coordinate {
    bool generator = false;
    std::size_t index = 0;

    friend bool operator==(const Coordinate&, const Coordinate&) = default;
    friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

class GradedContext;
using ContextPtr = std::shared_ptr<const GradedContext>;

class GradedContext {
public:
    // Generators are reordered by (degree, name); degree 0 is rejected since
    // such coordinates belong to the scalar variables.
    static ContextPtr create(std::vector<std::string> scalars, std::vector<GradedGenerator> generators);

    const poly::VarList& scalars() const { return scalars_; }
    const std::vector<GradedGenerator>& generators() const { return generators_; }
    std::size_t ngenerators() const { return generators_.size(); }

    int degree(Coordinate c) const { return c.generator ? generators_[c.index].degree : 0; }
    bool odd(Coordinate c) const { return c.generator && generators_[c.index].odd(); }
    const std::string& name(Coordinate c) const;

    std::optional<Coordinate> find(std::string_view name) const;
    Coordinate coordinate(std::string_view name) const;
    std::vector<Coordinate> coordinates() const;

private:
    GradedContext() = default;

    poly::VarList scalars_;
    std::vector<GradedGenerator> generators_;
};

}  // namespace eform::graded
