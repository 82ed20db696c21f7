#pragma once

#include <string>
#include <vector>

namespace eform {

struct Residual {
    std::string label;
    std::string expression;
};

// Outcome of a structural check. A failed check carries the nonzero
// residual components that witnessed the failure.
struct Verdict {
    bool passed = true;
    std::vector<Residual> residuals;

    void fail(std::string label, std::string expression)
    {
        passed = false;
        residuals.push_back({std::move(label), std::move(expression)});
    }

    void note(std::string label, std::string expression)
    {
        residuals.push_back({std::move(label), std::move(expression)});
    }

    void absorb(const Verdict& other, const std::string& prefix = {})
    {
        if (!other.passed)
            passed = false;
        for (const auto& r : other.residuals)
            residuals.push_back({prefix + r.label, r.expression});
    }

    explicit operator bool() const { return passed; }
};

}  // namespace eform
