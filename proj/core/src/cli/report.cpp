#include <eform/cli/cli.hpp>

#include <fmt/format.h>
#include <json.hpp>

namespace eform::cli {

std::string render_json(const Report& r, bool stable)
{
    nlohmann::ordered_json doc;
    doc["conventions"] = r.conventions;
    doc["seed"] = r.seed;
    doc["results"] = nlohmann::ordered_json::array();
    for (const auto& c : r.results) {
        nlohmann::ordered_json e;
        e["fixture"] = c.fixture;
        e["n"] = c.n;
        e["check"] = c.check;
        e["verdict"] = std::string(status_name(c.status));
        e["residuals"] = nlohmann::ordered_json::array();
        for (const auto& res : c.residuals)
            e["residuals"].push_back({{"label", res.label}, {"expression", res.expression}});
        if (!c.reason.empty())
            e["reason"] = c.reason;
        if (!stable)
            e["time_ms"] = c.time_ms;
        doc["results"].push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
}

std::string render_text(const Report& r, bool stable)
{
    std::string out = fmt::format("conventions {}\nseed {}\n", r.conventions, r.seed);
    for (const auto& c : r.results) {
        out += fmt::format("{} n={} {}: {}", c.fixture, c.n, c.check, status_name(c.status));
        if (!c.reason.empty())
            out += fmt::format(" ({})", c.reason);
        if (!stable)
            out += fmt::format(" [{:.1f} ms]", c.time_ms);
        out += "\n";
        for (const auto& res : c.residuals)
            out += fmt::format("    {} = {}\n", res.label, res.expression);
    }
    return out;
}

}  // namespace eform::cli
