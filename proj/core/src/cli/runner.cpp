#include <eform/cli/cli.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include <fmt/format.h>

#include <eform/compat/compat.hpp>
#include <eform/errors.hpp>
#include <eform/moment/moment.hpp>
#include <eform/qgraded/qgraded.hpp>
#include <eform/vinogradov/vinogradov.hpp>

namespace eform::cli {

namespace {

using compat::PreNPlectic;

struct Outcome {
    Status status;
    Verdict verdict;
    std::string reason;
};

Outcome skip(std::string reason) { return {Status::skipped, {}, std::move(reason)}; }
Outcome judge(Verdict v) { return {v.passed ? Status::pass : Status::fail, std::move(v), {}}; }

// The four formulations of compatibility fail together on a non-closed form.
std::optional<Outcome> needs_closed(const Manifest& m)
{
    Verdict c = compat::closure(*m.omega);
    if (c.passed)
        return std::nullopt;
    return judge(c);
}

std::optional<Outcome> needs(const Manifest& m, bool omega, bool j)
{
    if (omega && !m.omega)
        return skip("manifest has no omega");
    if (j && !m.j)
        return skip("manifest has no J");
    return std::nullopt;
}

moment::EConnection connection_or_trivial(const Manifest& m)
{
    if (m.connection)
        return *m.connection;
    return moment::EConnection(moment::Connection(m.data.vars(), m.data.rank()));
}

vinogradov::SampleOptions samples(const RunOptions& o) { return {o.samples, o.seed}; }

using CheckFn = std::function<Outcome(const Manifest&, const RunOptions&)>;

const std::map<std::string, CheckFn>& registry()
{
    static const std::map<std::string, CheckFn> table{
        {"algebroid", [](const Manifest& m, const RunOptions&) { return judge(algebroid::check_lie_algebroid(m.data)); }},
        {"compatible",
         [](const Manifest& m, const RunOptions&) {
             if (auto s = needs(m, true, true))
                 return *s;
             if (auto c = needs_closed(m))
                 return *c;
             return judge(compat::check_compatible(*m.j, PreNPlectic(*m.omega, m.n), m.data));
         }},
        {"consistency",
         [](const Manifest& m, const RunOptions&) {
             if (auto s = needs(m, true, false))
                 return *s;
             return judge(compat::check_consistency(*m.omega, m.data));
         }},
        {"dirac",
         [](const Manifest& m, const RunOptions& o) {
             if (auto s = needs(m, true, true))
                 return *s;
             if (auto c = needs_closed(m))
                 return *c;
             return judge(vinogradov::check_higher_dirac(*m.j, PreNPlectic(*m.omega, m.n), m.data, samples(o)));
         }},
        {"leibniz",
         [](const Manifest& m, const RunOptions& o) {
             if (auto s = needs(m, true, false))
                 return *s;
             return judge(vinogradov::check_leibniz(*m.omega, m.data, samples(o)));
         }},
        {"momentum-map",
         [](const Manifest& m, const RunOptions&) {
             if (!m.mu || !m.omega || m.n != 1)
                 return skip("needs mu, omega and n = 1");
             if (!m.data.constant_structure())
                 return skip("not an action algebroid");
             if (auto c = needs_closed(m))
                 return *c;
             return judge(moment::check_momentum_map(*m.mu, m.data, PreNPlectic(*m.omega, 1)));
         }},
        {"momentum-section",
         [](const Manifest& m, const RunOptions&) {
             if (!m.mu || !m.omega || m.n != 1)
                 return skip("needs mu, omega and n = 1");
             if (auto c = needs_closed(m))
                 return *c;
             return judge(moment::check_momentum_section(*m.mu, connection_or_trivial(m).base(),
                                                         PreNPlectic(*m.omega, 1), m.data));
         }},
        {"homotopy-section",
         [](const Manifest& m, const RunOptions&) {
             if (m.homotopy.empty() || !m.omega)
                 return skip("needs homotopy and omega");
             if (auto c = needs_closed(m))
                 return *c;
             return judge(moment::check_homotopy_momentum_section(m.homotopy, connection_or_trivial(m),
                                                                  PreNPlectic(*m.omega, m.n), m.data));
         }},
        {"q-nilpotent",
         [](const Manifest& m, const RunOptions&) {
             if (auto s = needs(m, true, true))
                 return *s;
             if (auto c = needs_closed(m))
                 return *c;
             Verdict v;
             v.absorb(algebroid::check_lie_algebroid(m.data), "algebroid:");
             v.absorb(qgraded::check_q_comp_nilpotent(m.data, *m.j, PreNPlectic(*m.omega, m.n)));
             return judge(v);
         }},
        {"twisted-qp",
         [](const Manifest& m, const RunOptions&) {
             if (auto s = needs(m, true, true))
                 return *s;
             if (auto c = needs_closed(m))
                 return *c;
             return judge(qgraded::check_twisted_qp(m.data, *m.j, *m.omega));
         }},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names{"algebroid",    "compatible",       "consistency",
                                                "dirac",        "leibniz",          "momentum-map",
                                                "momentum-section", "homotopy-section", "q-nilpotent",
                                                "twisted-qp"};
    return names;
}

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skipped:
        return "skipped";
    }
    return "skipped";
}

CheckResult run_check(const Manifest& m, const std::string& check, const RunOptions& opts)
{
    auto it = registry().find(check);
    if (it == registry().end())
        throw ManifestError(fmt::format("unknown check '{}'", check));
    CheckResult r{m.name, m.n, check, Status::skipped, {}, {}, 0};
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = it->second(m, opts);
    } catch (const ShapeError& e) {
        o = {Status::fail, {}, {}};
        o.verdict.fail("shape", e.what());
    } catch (const PreconditionError& e) {
        o = {Status::fail, {}, {}};
        o.verdict.fail("precondition", e.what());
    }
    r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.status = o.status;
    r.residuals = std::move(o.verdict.residuals);
    r.reason = std::move(o.reason);
    return r;
}

std::vector<CheckResult> run_checks(const Manifest& m, const RunOptions& opts)
{
    std::vector<std::string> wanted = opts.checks.empty() ? m.checks : opts.checks;
    if (wanted.empty() || std::find(wanted.begin(), wanted.end(), "all") != wanted.end())
        wanted = check_names();
    std::vector<CheckResult> out;
    for (const auto& name : check_names())
        if (std::find(wanted.begin(), wanted.end(), name) != wanted.end())
            out.push_back(run_check(m, name, opts));
    for (const auto& name : wanted)
        if (name != "all" && !registry().contains(name))
            throw ManifestError(fmt::format("unknown check '{}'", name));
    return out;
}

bool Report::passed() const
{
    return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::fail; });
}

}  // namespace eform::cli
