#include <eform/cli/cli.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include <eform/algebroid/poisson.hpp>
#include <eform/errors.hpp>
#include <eform/poly/parser.hpp>

namespace eform::cli {

using nlohmann::json;
using algebroid::Index;
using poly::Polynomial;

namespace {

struct Loader {
    std::string name;
    poly::VarList vars;

    [[noreturn]] void fail(const std::string& field, const std::string& what) const
    {
        throw ManifestError(fmt::format("{}: {}: {}", name, field, what));
    }

    Polynomial poly(const json& v, const std::string& field) const
    {
        if (!v.is_string() && !v.is_number_integer())
            fail(field, "expected a polynomial string");
        std::string src = v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
        try {
            return poly::parse_poly(src, vars);
        } catch (const ParseError& e) {
            fail(field, fmt::format("'{}': {}", src, e.what()));
        }
    }

    Index indices(std::string_view key, std::size_t length, std::size_t bound, const std::string& field) const
    {
        Index out;
        std::string token;
        std::stringstream ss{std::string(key)};
        while (std::getline(ss, token, ',')) {
            token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
            if (token.empty())
                fail(field, fmt::format("empty index in '{}'", key));
            std::size_t pos = 0;
            long long v = 0;
            try {
                v = std::stoll(token, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != token.size())
                fail(field, fmt::format("bad index '{}'", token));
            if (v < 1 || static_cast<std::size_t>(v) > bound)
                fail(field, fmt::format("index {} outside 1..{}", v, bound));
            out.push_back(static_cast<std::size_t>(v - 1));
        }
        if (out.size() != length)
            fail(field, fmt::format("key '{}' needs {} indices", key, length));
        return out;
    }

    const json& object(const json& parent, const std::string& key, const std::string& field) const
    {
        const json& v = parent.at(key);
        if (!v.is_object())
            fail(field, "expected an object");
        return v;
    }
};

// Sorts idx, returning the permutation sign, or 0 on a repeated index.
int sort_sign(Index& idx)
{
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
            if (idx[j] == idx[j + 1])
                return 0;
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
        }
    for (std::size_t j = 0; j + 1 < idx.size(); ++j)
        if (idx[j] == idx[j + 1])
            return 0;
    return sign;
}

// Collects antisymmetric entries; both orders of one index set must agree.
class AltCollector {
public:
    AltCollector(const Loader& l, std::string field) : l_(l), field_(std::move(field)) {}

    void add(Index idx, const Polynomial& value, const std::string& key)
    {
        int s = sort_sign(idx);
        if (s == 0) {
            if (!value.is_zero())
                l_.fail(field_, fmt::format("repeated index in '{}' with nonzero value", key));
            return;
        }
        Polynomial v = s > 0 ? value : -value;
        auto [it, fresh] = entries_.emplace(idx, v);
        if (!fresh && !(it->second == v))
            l_.fail(field_, fmt::format("'{}' conflicts with an earlier entry under antisymmetry", key));
    }

    const std::map<Index, Polynomial>& entries() const { return entries_; }

private:
    const Loader& l_;
    std::string field_;
    std::map<Index, Polynomial> entries_;
};

template <class Tag>
algebroid::AltTensor<Tag> alt_tensor(const Loader& l, const json& obj, std::size_t dim, std::size_t arity,
                                     const std::string& field)
{
    if (!obj.is_object())
        l.fail(field, "expected an object of index keys");
    AltCollector col(l, field);
    for (const auto& [key, v] : obj.items())
        col.add(l.indices(key, arity, dim, field), l.poly(v, fmt::format("{}[{}]", field, key)), key);
    algebroid::AltTensor<Tag> out(l.vars, dim, arity);
    for (const auto& [idx, v] : col.entries())
        out.set(idx, v);
    return out;
}

algebroid::LieAlgebroidData explicit_algebroid(const Loader& l, const json& a, const std::vector<std::string>& base)
{
    if (!a.contains("rank") || !a["rank"].is_number_unsigned())
        l.fail("algebroid.rank", "expected a nonnegative integer");
    std::size_t rank = a["rank"].get<std::size_t>();
    algebroid::LieAlgebroidData d(base, rank);
    if (a.contains("anchor")) {
        const json& anchor = l.object(a, "anchor", "algebroid.anchor");
        for (const auto& [key, v] : anchor.items()) {
            std::string field = fmt::format("algebroid.anchor[{}]", key);
            Index ai = l.indices(key, 2, std::max(rank, base.size()), field);
            if (ai[0] >= rank || ai[1] >= base.size())
                l.fail(field, "anchor keys are 'a,i' with a <= rank and i <= dim");
            d.set_anchor(ai[0], ai[1], l.poly(v, field));
        }
    }
    if (a.contains("structure")) {
        const json& st = l.object(a, "structure", "algebroid.structure");
        std::vector<AltCollector> cols;
        for (std::size_t c = 0; c < rank; ++c)
            cols.emplace_back(l, "algebroid.structure");
        for (const auto& [key, v] : st.items()) {
            std::string field = fmt::format("algebroid.structure[{}]", key);
            Index cab = l.indices(key, 3, rank, field);
            cols[cab[0]].add({cab[1], cab[2]}, l.poly(v, field), key);
        }
        for (std::size_t c = 0; c < rank; ++c)
            for (const auto& [ab, v] : cols[c].entries())
                d.set_structure(c, ab[0], ab[1], v);
    }
    return d;
}

moment::EConnection connection(const Loader& l, const json& c, std::size_t dim, std::size_t rank)
{
    moment::Connection base(l.vars, rank);
    if (c.contains("gamma")) {
        for (const auto& [key, v] : l.object(c, "gamma", "connection.gamma").items()) {
            std::string field = fmt::format("connection.gamma[{}]", key);
            Index bia = l.indices(key, 3, std::max(dim, rank), field);
            if (bia[0] >= rank || bia[1] >= dim || bia[2] >= rank)
                l.fail(field, "gamma keys are 'b,i,a' with a, b <= rank and i <= dim");
            base.set_gamma(bia[0], bia[1], bia[2], l.poly(v, field));
        }
    }
    moment::EConnection out(base);
    if (c.contains("chi")) {
        for (const auto& [key, v] : l.object(c, "chi", "connection.chi").items()) {
            std::string field = fmt::format("connection.chi[{}]", key);
            Index cab = l.indices(key, 3, rank, field);
            out.set_chi(cab[0], cab[1], cab[2], l.poly(v, field));
        }
    }
    return out;
}

algebroid::MixedForm mixed(const Loader& l, const json& obj, std::size_t dim, std::size_t rank, std::size_t m,
                           std::size_t k, const std::string& field)
{
    if (!obj.is_object())
        l.fail(field, "expected an object of 'a..;i..' keys");
    std::map<std::pair<Index, Index>, Polynomial> entries;
    for (const auto& [key, v] : obj.items()) {
        std::string f = fmt::format("{}[{}]", field, key);
        auto semi = key.find(';');
        if (semi == std::string::npos)
            l.fail(f, "mixed keys separate E and base indices with ';'");
        Index e = m == 0 && semi == 0 ? Index{} : l.indices(key.substr(0, semi), m, rank, f);
        std::string rest = key.substr(semi + 1);
        Index b = k == 0 && rest.empty() ? Index{} : l.indices(rest, k, dim, f);
        if ((m == 0) != e.empty() || (k == 0) != b.empty())
            l.fail(f, fmt::format("expected {} E and {} base indices", m, k));
        Polynomial value = l.poly(v, f);
        int se = sort_sign(e), sb = sort_sign(b);
        if (se == 0 || sb == 0) {
            if (!value.is_zero())
                l.fail(f, "repeated index with nonzero value");
            continue;
        }
        if (se * sb < 0)
            value = -value;
        auto [it, fresh] = entries.emplace(std::pair{e, b}, value);
        if (!fresh && !(it->second == value))
            l.fail(f, "conflicts with an earlier entry under antisymmetry");
    }
    algebroid::MixedForm out(l.vars, rank, m, k);
    for (const auto& [key, v] : entries)
        out.set(key.first, key.second, v);
    return out;
}

}  // namespace

Manifest parse_manifest(std::string_view text, const std::string& name)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ManifestError(fmt::format("{}: JSON error at byte {}: {}", name, e.byte, e.what()));
    }
    Loader l{name, nullptr};
    if (!doc.is_object())
        l.fail("document", "expected a JSON object");
    try {
        Manifest m;
        m.name = doc.value("name", name);
        if (!doc.contains("base") || !doc["base"].is_array())
            l.fail("base", "expected a list of coordinate names");
        std::vector<std::string> base = doc["base"].get<std::vector<std::string>>();
        if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<int>() < 1)
            l.fail("n", "expected an integer n >= 1");
        m.n = doc["n"].get<int>();
        std::size_t n = static_cast<std::size_t>(m.n);

        if (!doc.contains("algebroid") || !doc["algebroid"].is_object())
            l.fail("algebroid", "expected an object");
        const json& a = doc["algebroid"];
        m.algebroid_type = a.value("type", "explicit");
        algebroid::LieAlgebroidData probe(base, 0);
        l.vars = probe.vars();
        std::size_t dim = base.size();
        if (doc.contains("omega"))
            m.omega = alt_tensor<algebroid::BaseTag>(l, doc["omega"], dim, n + 1, "omega");
        if (m.algebroid_type == "explicit") {
            m.data = explicit_algebroid(l, a, base);
        } else if (m.algebroid_type == "tangent") {
            m.data = algebroid::tangent_algebroid(base);
        } else if (m.algebroid_type == "poisson" || m.algebroid_type == "twisted-poisson") {
            if (!a.contains("pi"))
                l.fail("algebroid.pi", "missing bivector");
            auto pi = alt_tensor<algebroid::MultiTag>(l, a["pi"], dim, 2, "algebroid.pi");
            if (m.algebroid_type == "poisson") {
                m.data = algebroid::poisson_algebroid(pi);
            } else {
                if (!m.omega || m.n != 2)
                    l.fail("algebroid", "twisted-poisson needs n = 2 and omega as the 3-form H");
                m.data = algebroid::twisted_poisson_algebroid(pi, *m.omega);
            }
        } else {
            l.fail("algebroid.type", fmt::format("unknown type '{}'", m.algebroid_type));
        }
        l.vars = m.data.vars();
        if (m.omega) {
            algebroid::BaseForm w(l.vars, dim, n + 1);
            for (const auto& [k, v] : m.omega->components())
                w.set(k, v.embed(l.vars));
            m.omega = w;
        }
        std::size_t rank = m.data.rank();
        if (doc.contains("J"))
            m.j = alt_tensor<algebroid::ETag>(l, doc["J"], rank, n, "J");
        if (doc.contains("mu"))
            m.mu = alt_tensor<algebroid::ETag>(l, doc["mu"], rank, 1, "mu");
        if (doc.contains("connection"))
            m.connection = connection(l, l.object(doc, "connection", "connection"), dim, rank);
        if (doc.contains("homotopy")) {
            const json& h = doc["homotopy"];
            if (!h.is_array() || h.size() != n)
                l.fail("homotopy", fmt::format("expected a list mu_0 .. mu_{} of {} mixed forms", n - 1, n));
            for (std::size_t k = 0; k < n; ++k)
                m.homotopy.push_back(mixed(l, h[k], dim, rank, n - k, k, fmt::format("homotopy[{}]", k)));
        }
        if (doc.contains("checks")) {
            if (!doc["checks"].is_array())
                l.fail("checks", "expected a list of check names");
            for (const auto& c : doc["checks"]) {
                if (!c.is_string())
                    l.fail("checks", "expected a list of check names");
                std::string s = c.get<std::string>();
                if (s != "all" && std::find(check_names().begin(), check_names().end(), s) == check_names().end())
                    l.fail("checks", fmt::format("unknown check '{}'", s));
                m.checks.push_back(s);
            }
        }
        return m;
    } catch (const json::exception& e) {
        throw ManifestError(fmt::format("{}: {}", name, e.what()));
    } catch (const ShapeError& e) {
        throw ManifestError(fmt::format("{}: {}", name, e.what()));
    }
}

Manifest load_manifest(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ManifestError(fmt::format("{}: cannot read file", path.string()));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_manifest(ss.str(), path.stem().string());
}

std::vector<std::filesystem::path> find_manifests(const std::filesystem::path& path)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(path))
        return {path};
    std::vector<fs::path> out;
    for (const auto& e : fs::recursive_directory_iterator(path))
        if (e.is_regular_file() && e.path().extension() == ".manifest")
            out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace eform::cli
