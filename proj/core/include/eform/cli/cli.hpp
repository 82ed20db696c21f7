#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <eform/algebroid/data.hpp>
#include <eform/algebroid/mixed.hpp>
#include <eform/moment/connection.hpp>
#include <eform/verdict.hpp>

namespace eform::cli {

// Malformed manifest: bad JSON, unknown field value, index out of range,
// antisymmetry conflict or arity mismatch. The message names the file and field.
class ManifestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Manifest {
    std::string name;
    int n = 1;
    std::string algebroid_type;
    algebroid::LieAlgebroidData data{std::vector<std::string>{}, 0};
    std::optional<algebroid::BaseForm> omega;
    std::optional<algebroid::EForm> j;
    std::optional<algebroid::EForm> mu;
    std::optional<moment::EConnection> connection;
    std::vector<algebroid::MixedForm> homotopy;
    std::vector<std::string> checks;
};

Manifest parse_manifest(std::string_view text, const std::string& name);
Manifest load_manifest(const std::filesystem::path& path);
// A single file, or every *.manifest below a directory in sorted path order.
std::vector<std::filesystem::path> find_manifests(const std::filesystem::path& path);

// Every check name, in report order; "all" expands to this list.
const std::vector<std::string>& check_names();

enum class Status { pass, fail, skipped };
std::string_view status_name(Status s);

struct CheckResult {
    std::string fixture;
    int n = 0;
    std::string check;
    Status status = Status::skipped;
    std::vector<Residual> residuals;
    std::string reason;
    double time_ms = 0;
};

struct RunOptions {
    std::vector<std::string> checks;  // empty: the manifest's list, else all
    std::uint64_t seed = 7;
    int samples = 50;
};

// Throws ManifestError for unknown check names.
CheckResult run_check(const Manifest& m, const std::string& check, const RunOptions& opts);
std::vector<CheckResult> run_checks(const Manifest& m, const RunOptions& opts);

struct Report {
    std::string conventions;
    std::uint64_t seed = 7;
    std::vector<CheckResult> results;
    bool passed() const;
};

std::string render_json(const Report& r, bool stable);
std::string render_text(const Report& r, bool stable);

// verify <manifest|dir> [--check NAME]... [--seed N] [--stable] [--json|--text]
// Returns 0 if every check passes, 1 on any failure, 2 on usage or parse errors.
int run_verify(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eform::cli
