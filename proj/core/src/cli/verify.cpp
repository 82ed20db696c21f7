#include <eform/cli/cli.hpp>

#include <ostream>

#include <CLI11.hpp>

#include <eform/conventions.hpp>

namespace eform::cli {

int run_verify(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of Lie algebroid and compatible E-n-form identities"};
    app.require_subcommand(1);
    CLI::App* verify = app.add_subcommand("verify", "Run checks on a manifest or a directory of manifests");
    std::string target;
    RunOptions opts;
    bool stable = false, as_json = false, as_text = false;
    verify->add_option("manifest", target, "Manifest file or directory")->required();
    verify->add_option("--check", opts.checks, "Check to run (repeatable); 'all' runs every check");
    verify->add_option("--seed", opts.seed, "Seed for randomized checks");
    verify->add_option("--samples", opts.samples, "Random samples for dirac and leibniz");
    verify->add_flag("--stable", stable, "Omit timing fields");
    auto* j = verify->add_flag("--json", as_json, "JSON report (default)");
    verify->add_flag("--text", as_text, "Text report")->excludes(j);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }
    for (const auto& c : opts.checks) {
        if (c != "all" && std::find(check_names().begin(), check_names().end(), c) == check_names().end()) {
            err << "unknown check '" << c << "'\n";
            return 2;
        }
    }
    Report report{kConventionFingerprint, opts.seed, {}};
    try {
        auto paths = find_manifests(target);
        if (paths.empty()) {
            err << target << ": no manifests found\n";
            return 2;
        }
        for (const auto& p : paths) {
            Manifest m = load_manifest(p);
            auto rs = run_checks(m, opts);
            report.results.insert(report.results.end(), rs.begin(), rs.end());
        }
    } catch (const ManifestError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        err << e.what() << "\n";
        return 2;
    }
    out << (as_text ? render_text(report, stable) : render_json(report, stable));
    return report.passed() ? 0 : 1;
}

}  // namespace eform::cli
