/*
 * minf_cli.cpp
 * ------------
 * Command-line front end. Subcommands: zeta, charpoly, jordan, spectrum,
 * hodge, ehrhart, selfcheck.
 *
 * Exit codes:
 *   0  success
 *   1  hypothesis failure (non-convenient support or refuted non-degeneracy)
 *   2  parse error (polynomial text, JSON input, or flag values)
 *   3  indeterminate result when strictness was requested
 */
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "minf/json_io.hpp"
#include "minf/parse.hpp"

namespace {

struct CommonOpts {
    std::string poly;
    std::string support_json;
    std::string format = "text";
    std::string eigenvalue;
    bool assume_nondegenerate = true;  // false when --strict-nondegenerate
    bool strict = false;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_eigenvalue) {
    cmd->add_option("--poly", o.poly, "Polynomial text, e.g. \"x^2+y^3\"");
    cmd->add_option("--support-json", o.support_json,
                    "Path to a JSON file with {n, support, coefficients?}");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--assume-nondegenerate,!--strict-nondegenerate",
                  o.assume_nondegenerate,
                  "Assume non-degeneracy where it cannot be verified (default); "
                  "--strict-nondegenerate demands verification");
    cmd->add_flag("--strict", o.strict,
                  "Exit with status 3 when results are indeterminate");
    cmd->add_option("--jobs", o.jobs,
                    "Worker count (results are identical for any value)");
    if (with_eigenvalue)
        cmd->add_option("--eigenvalue", o.eigenvalue,
                        "Restrict output to one eigenvalue, as a reduced "
                        "fraction k/d of a full turn");
}

struct CliError {
    int code;
    std::string message;
};

minf::SupportSpec load_spec(const CommonOpts& o) {
    if (o.poly.empty() == o.support_json.empty())
        throw CliError{2, "exactly one of --poly and --support-json is required"};
    try {
        if (!o.poly.empty()) return minf::parse_polynomial(o.poly);
        std::ifstream in(o.support_json);
        if (!in) throw CliError{2, "cannot open " + o.support_json};
        std::ostringstream buf;
        buf << in.rdbuf();
        return minf::support_spec_from_json(buf.str());
    } catch (const CliError&) {
        throw;
    } catch (const std::exception& ex) {
        throw CliError{2, ex.what()};
    }
}

// Builds the Newton data and enforces the hypotheses shared by every
// invariant subcommand.
minf::NewtonAtInfinity prepare(const CommonOpts& o) {
    const minf::SupportSpec spec = load_spec(o);
    minf::NewtonAtInfinity newton = minf::build_gamma_infinity(spec);
    if (!minf::check_convenient(newton))
        throw CliError{1, "the support is not convenient (some axis is missed)"};
    const auto statuses = minf::check_nondegenerate_partial(newton);
    bool any_assumed = false;
    for (const auto s : statuses) {
        if (s == minf::NondegStatus::refuted)
            throw CliError{1, "non-degeneracy at infinity is refuted on a face"};
        if (s == minf::NondegStatus::assumed) any_assumed = true;
    }
    if (!o.assume_nondegenerate && any_assumed)
        throw CliError{3, "non-degeneracy could not be verified on every face"};
    return newton;
}

int run_selfcheck(const CommonOpts& o, std::uint64_t seed, int instances) {
    std::vector<minf::CheckReport> all;
    const auto run_one = [&all](const minf::SupportSpec& spec) {
        const auto reports = minf::cross_check_suite(spec);
        all.insert(all.end(), reports.begin(), reports.end());
    };
    for (const std::string& fixture :
         {"x+y", "x^2+y^3", "x^3+y^3+x^2*y^2"})
        run_one(minf::parse_polynomial(fixture));
    for (int i = 0; i < instances; ++i) {
        const int n = 2 + static_cast<int>(i % 2);
        run_one(minf::random_convenient_support(n, 5, seed + static_cast<std::uint64_t>(i)));
    }
    bool pass = true;
    for (const auto& r : all) pass = pass && r.pass;
    if (o.format == "json")
        std::cout << minf::reports_to_json(all) << "\n";
    else
        std::cout << minf::reports_to_text(all)
                  << (pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monodromy-at-infinity invariants of convenient polynomials "
                 "non-degenerate at infinity"};
    app.require_subcommand(1);

    CommonOpts zeta_o, charpoly_o, jordan_o, spectrum_o, hodge_o, ehrhart_o,
        selfcheck_o;
    std::uint64_t seed = 1;
    int instances = 25;

    auto* zeta_cmd = app.add_subcommand("zeta", "Zeta function at infinity");
    add_common(zeta_cmd, zeta_o, false);
    auto* charpoly_cmd = app.add_subcommand(
        "charpoly", "Characteristic polynomial of the top monodromy at infinity");
    add_common(charpoly_cmd, charpoly_o, false);
    auto* jordan_cmd =
        app.add_subcommand("jordan", "Jordan block table of the top monodromy");
    add_common(jordan_cmd, jordan_o, true);
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum at infinity");
    add_common(spectrum_cmd, spectrum_o, false);
    auto* hodge_cmd = app.add_subcommand(
        "hodge", "Equivariant Hodge-Deligne table of the class at infinity");
    add_common(hodge_cmd, hodge_o, false);
    auto* ehrhart_cmd = app.add_subcommand(
        "ehrhart", "Twisted Ehrhart tables per face at infinity");
    add_common(ehrhart_cmd, ehrhart_o, false);
    auto* selfcheck_cmd =
        app.add_subcommand("selfcheck", "Run the built-in cross-check suite");
    selfcheck_cmd->add_option("--seed", seed, "Random seed");
    selfcheck_cmd->add_option("--instances", instances,
                              "Number of random instances");
    selfcheck_cmd->add_option("--format", selfcheck_o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    selfcheck_cmd->add_option("--jobs", selfcheck_o.jobs, "Worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (zeta_cmd->parsed()) {
            const auto newton = prepare(zeta_o);
            const auto z = minf::zeta_at_infinity(newton);
            std::cout << (zeta_o.format == "json" ? minf::zeta_to_json(z)
                                                  : minf::zeta_to_text(z))
                      << "\n";
        } else if (charpoly_cmd->parsed()) {
            const auto newton = prepare(charpoly_o);
            const auto cp = minf::char_poly_from_zeta(
                minf::zeta_at_infinity(newton), newton.spec.n);
            std::cout << (charpoly_o.format == "json" ? minf::zeta_to_json(cp)
                                                      : minf::zeta_to_text(cp))
                      << "\n";
        } else if (jordan_cmd->parsed()) {
            const auto newton = prepare(jordan_o);
            minf::JordanTable table = minf::assemble_jordan_table(newton);
            if (!jordan_o.eigenvalue.empty()) {
                const auto slash = jordan_o.eigenvalue.find('/');
                if (slash == std::string::npos)
                    throw CliError{2, "--eigenvalue must be of the form k/d"};
                minf::RootOfUnity alpha(
                    minf::Int(jordan_o.eigenvalue.substr(0, slash)),
                    minf::Int(jordan_o.eigenvalue.substr(slash + 1)));
                minf::JordanTable filtered;
                if (auto it = table.eigenvalues.find(alpha);
                    it != table.eigenvalues.end())
                    filtered.eigenvalues.insert(*it);
                table = std::move(filtered);
            }
            bool indeterminate = false;
            for (const auto& [alpha, entry] : table.eigenvalues)
                if (!entry.complete) indeterminate = true;
            std::cout << (jordan_o.format == "json" ? minf::jordan_to_json(table)
                                                    : minf::jordan_to_text(table));
            if (jordan_o.format == "json") std::cout << "\n";
            if (indeterminate && jordan_o.strict)
                throw CliError{3, "some Jordan block counts are indeterminate"};
        } else if (spectrum_cmd->parsed()) {
            const auto newton = prepare(spectrum_o);
            const auto sp = minf::spectrum_via_hodge(newton);
            std::cout << (spectrum_o.format == "json"
                              ? minf::spectrum_to_json(sp)
                              : minf::spectrum_to_text(sp))
                      << "\n";
        } else if (hodge_cmd->parsed()) {
            const auto newton = prepare(hodge_o);
            const auto h = minf::hodge_class_at_infinity(newton);
            std::cout << (hodge_o.format == "json" ? minf::hodge_to_json(h)
                                                   : minf::hodge_to_text(h));
            if (hodge_o.format == "json") std::cout << "\n";
            if (!h.full && hodge_o.strict)
                throw CliError{3, "full table unavailable: some cone polytope "
                                  "is not pseudo-prime"};
        } else if (ehrhart_cmd->parsed()) {
            const auto newton = prepare(ehrhart_o);
            std::cout << (ehrhart_o.format == "json"
                              ? minf::ehrhart_to_json(newton) + "\n"
                              : minf::ehrhart_to_text(newton));
        } else if (selfcheck_cmd->parsed()) {
            return run_selfcheck(selfcheck_o, seed, instances);
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const minf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const minf::JsonError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const minf::NotConvenient& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
