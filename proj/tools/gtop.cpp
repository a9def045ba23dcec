// gtop: command-line front door for the finite-space gamma-operation engine.
//
// Exit codes: 0 = property/implication holds (or enumeration completed),
//             1 = fails / counterexample found (witness printed),
//             2 = input or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gtop/gtop.hpp"

namespace {

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;

std::optional<gtop::ClosedMode> parse_mode(const std::string& text) {
    if (text == "tau") return gtop::ClosedMode::TauClosed;
    if (text == "gamma") return gtop::ClosedMode::GammaClosed;
    return std::nullopt;
}

std::optional<gtop::TraceConvention> parse_convention(const std::string& text) {
    if (text == "max") return gtop::TraceConvention::MaxTrace;
    if (text == "min") return gtop::TraceConvention::MinTrace;
    return std::nullopt;
}

gtop::SpaceFile load_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gtop::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return gtop::parse_space_file(buf.str());
}

int run_check(const std::string& path, const std::string& property, gtop::ClosedMode mode) {
    gtop::SpaceFile file = load_space_file(path);
    const gtop::Space& space = file.space;
    const gtop::Topology& t = space.topology;

    if (property.empty()) {
        std::cout << "space " << space.name << ": " << t.carrier() << " points, "
                  << t.opens().size() << " opens\n";
        std::cout << "tau       = " << t.family_to_string(t.opens()) << "\n";
        std::cout << "gamma     =";
        for (const auto& [open, value] : space.gamma.entries()) {
            std::cout << " " << t.set_to_string(open) << "->" << t.set_to_string(value);
        }
        std::cout << "\n";
        std::cout << "tau_gamma = " << t.family_to_string(gamma_open_family(space)) << "\n";
        const char* names[] = {"regular-op", "strictly-regular-op", "open-op",
                               "gamma-t1",   "gamma-t2",            "gamma0-compact",
                               "gs-regular", "gs-normal"};
        for (const char* name : names) {
            auto atom = gtop::PropertyAtom::parse(name, mode);
            gtop::Verdict v = atom->evaluate(space);
            std::cout << atom->name() << " = " << describe(v, t.point_names()) << "\n";
        }
        return exit_holds;
    }

    auto atom = gtop::PropertyAtom::parse(property, mode);
    if (!atom) {
        std::cerr << "unknown property '" << property << "'\n";
        return exit_usage;
    }
    gtop::Verdict v = atom->evaluate(space);
    std::cout << space.name << ": " << atom->name() << " = " << describe(v, t.point_names())
              << "\n";
    return v.holds ? exit_holds : exit_fails;
}

int run_enumerate(int points, bool count_only) {
    const std::vector<gtop::Topology> topologies = gtop::enumerate_topologies(points);
    if (count_only) {
        std::cout << topologies.size() << "\n";
        return exit_holds;
    }
    for (std::size_t i = 0; i < topologies.size(); ++i) {
        std::cout << "#" << i << " " << topologies[i].family_to_string(topologies[i].opens())
                  << "\n";
    }
    std::cout << topologies.size() << " topologies on " << points << " points\n";
    return exit_holds;
}

int run_falsify(int points, const std::string& ops, const std::string& expr,
                gtop::ClosedMode mode, int workers) {
    auto imp = gtop::Implication::parse(expr, mode);
    if (!imp) {
        std::cerr << "cannot parse implication '" << expr
                  << "' (grammar: atom [& atom]* => atom)\n";
        return exit_usage;
    }
    gtop::Scope scope;
    scope.max_points = points;
    scope.workers = workers;
    if (ops == "all") {
        scope.source = gtop::OperationSource::AllTables;
    } else if (ops != "catalog") {
        std::cerr << "--ops must be 'catalog' or 'all'\n";
        return exit_usage;
    }
    gtop::LabRow row = gtop::check_implication(*imp, scope);
    gtop::LabReport report;
    report.title = "falsify " + row.name;
    report.rows.push_back(row);
    std::cout << report.render(false);
    if (row.holds()) {
        std::cout << "no counterexample, " << row.total() << " instances\n";
        return exit_holds;
    }
    return exit_fails;
}

int run_theorems(int points, const std::optional<gtop::ClosedMode>& mode,
                 const std::optional<gtop::TraceConvention>& conv, int workers, bool timings) {
    gtop::Scope scope;
    scope.max_points = points;
    scope.workers = workers;
    gtop::LabReport report = gtop::run_all_theorems(scope, mode, conv);
    std::cout << report.render(timings);
    for (const gtop::LabRow& row : report.rows) {
        if (!row.holds()) return exit_fails;
    }
    return exit_holds;
}

int run_paper_examples() {
    gtop::LabReport report = gtop::run_paper_examples();
    std::cout << report.render(false);
    for (const gtop::LabRow& row : report.rows) {
        if (!row.holds()) return exit_fails;
    }
    return exit_holds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-space gamma-operation verification engine"};
    app.require_subcommand(1);

    std::string file, property, closed_mode = "tau", theorems_mode, trace_convention,
                ops = "catalog", expr;
    int points = 3, workers = 1;
    bool count_only = false, no_timings = false;

    CLI::App* check = app.add_subcommand("check", "evaluate a property of a space file");
    check->add_option("file", file, "space description file")->required();
    check->add_option("--property", property, "property atom to check");
    check->add_option("--closed-mode", closed_mode, "closed-set family: tau|gamma");
    check->add_option("--trace-convention", trace_convention, "subspace convention: max|min");

    CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate all topologies on N points");
    enumerate->add_option("--points", points, "carrier size (1..4)")->required();
    enumerate->add_flag("--count-only", count_only, "print only the count");

    CLI::App* falsify = app.add_subcommand("falsify", "scan for a counterexample to an implication");
    falsify->add_option("--points", points, "max carrier size");
    falsify->add_option("--ops", ops, "operation source: catalog|all");
    falsify->add_option("--implication", expr, "e.g. \"gamma-t2 => gamma-t1\"")->required();
    falsify->add_option("--closed-mode", closed_mode, "default mode for gs-* atoms");
    falsify->add_option("--workers", workers, "parallel workers");

    CLI::App* theorems = app.add_subcommand("theorems", "run the full theorem lab");
    theorems->add_option("--points", points, "max carrier size");
    theorems->add_option("--closed-mode", theorems_mode, "restrict to one closed mode");
    theorems->add_option("--trace-convention", trace_convention, "restrict to one convention");
    theorems->add_option("--workers", workers, "parallel workers");
    theorems->add_flag("--no-timings", no_timings, "omit the ms column (for golden comparisons)");

    CLI::App* paper = app.add_subcommand("paper-examples", "re-derive the bundled worked examples");
    (void)paper;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_holds : exit_usage;
    }

    try {
        if (check->parsed()) {
            auto mode = parse_mode(closed_mode);
            if (!mode) {
                std::cerr << "--closed-mode must be tau or gamma\n";
                return exit_usage;
            }
            return run_check(file, property, *mode);
        }
        if (enumerate->parsed()) return run_enumerate(points, count_only);
        if (falsify->parsed()) {
            auto mode = parse_mode(closed_mode);
            if (!mode) {
                std::cerr << "--closed-mode must be tau or gamma\n";
                return exit_usage;
            }
            return run_falsify(points, ops, expr, *mode, workers);
        }
        if (theorems->parsed()) {
            std::optional<gtop::ClosedMode> mode;
            if (!theorems_mode.empty()) {
                mode = parse_mode(theorems_mode);
                if (!mode) {
                    std::cerr << "--closed-mode must be tau or gamma\n";
                    return exit_usage;
                }
            }
            std::optional<gtop::TraceConvention> conv;
            if (!trace_convention.empty()) {
                conv = parse_convention(trace_convention);
                if (!conv) {
                    std::cerr << "--trace-convention must be max or min\n";
                    return exit_usage;
                }
            }
            return run_theorems(points, mode, conv, workers, !no_timings);
        }
        return run_paper_examples();
    } catch (const gtop::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const gtop::ScopeError& e) {
        std::cerr << "scope error: " << e.what() << "\n";
        return exit_usage;
    } catch (const gtop::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
