// Command-line front end: run individual verifiers or the whole suite,
// print the candidate table, invariant packs and cusp-count bounds.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <triscroll/triscroll.hpp>

namespace {

int finish(const triscroll::RunResult& result, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << result.output;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open '" << output_path << "' for writing\n";
            return 2;
        }
        out << result.output;
    }
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    using namespace triscroll;

    CLI::App app{"exact verification suite for double and triple solids with scroll structures"};
    app.require_subcommand(1);
    app.fallthrough(); // --format/--output may follow the subcommand

    std::string format_name = "text";
    if (const char* env = std::getenv("TRISCROLL_FORMAT"))
        format_name = env;
    std::string output_path;
    app.add_option("--format", format_name, "output format: text, json, csv, md")
        ->capture_default_str();
    app.add_option("-o,--output", output_path, "write the report to a file instead of stdout");

    RunConfig cfg;

    auto* table1 = app.add_subcommand("table1", "the 12 candidate cases over P^2 with filters");

    std::string verify_id = "all";
    auto* verify = app.add_subcommand("verify", "run one verifier (or all) and report verdicts");
    verify->add_option("id", verify_id, "verifier id, or 'all'")->capture_default_str();
    verify->add_option("--window", cfg.window, "Reider lattice search window (>= 1)")
        ->capture_default_str();

    long long b1 = 0, b2 = 0, b = 0, c = 0, m = 0, n = 0;
    auto* invariants =
        app.add_subcommand("invariants", "triple-plane invariant pack from (b1,b2), (b,c) or (m,n)");
    auto* opt_b1 = invariants->add_option("--b1", b1, "first Chern number of the Tschirnhaus bundle");
    auto* opt_b2 = invariants->add_option("--b2", b2, "second Chern number");
    auto* opt_b = invariants->add_option("--b", b, "branch-curve degree");
    auto* opt_c = invariants->add_option("--c", c, "cusp count");
    auto* opt_m = invariants->add_option("--m", m, "decomposable summand degree m");
    auto* opt_n = invariants->add_option("--n", n, "decomposable summand degree n");
    opt_b1->needs(opt_b2);
    opt_b2->needs(opt_b1);
    opt_b->needs(opt_c);
    opt_c->needs(opt_b);
    opt_m->needs(opt_n);
    opt_n->needs(opt_m);

    auto* bounds = app.add_subcommand("bounds", "cusp-count bounds for branch degree b and s = c2(E)");
    bounds->add_option("--b", cfg.bounds_b, "branch-curve degree")->required();
    bounds->add_option("--s", cfg.bounds_s, "number of contracted lines, s = c2(E)")->required();
    bounds->add_flag("--rational-non-p2", cfg.rational_non_p2,
                     "base surface is rational and not P^2: apply the refined bound");

    auto* report = app.add_subcommand("report", "aggregate machine-readable report (table + verifiers)");
    report->add_option("--window", cfg.window, "Reider lattice search window (>= 1)");

    CLI11_PARSE(app, argc, argv);

    const auto format = parse_format(format_name);
    if (!format) {
        std::cerr << "error: unknown format '" << format_name << "' (use text, json, csv, md)\n";
        return 2;
    }
    cfg.format = *format;

    if (table1->parsed()) {
        cfg.command = Command::Table1;
    } else if (verify->parsed()) {
        cfg.command = Command::Verify;
        cfg.verify_id = verify_id;
    } else if (invariants->parsed()) {
        cfg.command = Command::Invariants;
        if (opt_b1->count() > 0)
            cfg.from_b1_b2 = std::make_pair(b1, b2);
        if (opt_b->count() > 0)
            cfg.from_b_c = std::make_pair(b, c);
        if (opt_m->count() > 0)
            cfg.from_m_n = std::make_pair(m, n);
    } else if (bounds->parsed()) {
        cfg.command = Command::Bounds;
    } else if (report->parsed()) {
        cfg.command = Command::Report;
    }

    return finish(run(cfg), output_path);
}
