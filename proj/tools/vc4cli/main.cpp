#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "vc4/harness/commands.hpp"

using vc4::harness::RunConfig;

int main(int argc, char **argv) {
    CLI::App app{"Exact vertex cover for graphs of maximum degree 4"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string mode = "abort";
    std::string range = "5..24";
    const std::map<std::string, vc4::AssertMode> modes{{"abort", vc4::AssertMode::Abort},
                                                       {"warn", vc4::AssertMode::Warn}};

    auto *solve = app.add_subcommand("solve", "Decide whether a cover of size <= k exists");
    solve->add_option("--input", cfg.input, "DIMACS edge file")->required();
    solve->add_option("--k", cfg.k, "Cover budget")->required();
    solve->add_flag("--cover", cfg.cover, "Print a verified cover as 'v <id>' lines");
    solve->add_option("--trace", cfg.trace, "Write JSON-lines trace events to this file");
    solve->add_option("--assert", mode, "abort|warn on measure assertion failures")
        ->check(CLI::IsMember({"abort", "warn"}));

    auto *minvc = app.add_subcommand("minvc", "Print the minimum vertex cover size");
    minvc->add_option("--input", cfg.input, "DIMACS edge file")->required();

    auto *verify = app.add_subcommand("verify", "Cross-check the solver against the brute-force oracle");
    auto *vin = verify->add_option("--input", cfg.input, "DIMACS edge file");
    auto *vdir = verify->add_option("--dir", cfg.dir, "Directory of DIMACS files");
    vin->excludes(vdir);
    verify->add_option("--max-n", cfg.max_n, "Skip graphs with more vertices")->capture_default_str();

    auto *bench = app.add_subcommand("bench", "Run a seeded corpus and emit a report");
    bench->add_option("--count", cfg.count, "Number of instances")->required();
    bench->add_option("--n-range", range, "Vertex-count range A..B")->capture_default_str();
    bench->add_option("--seed", cfg.seed, "Corpus seed")->capture_default_str();
    bench->add_option("--report", cfg.report, "JSON report path");
    bench->add_option("--assert", mode, "abort|warn")->check(CLI::IsMember({"abort", "warn"}));

    auto *gen = app.add_subcommand("gen", "Generate a bounded-degree graph");
    gen->add_option("--n", cfg.n, "Vertex count")->required();
    gen->add_option("--seed", cfg.seed, "Seed")->required();
    gen->add_option("--profile", cfg.profile, "mixed34|regular3|regular4")
        ->check(CLI::IsMember({"mixed34", "regular3", "regular4"}))
        ->capture_default_str();
    gen->add_option("--out", cfg.out, "Output file (stdout if omitted)");

    auto *bn = app.add_subcommand("branching-number", "Root of sum x^-a_i = 1");
    bn->add_option("--vector", cfg.vector, "Entries such as \"5/3,3,7/3\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : vc4::harness::kExitUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.mode = modes.at(mode);
    if (cfg.command == "bench") {
        try {
            std::tie(cfg.n_lo, cfg.n_hi) = vc4::harness::parse_range(range);
        } catch (const std::invalid_argument &e) {
            std::cerr << "usage error: " << e.what() << '\n';
            return vc4::harness::kExitUsage;
        }
    }
    return vc4::harness::run_command(cfg, std::cout, std::cerr);
}
