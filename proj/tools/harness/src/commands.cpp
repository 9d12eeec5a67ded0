#include "vc4/harness/commands.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>

#include "vc4/branching.hpp"
#include "vc4/crown.hpp"
#include "vc4/harness/dimacs.hpp"
#include "vc4/harness/generator.hpp"
#include "vc4/harness/report.hpp"
#include "vc4/harness/trace_json.hpp"
#include "vc4/oracle.hpp"

namespace vc4::harness {
namespace {

namespace fs = std::filesystem;

int to_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return value;
}

Graph load(const RunConfig &cfg, std::ostream &err) {
    if (cfg.input.empty())
        throw std::invalid_argument("--input is required");
    std::vector<std::string> warnings;
    Graph g = read_dimacs_file(cfg.input, &warnings);
    for (const auto &w : warnings)
        err << "warning: " << w << '\n';
    return g;
}

// Solver vs oracle for every k in [0, n]. Returns the number of disagreements.
int verify_graph(const Graph &g, const std::string &name, const RunConfig &cfg, std::ostream &out) {
    int n = static_cast<int>(g.num_vertices());
    int best = oracle::min_vc_exact(g).size;
    int agree = 0, certs_bad = 0;
    SolverOptions opts;
    opts.mode = cfg.mode;
    for (int k = 0; k <= n; ++k) {
        Decision d = vc_decide(g, k, true, opts);
        if (d.yes == (k >= best))
            ++agree;
        if (d.yes && (!d.cover || !oracle::is_vertex_cover(g, *d.cover) || static_cast<int>(d.cover->size()) > k))
            ++certs_bad;
    }
    out << name << ": agree " << agree << '/' << (n + 1) << " minvc " << best;
    if (certs_bad)
        out << " bad-certificates " << certs_bad;
    out << '\n';
    return (n + 1 - agree) + certs_bad;
}

}  // namespace

std::pair<int, int> parse_range(std::string_view text) {
    auto dots = text.find("..");
    if (dots == std::string_view::npos)
        throw std::invalid_argument("range must look like A..B");
    int a = to_int(text.substr(0, dots));
    int b = to_int(text.substr(dots + 2));
    if (a > b)
        throw std::invalid_argument("range lower end exceeds upper end");
    return {a, b};
}

int cmd_solve(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    Graph g = load(cfg, err);
    std::unique_ptr<std::ofstream> trace_file;
    std::unique_ptr<JsonLinesSink> sink;
    if (!cfg.trace.empty()) {
        trace_file = std::make_unique<std::ofstream>(cfg.trace);
        if (!*trace_file)
            throw InputError("cannot write trace " + cfg.trace);
        sink = std::make_unique<JsonLinesSink>(*trace_file);
    }
    Solver solver({cfg.mode, sink.get()});
    Decision d = solver.decide(g, cfg.k, cfg.cover);
    if (!d.yes) {
        out << "no\n";
        return solver.stats().violations ? kExitAssertion : kExitAnswerNo;
    }
    out << "yes\n";
    if (d.cover)
        for (VertexId v : *d.cover)
            out << "v " << v + 1 << '\n';
    return solver.stats().violations ? kExitAssertion : kExitOk;
}

int cmd_minvc(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    Graph g = load(cfg, err);
    out << minimum_cover_size(g, {cfg.mode, nullptr}) << '\n';
    return kExitOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    int failures = 0, checked = 0;
    auto one = [&](const fs::path &path) {
        std::vector<std::string> warnings;
        Graph g = read_dimacs_file(path, &warnings);
        if (static_cast<int>(g.num_vertices()) > cfg.max_n) {
            out << path.string() << ": skipped (n=" << g.num_vertices() << " > " << cfg.max_n << ")\n";
            return;
        }
        ++checked;
        failures += verify_graph(g, path.string(), cfg, out);
    };
    if (!cfg.input.empty()) {
        one(cfg.input);
    } else if (!cfg.dir.empty()) {
        std::vector<fs::path> files;
        for (const auto &entry : fs::directory_iterator(cfg.dir))
            if (entry.is_regular_file())
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto &f : files)
            one(f);
    } else {
        err << "verify needs --input or --dir\n";
        return kExitUsage;
    }
    out << "verified " << checked << " graph(s), " << failures << " failure(s)\n";
    return failures ? kExitAssertion : kExitOk;
}

int cmd_bench(const RunConfig &cfg, std::ostream &out, std::ostream &) {
    if (cfg.count <= 0)
        throw std::invalid_argument("--count must be positive");
    auto corpus = make_corpus(cfg.count, cfg.n_lo, cfg.n_hi, cfg.seed);
    Report report;
    for (const auto &entry : corpus) {
        InstanceReport ir;
        ir.name = entry.name;
        ir.n = static_cast<int>(entry.graph.num_vertices());
        for (int k = 0; k <= ir.n; ++k) {
            Solver solver({cfg.mode, nullptr});
            Decision d = solver.decide(entry.graph, k);
            if (d.yes && ir.min_cover < 0)
                ir.min_cover = k;
            double ratio = report.add_solve(solver.stats());
            ir.violations += solver.stats().violations;
            ir.max_leaves = std::max(ir.max_leaves, solver.stats().leaves);
            if (ratio > ir.max_ratio) {
                ir.max_ratio = ratio;
                ir.worst_k = k;
            }
        }
        report.instances.push_back(ir);
    }
    auto j = report.to_json();
    if (!cfg.report.empty()) {
        std::ofstream f(cfg.report);
        if (!f)
            throw InputError("cannot write report " + cfg.report);
        f << j.dump(2) << '\n';
    }
    out << "instances " << corpus.size() << " solves " << report.solves << " branching_events "
        << report.branching_events << " leaves " << report.leaves << '\n';
    out << "violations " << report.violations << " max_bound_ratio " << std::fixed << std::setprecision(4)
        << report.max_ratio << " (limit " << kGrowthSlack << ")\n";
    for (const auto &[rule, vec] : report.worst_decreases) {
        out << "worst " << rule << " (";
        for (std::size_t i = 0; i < vec.size(); ++i)
            out << (i ? "," : "") << vec[i];
        out << ")\n";
    }
    return report.ok() ? kExitOk : kExitAssertion;
}

int cmd_gen(const RunConfig &cfg, std::ostream &out, std::ostream &) {
    auto profile = parse_profile(cfg.profile);
    if (!profile)
        throw std::invalid_argument("unknown profile '" + cfg.profile + "'");
    Graph g = gen_bounded_degree(cfg.n, cfg.seed, *profile);
    if (cfg.out.empty())
        out << write_dimacs(g);
    else
        write_dimacs_file(cfg.out, g);
    return kExitOk;
}

int cmd_branching_number(const RunConfig &cfg, std::ostream &out, std::ostream &) {
    auto v = parse_branching_vector(cfg.vector);
    out << std::fixed << std::setprecision(6) << branching_number(v) << '\n';
    return kExitOk;
}

int run_command(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    try {
        if (cfg.command == "solve")
            return cmd_solve(cfg, out, err);
        if (cfg.command == "minvc")
            return cmd_minvc(cfg, out, err);
        if (cfg.command == "verify")
            return cmd_verify(cfg, out, err);
        if (cfg.command == "bench")
            return cmd_bench(cfg, out, err);
        if (cfg.command == "gen")
            return cmd_gen(cfg, out, err);
        if (cfg.command == "branching-number")
            return cmd_branching_number(cfg, out, err);
        err << "unknown command '" << cfg.command << "'\n";
        return kExitUsage;
    } catch (const InputError &e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const GraphError &e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error &e) {
        // InvariantViolation, CrownError, ReductionError
        err << "assertion violation: " << e.what() << '\n';
        return kExitAssertion;
    } catch (const std::runtime_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

}  // namespace vc4::harness
