#include "vc4/harness/dimacs.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace vc4::harness {
namespace {

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

Graph parse_dimacs(std::string_view text, std::vector<std::string> *warnings) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::size_t duplicates = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag == "c")
            continue;
        if (tag == "p") {
            std::string format;
            if (n >= 0)
                throw InputError(where(line_no) + "second problem line");
            if (!(fields >> format >> n >> m) || format != "edge" || n < 0 || m < 0)
                throw InputError(where(line_no) + "malformed header, expected 'p edge <n> <m>'");
            continue;
        }
        if (tag != "e")
            throw InputError(where(line_no) + "unknown line type '" + tag + "'");
        if (n < 0)
            throw InputError(where(line_no) + "edge before problem line");
        long u = 0, v = 0;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw InputError(where(line_no) + "malformed edge line");
        if (u < 1 || v < 1 || u > n || v > n)
            throw InputError(where(line_no) + "vertex id out of range 1.." + std::to_string(n));
        if (u == v)
            throw InputError(where(line_no) + "self-loop on vertex " + std::to_string(u));
        Edge e{static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v))};
        if (!seen.insert(e).second) {
            ++duplicates;
            continue;
        }
        edges.push_back(e);
    }
    if (n < 0)
        throw InputError("missing 'p edge' header");
    if (warnings) {
        if (duplicates)
            warnings->push_back(std::to_string(duplicates) + " duplicate edge(s) collapsed");
        if (static_cast<long>(edges.size() + duplicates) != m)
            warnings->push_back("header declares " + std::to_string(m) + " edges, found " +
                                std::to_string(edges.size() + duplicates));
    }
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_dimacs_file(const std::filesystem::path &path, std::vector<std::string> *warnings) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dimacs(buf.str(), warnings);
}

std::string write_dimacs(const Graph &g) {
    VertexSet ids = g.vertices();
    auto ext = [&](VertexId v) { return std::lower_bound(ids.begin(), ids.end(), v) - ids.begin() + 1; };
    auto edges = g.edges();
    std::ostringstream out;
    out << "p edge " << ids.size() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << "e " << ext(u) << ' ' << ext(v) << '\n';
    return out.str();
}

void write_dimacs_file(const std::filesystem::path &path, const Graph &g) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << write_dimacs(g);
}

}  // namespace vc4::harness
