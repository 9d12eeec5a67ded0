#include "vc4/harness/generator.hpp"

#include <random>
#include <stdexcept>

namespace vc4::harness {
namespace {

std::vector<int> draw_degrees(int n, Profile profile, std::mt19937_64 &rng) {
    switch (profile) {
    case Profile::Regular3: return std::vector<int>(n, 3);
    case Profile::Regular4: return std::vector<int>(n, 4);
    case Profile::Mixed34: break;
    }
    std::discrete_distribution<int> pick({1.0, 3.0, 3.0});
    std::vector<int> deg(n);
    int sum = 0;
    for (auto &d : deg) {
        d = 2 + pick(rng);
        sum += d;
    }
    if (sum % 2) {
        for (auto &d : deg)
            if (d < 4) {
                ++d;
                break;
            }
    }
    return deg;
}

// Random stub pairing that refuses loops and parallel edges; gives up (and
// lets the caller resample) when it gets stuck.
std::optional<Graph> pair_stubs(const std::vector<int> &deg, std::mt19937_64 &rng) {
    const int n = static_cast<int>(deg.size());
    std::vector<VertexId> stubs;
    for (int v = 0; v < n; ++v)
        stubs.insert(stubs.end(), deg[v], v);
    if (stubs.size() % 2)
        return std::nullopt;
    Graph g(static_cast<std::size_t>(n));
    while (!stubs.empty()) {
        std::uniform_int_distribution<std::size_t> idx(0, stubs.size() - 1);
        bool placed = false;
        for (int tries = 0; tries < 64 && !placed; ++tries) {
            std::size_t i = idx(rng), j = idx(rng);
            if (i == j)
                continue;
            VertexId a = stubs[i], b = stubs[j];
            if (a == b || g.adjacent(a, b))
                continue;
            g.add_edge(a, b);
            if (i < j)
                std::swap(i, j);
            stubs[i] = stubs.back();
            stubs.pop_back();
            stubs[j] = stubs.back();
            stubs.pop_back();
            placed = true;
        }
        if (!placed)
            return std::nullopt;
    }
    return g;
}

}  // namespace

std::string_view to_string(Profile p) {
    switch (p) {
    case Profile::Mixed34: return "mixed34";
    case Profile::Regular3: return "regular3";
    case Profile::Regular4: return "regular4";
    }
    return "?";
}

std::optional<Profile> parse_profile(std::string_view text) {
    if (text == "mixed34")
        return Profile::Mixed34;
    if (text == "regular3")
        return Profile::Regular3;
    if (text == "regular4")
        return Profile::Regular4;
    return std::nullopt;
}

Graph gen_bounded_degree(int n, std::uint64_t seed, Profile profile) {
    if (n < 5)
        throw std::invalid_argument("generator needs n >= 5");
    if (profile == Profile::Regular3 && n % 2)
        throw std::invalid_argument("regular3 needs an even vertex count");

    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(profile));
    for (int attempt = 0; attempt < 100000; ++attempt) {
        auto deg = draw_degrees(n, profile, rng);
        auto g = pair_stubs(deg, rng);
        if (!g || g->connected_components().size() != 1)
            continue;
        if (*g->min_degree() < 2 || *g->max_degree() > 4)
            continue;
        return std::move(*g);
    }
    throw std::runtime_error("generator failed to find a graph for n=" + std::to_string(n));
}

std::vector<CorpusEntry> make_corpus(int count, int n_lo, int n_hi, std::uint64_t seed) {
    if (n_lo > n_hi)
        throw std::invalid_argument("empty n range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(n_lo, n_hi);
    std::vector<CorpusEntry> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        auto profile = static_cast<Profile>(i % 3);
        int n = size(rng);
        if (profile == Profile::Regular3 && n % 2)
            n = n + 1 <= n_hi ? n + 1 : n - 1;
        std::uint64_t inst_seed = rng();
        std::string name = std::string(to_string(profile)) + "-n" + std::to_string(n) + "-s" + std::to_string(inst_seed);
        out.push_back({std::move(name), profile, inst_seed, gen_bounded_degree(n, inst_seed, profile)});
    }
    return out;
}

}  // namespace vc4::harness
