#include "vc4/solver.hpp"

#include <algorithm>
#include <string>

#include "vc4/crown.hpp"

namespace vc4 {
namespace {

int ceil_third(int a) { return a <= 0 ? 0 : (a + 2) / 3; }

bool covers_all_edges(const Graph &g, const VertexSet &cover) {
    for (auto [u, v] : g.edges())
        if (!set_contains(cover, u) && !set_contains(cover, v))
            return false;
    return true;
}

std::string join(const std::vector<int> &v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

std::string_view to_string(RuleId rule) {
    switch (rule) {
    case RuleId::R1: return "R1";
    case RuleId::R2: return "R2";
    case RuleId::R3: return "R3";
    case RuleId::R4: return "R4";
    case RuleId::R5: return "R5";
    case RuleId::R6: return "R6";
    case RuleId::R7: return "R7";
    case RuleId::R8: return "R8";
    case RuleId::R9: return "R9";
    case RuleId::R10: return "R10";
    case RuleId::R11: return "R11";
    case RuleId::R12: return "R12";
    case RuleId::C1: return "C1";
    case RuleId::C2: return "C2";
    case RuleId::C3: return "C3";
    case RuleId::Marked: return "Marked";
    }
    return "?";
}

int lower_bound_guarantee(const Graph &g) {
    if (g.empty())
        return 0;
    if (*g.min_degree() < 2)
        throw std::invalid_argument("lower_bound_guarantee needs minimum degree >= 2");
    int n = static_cast<int>(g.num_vertices());
    int delta = *g.max_degree();
    return (2 * n + (2 + delta) - 1) / (2 + delta);
}

std::vector<int> required_decreases(RuleId rule) {
    switch (rule) {
    case RuleId::R4: return {4, 6};
    case RuleId::R9: return {5, 5};
    case RuleId::R10: return {5, 4};
    case RuleId::R11: return {5, 9, 7};
    case RuleId::R12: return {3, 6};
    case RuleId::Marked: return {3, 6};
    default: return {};
    }
}

void Solver::emit(const TraceEvent &event) {
    if (options_.sink)
        options_.sink->record(event);
}

void Solver::violation(const std::string &message) {
    ++stats_.violations;
    if (stats_.messages.size() < 32)
        stats_.messages.push_back(message);
    if (options_.mode == AssertMode::Abort)
        throw InvariantViolation(message);
}

void Solver::check_invariants(const Instance &inst, Regime regime) {
    const Graph &g = inst.graph;
    if (g.empty())
        return;
    int max_allowed = regime == Regime::Deg3 ? 3 : 4;
    std::string problem;
    if (*g.min_degree() < 2)
        problem = "minimum degree " + std::to_string(*g.min_degree()) + " < 2";
    else if (*g.max_degree() > max_allowed)
        problem = "maximum degree " + std::to_string(*g.max_degree()) + " > " + std::to_string(max_allowed);
    else
        for (const auto &comp : g.connected_components())
            if (std::all_of(comp.begin(), comp.end(), [&](VertexId v) { return g.degree(v) == max_allowed; })) {
                problem = std::to_string(max_allowed) + "-regular component at vertex " + std::to_string(comp[0]);
                break;
            }
    if (problem.empty())
        return;
    TraceEvent ev{TraceKind::Invariant, RuleId::R1, measure_thirds(inst), {}, {}, false, problem};
    emit(ev);
    violation("vcbase invariant: " + problem);
}

RuleChoice Solver::select_rule(const Instance &inst, Regime regime) const {
    const Graph &g = inst.graph;
    if (measure_thirds(inst) < 0)
        return {RuleId::R1};
    if (g.empty())
        return {RuleId::R2};

    const VertexSet verts = g.vertices();
    for (VertexId v : verts) {
        if (g.degree(v) != 2)
            continue;
        auto nb = g.neighbors(v);
        if (g.adjacent(nb[0], nb[1]))
            continue;
        VertexSet second = set_difference(g.neighborhood({nb[0], nb[1]}), {v});
        if (second.size() <= 2)
            return {RuleId::R3, v};
    }
    for (VertexId v : verts) {
        if (g.degree(v) != 2)
            continue;
        auto nb = g.neighbors(v);
        if (!g.adjacent(nb[0], nb[1]))
            return {RuleId::R4, v};
    }
    for (VertexId v : verts)
        if (g.degree(v) == 2)
            return {RuleId::R5, v};

    if (regime == Regime::Deg3) {
        if (g.is_regular(3))
            return {RuleId::R6, verts.front()};
        throw InvariantViolation("no rule of the degree-3 ladder applies");
    }

    if (*g.max_degree() <= 3)
        return {RuleId::R7};
    if (g.is_regular(4))
        return {RuleId::R8, verts.front()};

    for (VertexId v : verts) {
        if (g.degree(v) != 3)
            continue;
        auto nb = g.neighbors(v);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (g.adjacent(nb[i], nb[j])) {
                    RuleChoice c{RuleId::R9, v};
                    c.u = nb[i];
                    c.w = nb[j];
                    c.x = nb[3 - i - j];
                    return c;
                }
    }

    for (VertexId v : verts) {
        if (g.degree(v) != 3)
            continue;
        std::map<VertexId, int> common;
        for (VertexId y : g.neighbors(v))
            for (VertexId t : g.neighbors(y))
                if (t != v)
                    ++common[t];
        for (auto [t, count] : common)
            if (count >= 2) {
                RuleChoice c{RuleId::R10, v};
                c.t = t;
                return c;
            }
    }

    // R11 is tried on every vertex before R12 falls back to the lowest v; the
    // degree-3 witness after the R12 fold depends on R11 being unavailable.
    std::optional<RuleChoice> r12;
    for (VertexId v : verts) {
        if (g.degree(v) != 3)
            continue;
        auto nb = g.neighbors(v);
        auto z = std::find_if(nb.begin(), nb.end(), [&](VertexId y) { return g.degree(y) == 4; });
        if (z == nb.end())
            continue;
        RuleChoice c{RuleId::R12, v};
        c.z = *z;
        std::vector<VertexId> rest;
        for (VertexId y : nb)
            if (y != c.z)
                rest.push_back(y);
        c.u = rest[0];
        c.w = rest[1];
        if (g.degree(c.u) == 4 || g.degree(c.w) == 4) {
            c.rule = RuleId::R11;
            return c;
        }
        if (!r12)
            r12 = c;
    }
    if (r12)
        return *r12;
    throw InvariantViolation("no rule of the degree-4 ladder applies");
}

Decision Solver::decide(const Graph &g, int k, bool want_cover) {
    if (auto d = g.max_degree(); d && *d > 4)
        throw GraphError("maximum degree " + std::to_string(*d) + " exceeds 4");
    stats_.mu0.reset();
    if (k < 0)
        return {false, std::nullopt};

    auto [red, journal] = preprocess_input(g, k);
    Regime regime = red.graph.max_degree().value_or(0) == 4 ? Regime::Deg4 : Regime::Deg3;
    Instance inst{std::move(red.graph), red.k};
    stats_.mu0 = measure_thirds(inst);

    Decision d = wrapper(inst, regime);
    if (!d.yes)
        return {false, std::nullopt};
    VertexSet cover = reconstruct_cover(journal, std::move(*d.cover));
    if (!covers_all_edges(g, cover) || static_cast<int>(cover.size()) > k)
        throw InvariantViolation("reconstructed cover failed verification (size " + std::to_string(cover.size()) +
                                 ", k " + std::to_string(k) + ")");
    if (want_cover)
        return {true, std::move(cover)};
    return {true, std::nullopt};
}

Decision Solver::wrapper(const Instance &inst, Regime regime) {
    const Graph &g = inst.graph;
    auto comps = g.connected_components();
    if (comps.size() <= 1)
        return base(inst, regime, true);

    const VertexSet &first = comps.front();
    int n = static_cast<int>(g.num_vertices());
    int n1 = static_cast<int>(first.size());
    Graph part = g.induced(first);
    Graph rest = g.without(first);
    int hi = inst.k - ceil_third(n - n1);
    for (int k1 = ceil_third(n1); k1 <= hi; ++k1) {
        Decision d1 = base({part, k1}, regime, true);
        if (!d1.yes)
            continue;
        Decision d2 = wrapper({std::move(rest), inst.k - k1}, regime);
        if (d2.yes)
            d2.cover = set_union(*d1.cover, *d2.cover);
        return d2;
    }
    return {false, std::nullopt};
}

Decision Solver::base(const Instance &inst, Regime regime, bool initial) {
    ++stats_.vcbase_calls;
    if (!initial)
        check_invariants(inst, regime);

    const Graph &g = inst.graph;
    RuleChoice c = select_rule(inst, regime);
    ++stats_.rule_counts[c.rule];

    switch (c.rule) {
    case RuleId::R1:
        ++stats_.leaves;
        return {false, std::nullopt};
    case RuleId::R2:
        ++stats_.leaves;
        return {true, VertexSet{}};
    case RuleId::R3: {
        Journal journal;
        int mu = measure_thirds(inst);
        CrownStep step = fold_degree2(g, inst.k, c.v, journal);
        int dec = mu - measure_thirds(step.graph, step.k);
        emit({TraceKind::Reduce, RuleId::R3, mu, {dec}, {}, dec == 1, {}});
        if (dec != 1)
            violation("R3 fold decreased mu by " + std::to_string(dec) + " thirds, expected 1");
        Decision d = branch_impl({std::move(step.graph), step.k}, {BranchSet{}}, regime, RuleId::R3, 0);
        if (d.yes)
            d.cover = reconstruct_cover(journal, std::move(*d.cover));
        return d;
    }
    case RuleId::R4: {
        VertexSet nv = g.neighborhood({c.v});
        return branch(inst, {{nv}, {g.neighborhood(nv)}}, regime, RuleId::R4);
    }
    case RuleId::R5:
        return branch(inst, {{g.neighborhood({c.v})}}, regime, RuleId::R5);
    case RuleId::R6:
    case RuleId::R8:
        return branch(inst, {{{c.v}}, {g.neighborhood({c.v})}}, regime, c.rule);
    case RuleId::R7:
        return wrapper(inst, Regime::Deg3);
    case RuleId::R9:
        return branch(inst, {{g.neighborhood({c.v})}, {g.neighborhood({c.x})}}, regime, RuleId::R9);
    case RuleId::R10:
        return branch(inst, {{g.neighborhood({c.v})}, {make_set({c.v, c.t})}}, regime, RuleId::R10);
    case RuleId::R11: {
        // N(u) and N(w) are single-vertex neighborhoods, so v is included.
        VertexSet middle = set_union(set_union({c.z}, g.neighborhood({c.u})), g.neighborhood({c.w}));
        return branch(inst, {{g.neighborhood({c.v})}, {middle}, {g.neighborhood({c.z})}}, regime, RuleId::R11);
    }
    case RuleId::R12: {
        BranchSet take_z{{c.z}};
        take_z.forced_fold = ForcedFold{c.v, set_difference(g.neighborhood({c.u}), {c.v})};
        return branch(inst, {take_z, {g.neighborhood({c.z})}}, regime, RuleId::R12);
    }
    default:
        throw InvariantViolation("rule ladder returned a non-ladder rule");
    }
}

Decision Solver::branch(const Instance &inst, const std::vector<BranchSet> &sets, Regime regime, RuleId origin) {
    return branch_impl(inst, sets, regime, origin, 0);
}

Decision Solver::continue_after(Graph g, int k, const Journal &journal, Regime regime, RuleId origin) {
    Decision d;
    auto md = g.min_degree();
    if (!md || *md >= 2)
        d = base({std::move(g), k}, regime, false);
    else
        d = branch_impl({std::move(g), k}, {BranchSet{}}, regime, origin, 0);
    if (d.yes)
        d.cover = reconstruct_cover(journal, std::move(*d.cover));
    return d;
}

Decision Solver::record_reduction(RuleId rule, int mu_before, const CrownStep &step, const Journal &journal,
                                  Regime regime, bool ok, std::string detail) {
    int dec = mu_before - measure_thirds(step.graph, step.k);
    ++stats_.rule_counts[rule];
    emit({TraceKind::Reduce, rule, mu_before, {dec}, {}, ok, detail});
    if (!ok)
        violation(std::string(to_string(rule)) + " decreased mu by " + std::to_string(dec) + " thirds: " + detail);
    return continue_after(step.graph, step.k, journal, regime, rule);
}

Decision Solver::branch_impl(const Instance &inst, const std::vector<BranchSet> &sets, Regime regime,
                             RuleId origin, int depth) {
    if (depth > options_.max_marked_depth)
        throw InvariantViolation("marked recursion deeper than " + std::to_string(options_.max_marked_depth));
    stats_.max_marked_depth = std::max(stats_.max_marked_depth, depth);

    const Graph &g = inst.graph;
    const int mu = measure_thirds(inst);

    struct Arm {
        ReducedInstance red;
        Journal journal;
    };
    std::vector<Arm> arms;
    arms.reserve(sets.size());
    for (const auto &set : sets) {
        auto [red, journal] = exhaust_low_degree(g, inst.k, set.s);
        arms.push_back({std::move(red), std::move(journal)});
    }

    // Step 2: a branch whose deletions leave too few cover vertices turns
    // into a crown reduction or a marked recursion instead.
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].marked)
            continue;
        const VertexSet &c_i = arms[i].red.c_removed;
        const VertexSet &h_i = arms[i].red.h_removed;
        if (c_i.empty() || h_i.empty() || c_i.size() + 1 < h_i.size())
            continue;

        Crown crown = resolve_crown(g, c_i, h_i);
        Journal journal;
        if (crown.kind == CrownKind::Proper) {
            if (crown.extended)
                ++stats_.extended_crowns;
            CrownStep step = apply_crown_delete(g, inst.k, crown.c, crown.h, journal);
            int dec = mu - measure_thirds(step.graph, step.k);
            return record_reduction(RuleId::C1, mu, step, journal, regime, dec >= 0,
                                    "|C|=" + std::to_string(crown.c.size()) + " |H|=" + std::to_string(crown.h.size()));
        }
        if (!g.is_independent(h_i)) {
            CrownStep step = apply_crown_delete(g, inst.k, c_i, h_i, journal);
            int dec = mu - measure_thirds(step.graph, step.k);
            return record_reduction(RuleId::C2, mu, step, journal, regime, dec >= 3,
                                    "|H|=" + std::to_string(h_i.size()));
        }
        VertexSet n_h = g.neighborhood(h_i);
        if (set_difference(n_h, c_i).size() <= 2) {
            CrownStep step = apply_crown_merge(g, inst.k, c_i, h_i, journal);
            if (step.graph.degree(step.vstar) == 0) {
                // The crown was a whole component; its merged vertex is isolated.
                step.graph.remove_vertex(step.vstar);
                journal.push_back(Discard{{step.vstar}});
            }
            int dec = mu - measure_thirds(step.graph, step.k);
            return record_reduction(RuleId::C3, mu, step, journal, regime, dec >= 1,
                                    "|H|=" + std::to_string(h_i.size()));
        }
        ++stats_.rule_counts[RuleId::Marked];
        return branch_impl(inst, {{h_i, true}, {n_h}}, regime, RuleId::Marked, depth + 1);
    }

    // Step 3: branch.
    TraceEvent ev{TraceKind::Branch, origin, mu, {}, {}, true, {}};
    std::vector<std::string> failures;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        Arm &arm = arms[i];
        int h = static_cast<int>(arm.red.h_removed.size());
        int dec = mu - measure_thirds(arm.red.graph, arm.red.k);
        if (!sets[i].marked) {
            bool ok = h >= 2 ? dec >= h + 2 : h == 1 ? dec == 2 : dec == 0;
            if (!ok)
                failures.push_back("branch " + std::to_string(i) + ": |H|=" + std::to_string(h) + " but mu dropped " +
                                   std::to_string(dec));
        }
        if (const auto &fold = sets[i].forced_fold) {
            ++stats_.forced_folds;
            CrownStep step = fold_degree2(arm.red.graph, arm.red.k, fold->v, arm.journal);
            bool witness = std::any_of(fold->witnesses.begin(), fold->witnesses.end(), [&](VertexId y) {
                return step.graph.contains(y) && step.graph.degree(y) == 3;
            });
            if (step.graph.degree(step.vstar) != 4 || !witness)
                failures.push_back("forced fold: deg(v*)=" + std::to_string(step.graph.degree(step.vstar)) +
                                   (witness ? "" : ", no degree-3 witness"));
            arm.red.graph = std::move(step.graph);
            arm.red.k = step.k;
            dec = mu - measure_thirds(arm.red.graph, arm.red.k);
        }
        ev.decreases.push_back(dec);
        ev.marked.push_back(sets[i].marked);
    }
    std::vector<int> need = required_decreases(origin);
    if (!need.empty()) {
        bool ok = need.size() == ev.decreases.size();
        for (std::size_t i = 0; ok && i < need.size(); ++i)
            ok = ev.decreases[i] >= need[i];
        if (!ok)
            failures.push_back("vector " + join(ev.decreases) + " below " + join(need));
    }
    ev.ok = failures.empty();
    for (const auto &f : failures)
        ev.detail += (ev.detail.empty() ? "" : "; ") + f;

    if (ev.decreases.size() >= 2)
        ++stats_.branching_events;
    auto &worst = stats_.worst_decreases[origin];
    if (worst.empty() || worst.size() != ev.decreases.size())
        worst = ev.decreases;
    else
        for (std::size_t i = 0; i < worst.size(); ++i)
            worst[i] = std::min(worst[i], ev.decreases[i]);
    emit(ev);
    for (const auto &f : failures)
        violation(std::string(to_string(origin)) + " " + f);

    for (auto &arm : arms) {
        Decision d = base({std::move(arm.red.graph), arm.red.k}, regime, false);
        if (d.yes)
            return {true, reconstruct_cover(arm.journal, std::move(*d.cover))};
    }
    return {false, std::nullopt};
}

Decision vc_decide(const Graph &g, int k, bool want_cover, SolverOptions options) {
    Solver solver(options);
    return solver.decide(g, k, want_cover);
}

int minimum_cover_size(const Graph &g, SolverOptions options) {
    auto [red, journal] = preprocess_input(g, 0);
    int k = static_cast<int>(red.h_removed.size()) + lower_bound_guarantee(red.graph);
    Solver solver(options);
    while (!solver.decide(g, k).yes)
        ++k;
    return k;
}

}  // namespace vc4
