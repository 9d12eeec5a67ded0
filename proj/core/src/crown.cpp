#include "vc4/crown.hpp"

#include <algorithm>
#include <set>

namespace vc4 {
namespace {

// Left side = C (plus optional twins), right side = H, edges by index.
struct Bipartite {
    std::vector<VertexId> left_ids;
    std::vector<std::vector<int>> adj;
    int right_count = 0;
};

Bipartite build_bipartite(const Graph &g, const VertexSet &c, const VertexSet &h) {
    Bipartite b;
    b.left_ids = c;
    b.right_count = static_cast<int>(h.size());
    b.adj.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (VertexId u : g.neighbors(c[i])) {
            auto it = std::lower_bound(h.begin(), h.end(), u);
            if (it != h.end() && *it == u)
                b.adj[i].push_back(static_cast<int>(it - h.begin()));
        }
    return b;
}

class Kuhn {
public:
    explicit Kuhn(const Bipartite &b)
        : b_(b), match_left_(b.adj.size(), -1), match_right_(b.right_count, -1) {}

    int run() {
        int size = 0;
        for (std::size_t l = 0; l < b_.adj.size(); ++l)
            if (augment_from(static_cast<int>(l)))
                ++size;
        return size;
    }

    bool augment_from(int l) {
        visited_.assign(b_.right_count, 0);
        return try_augment(l);
    }

    // Left and right indices reachable by alternating paths from `roots`.
    std::pair<std::vector<int>, std::vector<int>> reachable(const std::vector<int> &roots) const {
        std::vector<std::uint8_t> seen_left(b_.adj.size(), 0), seen_right(b_.right_count, 0);
        std::vector<int> stack = roots;
        for (int l : roots)
            seen_left[l] = 1;
        while (!stack.empty()) {
            int l = stack.back();
            stack.pop_back();
            for (int r : b_.adj[l]) {
                if (seen_right[r])
                    continue;
                seen_right[r] = 1;
                int next = match_right_[r];
                if (next >= 0 && !seen_left[next]) {
                    seen_left[next] = 1;
                    stack.push_back(next);
                }
            }
        }
        std::vector<int> left, right;
        for (std::size_t i = 0; i < seen_left.size(); ++i)
            if (seen_left[i])
                left.push_back(static_cast<int>(i));
        for (std::size_t i = 0; i < seen_right.size(); ++i)
            if (seen_right[i])
                right.push_back(static_cast<int>(i));
        return {left, right};
    }

    const std::vector<int> &match_left() const { return match_left_; }

private:
    bool try_augment(int l) {
        for (int r : b_.adj[l]) {
            if (visited_[r])
                continue;
            visited_[r] = 1;
            if (match_right_[r] < 0 || try_augment(match_right_[r])) {
                match_left_[l] = r;
                match_right_[r] = l;
                return true;
            }
        }
        return false;
    }

    const Bipartite &b_;
    std::vector<int> match_left_, match_right_;
    std::vector<std::uint8_t> visited_;
};

bool disjoint(const VertexSet &a, const VertexSet &b) {
    return set_difference(a, b).size() == a.size();
}

bool live_subset(const Graph &g, const VertexSet &s) {
    return std::all_of(s.begin(), s.end(), [&](VertexId v) { return g.contains(v); });
}

// Returns S, a nonempty subset of C with |N(S)| <= |S|, or an empty set when
// every nonempty subset has surplus at least 1.
VertexSet find_nonpositive_surplus_set(const Graph &g, const VertexSet &c, const VertexSet &h) {
    Bipartite b = build_bipartite(g, c, h);
    Kuhn kuhn(b);
    kuhn.run();

    std::vector<int> unmatched;
    for (std::size_t l = 0; l < c.size(); ++l)
        if (kuhn.match_left()[l] < 0)
            unmatched.push_back(static_cast<int>(l));
    if (!unmatched.empty()) {
        auto [left, right] = kuhn.reachable(unmatched);
        VertexSet s;
        for (int l : left)
            s.push_back(c[l]);
        return s;
    }

    // C is saturated. Duplicate each c in turn; a failed augmentation from the
    // duplicate exposes a set containing c with zero surplus.
    for (std::size_t i = 0; i < c.size(); ++i) {
        Bipartite twin = b;
        twin.left_ids.push_back(c[i]);
        twin.adj.push_back(b.adj[i]);
        Kuhn k2(twin);
        k2.run();
        int twin_index = static_cast<int>(c.size());
        if (k2.match_left()[twin_index] >= 0)
            continue;
        auto [left, right] = k2.reachable({twin_index});
        VertexSet s;
        for (int l : left)
            if (l != twin_index)
                s.push_back(c[l]);
        s.push_back(c[i]);
        return make_set(std::move(s));
    }
    return {};
}

// Extends a proper crown with degree-0/degree-1 deletions on G - C - H until
// the remainder has minimum degree 2. Each degree-1 vertex is matched with the
// neighbor it forces into H, so the matching keeps saturating H.
void close_under_low_degree(const Graph &g, Crown &crown) {
    Graph rest = g.without(set_union(crown.c, crown.h));
    std::vector<VertexId> extra_c, extra_h;
    for (;;) {
        VertexId d0 = -1, d1 = -1;
        for (VertexId v : rest.vertices()) {
            int d = rest.degree(v);
            if (d == 0) {
                d0 = v;
                break;
            }
            if (d == 1 && d1 < 0)
                d1 = v;
        }
        if (d0 >= 0) {
            extra_c.push_back(d0);
            rest.remove_vertex(d0);
        } else if (d1 >= 0) {
            VertexId nb = rest.neighbors(d1)[0];
            extra_h.push_back(nb);
            extra_c.push_back(d1);
            crown.certificate.pairs.emplace_back(d1, nb);
            rest.remove_vertex(nb);
            rest.remove_vertex(d1);
        } else {
            break;
        }
    }
    if (!extra_c.empty() || !extra_h.empty()) {
        crown.c = set_union(crown.c, make_set(std::move(extra_c)));
        crown.h = set_union(crown.h, make_set(std::move(extra_h)));
    }
}

Crown make_proper(const Graph &g, const VertexSet &c, const VertexSet &h, const VertexSet &orig_c,
                  const VertexSet &orig_h) {
    Crown crown;
    crown.kind = CrownKind::Proper;
    crown.c = c;
    crown.h = h;
    crown.certificate = max_bipartite_matching(g, c, h);
    if (crown.certificate.size() != h.size())
        throw CrownError("candidate crown has no matching saturating H");
    close_under_low_degree(g, crown);
    crown.extended = !is_subset(crown.c, orig_c) || !is_subset(crown.h, orig_h);

    if (!check_general_crown(g, crown.c, crown.h) || !check_good(g, crown.c, crown.h))
        throw CrownError("resolved proper crown failed validation");
    if (max_bipartite_matching(g, crown.c, crown.h).size() != crown.h.size())
        throw CrownError("resolved proper crown lost its matching");
    return crown;
}

}  // namespace

Matching max_bipartite_matching(const Graph &g, const VertexSet &c, const VertexSet &h) {
    if (!disjoint(c, h))
        throw CrownError("crown sides overlap");
    Bipartite b = build_bipartite(g, c, h);
    Kuhn kuhn(b);
    kuhn.run();
    Matching m;
    for (std::size_t l = 0; l < c.size(); ++l)
        if (int r = kuhn.match_left()[l]; r >= 0)
            m.pairs.emplace_back(c[l], h[r]);
    return m;
}

bool check_general_crown(const Graph &g, const VertexSet &c, const VertexSet &h) {
    if (c.empty() || h.empty() || !disjoint(c, h))
        return false;
    if (!live_subset(g, c) || !live_subset(g, h))
        return false;
    for (VertexId v : c)
        for (VertexId u : g.neighbors(v))
            if (!set_contains(h, u))
                return false;
    return true;
}

bool check_good(const Graph &g, const VertexSet &c, const VertexSet &h) {
    Graph rest = g.without(set_union(c, h));
    auto d = rest.min_degree();
    return !d || *d >= 2;
}

bool check_proper_crown(const Graph &g, const VertexSet &c, const VertexSet &h) {
    return check_general_crown(g, c, h) && max_bipartite_matching(g, c, h).size() == h.size();
}

bool check_almost_crown(const Graph &g, const VertexSet &c, const VertexSet &h) {
    if (!check_general_crown(g, c, h) || h.size() != c.size() + 1)
        return false;
    Bipartite b = build_bipartite(g, c, h);
    for (std::size_t i = 0; i < c.size(); ++i) {
        Bipartite twin = b;
        twin.adj.push_back(b.adj[i]);
        twin.left_ids.push_back(c[i]);
        if (Kuhn(twin).run() != static_cast<int>(c.size()) + 1)
            return false;
    }
    return true;
}

Crown resolve_crown(const Graph &g, const VertexSet &c, const VertexSet &h) {
    if (!check_general_crown(g, c, h))
        throw CrownError("resolve_crown: input is not a general crown");
    if (c.size() + 1 < h.size())
        throw CrownError("resolve_crown: requires |C| >= |H| - 1");

    if (max_bipartite_matching(g, c, h).size() == h.size())
        return make_proper(g, c, h, c, h);

    VertexSet s = find_nonpositive_surplus_set(g, c, h);
    if (!s.empty())
        return make_proper(g, s, g.neighborhood(s), c, h);

    // Every nonempty S has surplus >= 1; together with |C| >= |H| - 1 and
    // N(C) within H this forces |H| = |C| + 1.
    if (!check_almost_crown(g, c, h))
        throw CrownError("resolve_crown: surplus holds but pair is not an almost crown");
    Crown crown;
    crown.kind = CrownKind::Almost;
    crown.c = c;
    crown.h = h;
    crown.certificate = max_bipartite_matching(g, c, h);
    if (crown.certificate.size() != c.size())
        throw CrownError("resolve_crown: almost crown without C-saturating matching");
    return crown;
}

}  // namespace vc4
