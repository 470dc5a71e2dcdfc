#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gburn/exact.hpp"
#include "gburn/graph.hpp"
#include "gburn/graph_algo.hpp"
#include "gburn/schedule.hpp"
#include "gburn/set_cover.hpp"

namespace gburn {

struct VertexRole {
    enum Kind {
        base_clique,     // u_j in the base clique, index = j (1-based)
        layer_clique,    // u_j in layer i, layer = i, index = j
        layer_set,       // set vertex v_q in layer i, layer = i, index = q (1-based)
        pendant,         // layer = i, index = copy (0-based), position 0 = head
        connector_inner, // layer = i, index = j, position 0 next to the layer copy
        special_w,
        special_x,
        special_y,
        special_z,
    };
    Kind kind = special_w;
    int layer = -1;
    int index = -1;
    int position = -1;

    std::string label() const {
        switch (kind) {
            case base_clique: return "u_" + std::to_string(index);
            case layer_clique:
                return "u_" + std::to_string(index) + "^(" + std::to_string(layer) + ")";
            case layer_set:
                return "v_" + std::to_string(index) + "^(" + std::to_string(layer) + ")";
            case pendant:
                return "pendant_" + std::to_string(layer) + "_c" + std::to_string(index) +
                       "_p" + std::to_string(position);
            case connector_inner:
                return "conn_" + std::to_string(layer) + "_j" + std::to_string(index) +
                       "_p" + std::to_string(position);
            case special_w: return "w";
            case special_x: return "x";
            case special_y: return "y";
            case special_z: return "z";
        }
        return "?";
    }
};

/// One burning layer of the reduction: a copy of the element clique, the set
/// vertices, the pendant paths that force a centre into this layer, and the
/// inner vertices of the timing paths back to the base clique.
struct GadgetLayer {
    int radius = -1;                            // the layer index i
    std::vector<int> clique;                    // u_1^(i)..u_n^(i)
    std::vector<int> sets;                      // v_1^(i)..v_m^(i)
    std::vector<std::vector<int>> pendants;     // i+2 paths of i vertices, head first
    std::vector<std::vector<int>> connectors;   // per element j: i-2 inner vertices
};

/// Burning instance equivalent to a Set Cover instance, with per-vertex role
/// labels so tests and tooling stay independent of the id layout.
struct GadgetInstance {
    Graph graph{0};
    int k = 0;
    std::vector<VertexRole> roles;
    std::vector<int> base_clique; // u_1..u_n
    std::vector<GadgetLayer> layers; // radii 2..k-1 ascending
    int w = -1, x = -1, y = -1, z = -1;
    SetCoverInstance source;

    const GadgetLayer& layer(int radius) const { return layers.at(radius - 2); }

    std::vector<int> all_set_vertices() const {
        std::vector<int> out;
        for (const auto& l : layers) out.insert(out.end(), l.sets.begin(), l.sets.end());
        return out;
    }
};

/// Builds the burning instance (G, k = s+2) for a Set Cover instance with
/// budget s: one layer per radius i in 2..k-1, each holding a copy of the
/// element clique, one vertex per set wired to the elements it contains,
/// i+2 pendant paths of i vertices hanging off the set vertices, and a path
/// of i-2 inner vertices linking each element copy back to the base clique.
/// w and the path x-y-z attach to the first base vertex.
inline GadgetInstance setcover_to_burning(const SetCoverInstance& inst) {
    const int n = inst.universe_size;
    const int m = static_cast<int>(inst.sets.size());
    const int s = inst.budget;
    if (n < 1 || m < 1) throw std::invalid_argument("need at least one element and one set");
    if (s < 1) throw std::invalid_argument("budget must be at least 1");
    for (int q = 0; q < m; ++q)
        if (inst.sets[q].none())
            throw std::invalid_argument("set " + std::to_string(q + 1) +
                                        " is empty; the reduction needs nonempty sets");

    GadgetInstance out;
    out.k = s + 2;
    out.source = inst;
    std::vector<std::pair<int, int>> edges;
    int next = 0;
    auto fresh = [&](VertexRole role) {
        out.roles.push_back(role);
        return next++;
    };

    for (int j = 1; j <= n; ++j)
        out.base_clique.push_back(fresh({VertexRole::base_clique, -1, j, -1}));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            edges.emplace_back(out.base_clique[a], out.base_clique[b]);

    for (int i = 2; i <= out.k - 1; ++i) {
        GadgetLayer layer;
        layer.radius = i;
        for (int j = 1; j <= n; ++j)
            layer.clique.push_back(fresh({VertexRole::layer_clique, i, j, -1}));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                edges.emplace_back(layer.clique[a], layer.clique[b]);

        for (int q = 1; q <= m; ++q) {
            int v = fresh({VertexRole::layer_set, i, q, -1});
            layer.sets.push_back(v);
            inst.sets[q - 1].for_each(
                [&](std::size_t e) { edges.emplace_back(layer.clique[e], v); });
        }

        for (int c = 0; c < i + 2; ++c) {
            std::vector<int> path;
            for (int pos = 0; pos < i; ++pos)
                path.push_back(fresh({VertexRole::pendant, i, c, pos}));
            for (int v : layer.sets) edges.emplace_back(v, path.front());
            for (int pos = 0; pos + 1 < i; ++pos)
                edges.emplace_back(path[pos], path[pos + 1]);
            layer.pendants.push_back(std::move(path));
        }

        for (int j = 1; j <= n; ++j) {
            std::vector<int> inner;
            for (int pos = 0; pos < i - 2; ++pos)
                inner.push_back(fresh({VertexRole::connector_inner, i, j, pos}));
            int prev = layer.clique[j - 1];
            for (int v : inner) {
                edges.emplace_back(prev, v);
                prev = v;
            }
            edges.emplace_back(prev, out.base_clique[j - 1]);
            layer.connectors.push_back(std::move(inner));
        }
        out.layers.push_back(std::move(layer));
    }

    out.w = fresh({VertexRole::special_w, -1, -1, -1});
    out.x = fresh({VertexRole::special_x, -1, -1, -1});
    out.y = fresh({VertexRole::special_y, -1, -1, -1});
    out.z = fresh({VertexRole::special_z, -1, -1, -1});
    edges.emplace_back(out.w, out.base_clique.front());
    edges.emplace_back(out.x, out.base_clique.front());
    edges.emplace_back(out.x, out.y);
    edges.emplace_back(out.y, out.z);

    out.graph = Graph(next, edges);
    return out;
}

/// Structural audit of a built gadget; throws logic_error with a description
/// on the first violated invariant. Covers cliques, independence, the
/// set-membership wiring, pendant and connector shapes, the anchor quartet,
/// and the total vertex count.
inline void validate_gadget(const GadgetInstance& gi) {
    const Graph& g = gi.graph;
    const int n = gi.source.universe_size;
    const int m = static_cast<int>(gi.source.sets.size());
    auto fail = [](const std::string& msg) { throw std::logic_error("gadget: " + msg); };

    auto expect_clique = [&](const std::vector<int>& vs, const std::string& what) {
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (!g.has_edge(vs[a], vs[b])) fail(what + " is not a clique");
    };
    auto expect_independent = [&](const std::vector<int>& vs, const std::string& what) {
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (g.has_edge(vs[a], vs[b])) fail(what + " is not independent");
    };

    if (static_cast<int>(gi.base_clique.size()) != n) fail("base clique size");
    expect_clique(gi.base_clique, "base clique");
    if (static_cast<int>(gi.layers.size()) != gi.k - 2) fail("layer count");

    int expected_total = 4 + n;
    for (const GadgetLayer& layer : gi.layers) {
        const int i = layer.radius;
        const std::string tag = "layer " + std::to_string(i);
        expected_total += n + m + i * (i + 2) + n * (i - 2);

        if (static_cast<int>(layer.clique.size()) != n) fail(tag + " clique size");
        expect_clique(layer.clique, tag + " clique");
        if (static_cast<int>(layer.sets.size()) != m) fail(tag + " set vertex count");
        expect_independent(layer.sets, tag + " set vertices");

        for (int q = 0; q < m; ++q)
            for (int e = 0; e < n; ++e)
                if (g.has_edge(layer.clique[e], layer.sets[q]) !=
                    gi.source.sets[q].test(e))
                    fail(tag + " membership wiring at element " + std::to_string(e + 1) +
                         ", set " + std::to_string(q + 1));

        if (static_cast<int>(layer.pendants.size()) != i + 2) fail(tag + " pendant count");
        for (const auto& path : layer.pendants) {
            if (static_cast<int>(path.size()) != i) fail(tag + " pendant length");
            for (int v : layer.sets)
                if (!g.has_edge(v, path.front())) fail(tag + " pendant head wiring");
            for (std::size_t pos = 0; pos + 1 < path.size(); ++pos)
                if (!g.has_edge(path[pos], path[pos + 1])) fail(tag + " pendant chain");
            if (g.degree(path.back()) != 1) fail(tag + " pendant tail degree");
        }

        if (static_cast<int>(layer.connectors.size()) != n) fail(tag + " connector count");
        for (int j = 0; j < n; ++j) {
            const auto& inner = layer.connectors[j];
            if (static_cast<int>(inner.size()) != i - 2) fail(tag + " connector length");
            int prev = layer.clique[j];
            for (int v : inner) {
                if (!g.has_edge(prev, v)) fail(tag + " connector chain");
                if (g.degree(v) != 2) fail(tag + " connector inner degree");
                prev = v;
            }
            if (!g.has_edge(prev, gi.base_clique[j])) fail(tag + " connector landing");
        }
    }

    if (!g.has_edge(gi.w, gi.base_clique.front()) || g.degree(gi.w) != 1)
        fail("w attachment");
    if (!g.has_edge(gi.x, gi.base_clique.front()) || !g.has_edge(gi.x, gi.y) ||
        g.degree(gi.x) != 2)
        fail("x attachment");
    if (!g.has_edge(gi.y, gi.z) || g.degree(gi.y) != 2 || g.degree(gi.z) != 1)
        fail("y-z tail");

    if (g.n() != expected_total) fail("vertex count " + std::to_string(g.n()) +
                                      ", expected " + std::to_string(expected_total));
}

/// Schedule mirroring a set cover: w burns at index 0, y at index 1, and
/// index i takes the layer-i vertex of the i-th chosen set (the cover is
/// padded by repeating its first set when it is smaller than the budget).
/// Verification is left to the caller; a non-cover yields a schedule that
/// fails it.
inline BurningSchedule schedule_from_cover(const GadgetInstance& gi,
                                           const std::vector<int>& cover) {
    const int m = static_cast<int>(gi.source.sets.size());
    const int s = gi.source.budget;
    if (cover.empty() || static_cast<int>(cover.size()) > s)
        throw std::invalid_argument("cover size must be in 1.." + std::to_string(s));
    for (int q : cover)
        if (q < 0 || q >= m) throw std::invalid_argument("set index out of range");

    std::vector<int> chosen = cover;
    std::sort(chosen.begin(), chosen.end());
    while (static_cast<int>(chosen.size()) < s) chosen.push_back(chosen.front());

    BurningSchedule sched;
    sched.centers.assign(gi.k, gi.w);
    sched.centers[1] = gi.y;
    for (int i = 2; i <= gi.k - 1; ++i)
        sched.centers[i] = gi.layer(i).sets[chosen[i - 2]];
    return sched;
}

/// Dual-oracle comparison: the Set Cover answer against burnability of the
/// gadget in k rounds. Both answers come from exact solvers, so any
/// disagreement is a hard failure in the construction or a solver.
struct ReductionEquivalenceReport {
    bool sc_answer = false;
    bool gb_answer = false;
    std::optional<std::vector<int>> cover;
    std::optional<BurningSchedule> schedule;
    int gadget_order = 0;
    int k = 0;
    bool agree() const { return sc_answer == gb_answer; }
};

inline ReductionEquivalenceReport check_reduction_equivalence(const SetCoverInstance& inst) {
    ReductionEquivalenceReport rep;
    rep.cover = set_cover_exact(inst);
    rep.sc_answer = rep.cover.has_value();

    GadgetInstance gi = setcover_to_burning(inst);
    rep.gadget_order = gi.graph.n();
    rep.k = gi.k;
    rep.schedule = decide_burning_exact(gi.graph, gi.k);
    rep.gb_answer = rep.schedule.has_value();
    return rep;
}

/// Counts for the kernel-size argument: the set vertices across all layers
/// form an independent set, everything else is a vertex cover, and the
/// predicted size is 4 + (k-1)|U| + sum_{2<=i<=k-1} (i+2)(2i-2). Whether the
/// prediction matches is reported, not enforced.
struct VertexCoverAccounting {
    int independent_set_size = 0;
    int vc_size = 0;
    int predicted = 0;
    bool independent_ok = false;
    bool matches() const { return vc_size == predicted; }
};

inline VertexCoverAccounting vertex_cover_accounting(const GadgetInstance& gi) {
    VertexCoverAccounting acc;
    std::vector<int> indep = gi.all_set_vertices();
    acc.independent_set_size = static_cast<int>(indep.size());
    acc.vc_size = gi.graph.n() - acc.independent_set_size;

    acc.independent_ok = true;
    for (std::size_t a = 0; a < indep.size() && acc.independent_ok; ++a)
        for (std::size_t b = a + 1; b < indep.size(); ++b)
            if (gi.graph.has_edge(indep[a], indep[b])) {
                acc.independent_ok = false;
                break;
            }

    acc.predicted = 4 + (gi.k - 1) * gi.source.universe_size;
    for (int i = 2; i <= gi.k - 1; ++i) acc.predicted += (i + 2) * (2 * i - 2);
    return acc;
}

/// Longest induced path against the bound 4k-4; graphs above the size cap
/// are skipped (checked = false) because the underlying search is
/// exponential.
struct InducedPathCheck {
    int longest = 0;
    int bound = 0;
    bool checked = false;
    bool within_bound() const { return longest <= bound; }
};

inline InducedPathCheck induced_path_bound_check(const GadgetInstance& gi,
                                                 int size_cap = 25) {
    InducedPathCheck out;
    out.bound = 4 * gi.k - 4;
    if (gi.graph.n() > size_cap) return out;
    out.longest = longest_induced_path(gi.graph, out.bound + 1);
    out.checked = true;
    return out;
}

inline void write_role_labels(const GadgetInstance& gi, std::ostream& os) {
    for (std::size_t v = 0; v < gi.roles.size(); ++v)
        os << v << '\t' << gi.roles[v].label() << '\n';
}

}  // namespace gburn
