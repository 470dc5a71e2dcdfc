#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gburn/graph.hpp"

namespace gburn {

/// A split graph is one whose vertex set partitions into a clique and an
/// independent set; equivalently, a graph with no induced 2K2, C4, or C5.
enum class ForbiddenKind { two_k2, c4, c5 };

struct ForbiddenSubgraph {
    ForbiddenKind kind;
    std::vector<int> vertices; // ascending
};

namespace detail {

inline int edges_among(const Graph& g, const int* vs, int cnt) {
    int e = 0;
    for (int i = 0; i < cnt; ++i)
        for (int j = i + 1; j < cnt; ++j)
            if (g.has_edge(vs[i], vs[j])) ++e;
    return e;
}

inline bool induced_is_2k2(const Graph& g, const std::array<int, 4>& v) {
    if (edges_among(g, v.data(), 4) != 2) return false;
    // two edges must form a perfect matching on the four vertices
    for (int i = 0; i < 4; ++i) {
        int d = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i && g.has_edge(v[i], v[j])) ++d;
        if (d != 1) return false;
    }
    return true;
}

inline bool induced_is_c4(const Graph& g, const std::array<int, 4>& v) {
    if (edges_among(g, v.data(), 4) != 4) return false;
    for (int i = 0; i < 4; ++i) {
        int d = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i && g.has_edge(v[i], v[j])) ++d;
        if (d != 2) return false;
    }
    return true;
}

inline bool induced_is_c5(const Graph& g, const std::array<int, 5>& v) {
    if (edges_among(g, v.data(), 5) != 5) return false;
    for (int i = 0; i < 5; ++i) {
        int d = 0;
        for (int j = 0; j < 5; ++j)
            if (j != i && g.has_edge(v[i], v[j])) ++d;
        if (d != 2) return false;
    }
    // a 2-regular simple graph on 5 vertices is a single 5-cycle
    return true;
}

}  // namespace detail

/// First (lexicographically smallest) induced 2K2/C4 over 4-subsets, then C5
/// over 5-subsets, restricted to vertices marked in `alive`.
inline std::optional<ForbiddenSubgraph> find_forbidden_subgraph(const Graph& g,
                                                               const Bitset& alive) {
    std::vector<int> vs;
    vs.reserve(g.n());
    alive.for_each([&](std::size_t v) { vs.push_back(static_cast<int>(v)); });
    const int c = static_cast<int>(vs.size());

    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            for (int x = b + 1; x < c; ++x)
                for (int y = x + 1; y < c; ++y) {
                    std::array<int, 4> q{vs[a], vs[b], vs[x], vs[y]};
                    if (detail::induced_is_2k2(g, q))
                        return ForbiddenSubgraph{ForbiddenKind::two_k2,
                                                 {q.begin(), q.end()}};
                    if (detail::induced_is_c4(g, q))
                        return ForbiddenSubgraph{ForbiddenKind::c4, {q.begin(), q.end()}};
                }
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            for (int x = b + 1; x < c; ++x)
                for (int y = x + 1; y < c; ++y)
                    for (int z = y + 1; z < c; ++z) {
                        std::array<int, 5> q{vs[a], vs[b], vs[x], vs[y], vs[z]};
                        if (detail::induced_is_c5(g, q))
                            return ForbiddenSubgraph{ForbiddenKind::c5,
                                                     {q.begin(), q.end()}};
                    }
    return std::nullopt;
}

inline std::optional<ForbiddenSubgraph> find_forbidden_subgraph(const Graph& g) {
    Bitset alive(static_cast<std::size_t>(g.n()));
    alive.set_all();
    return find_forbidden_subgraph(g, alive);
}

inline bool is_split_graph(const Graph& g) { return !find_forbidden_subgraph(g); }

struct SplitPartitionResult {
    bool is_split = false;
    std::vector<int> clique;
    std::vector<int> independent;
    std::array<int, 2> offending{-1, -1}; // witness pair when not split
};

/// Greedy partition: visit vertices by minimum degree (smallest id on ties)
/// and add each to the independent side unless it conflicts with an earlier
/// pick; the remainder is the clique candidate, grown by independent vertices
/// adjacent to all of it. On a split graph this is always valid: a clique
/// vertex with a neighbour on the independent side has strictly larger degree
/// than that neighbour, so it can never be picked first and block it.
/// Otherwise validation reports an offending clique-side pair.
inline SplitPartitionResult greedy_split_partition(const Graph& g) {
    SplitPartitionResult res;
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });

    Bitset indep(static_cast<std::size_t>(g.n()));
    for (int v : order) {
        if (!g.neighbor_bits(v).intersects(indep)) {
            indep.set(v);
            res.independent.push_back(v);
        } else {
            res.clique.push_back(v);
        }
    }
    std::sort(res.clique.begin(), res.clique.end());
    std::sort(res.independent.begin(), res.independent.end());

    // clique side complete? independent side is conflict-free by construction
    for (std::size_t i = 0; i < res.clique.size(); ++i)
        for (std::size_t j = i + 1; j < res.clique.size(); ++j)
            if (!g.has_edge(res.clique[i], res.clique[j])) {
                res.offending = {res.clique[i], res.clique[j]};
                return res;
            }

    // absorb independent vertices adjacent to the whole clique (maximality)
    for (std::size_t i = 0; i < res.independent.size();) {
        int v = res.independent[i];
        bool full = true;
        for (int u : res.clique)
            if (!g.has_edge(u, v)) {
                full = false;
                break;
            }
        if (full) {
            res.clique.insert(
                std::lower_bound(res.clique.begin(), res.clique.end(), v), v);
            res.independent.erase(res.independent.begin() +
                                  static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    res.is_split = true;
    return res;
}

/// Vertex classes used by the split-distance solver. All ids refer to the
/// original graph. `deletion_set` is S with G-S split; the remaining vertices
/// fall into the clique side, independent vertices with a clique neighbour,
/// independent vertices whose neighbours all lie in S, and isolated vertices.
struct SplitDecomposition {
    std::vector<int> deletion_set;
    std::vector<int> clique;
    std::vector<int> indep_clique;   // independent side, has a neighbour in the clique
    std::vector<int> indep_deletion; // independent side, neighbours only in S
    std::vector<int> isolated;       // degree 0 in the whole graph
};

}  // namespace gburn
