#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gburn/graph.hpp"
#include "gburn/set_cover.hpp"

namespace gburn {

inline Graph path_graph(int n) {
    if (n < 0) throw std::invalid_argument("negative order");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    if (n < 0) throw std::invalid_argument("negative order");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Star with the centre at vertex 0.
inline Graph star_graph(int leaves) {
    if (leaves < 0) throw std::invalid_argument("negative leaf count");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

namespace detail {

// uniform double in [0,1) from the top 53 bits; identical on every platform
inline double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Erdos-Renyi G(n, p); every unordered pair is drawn once, in a fixed
/// order, so outputs are reproducible for a given seed.
inline Graph gnp(int n, double p, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative order");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (detail::unit_real(rng) < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Parts keep their internal ids, shifted by the sizes of earlier parts.
inline Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    for (const Graph& g : parts) {
        for (auto [u, v] : g.edges()) edges.emplace_back(n + u, n + v);
        n += g.n();
    }
    return Graph(n, edges);
}

/// Random Set Cover instance: m subsets of a ground set of n elements,
/// budget s. Each element joins each set with probability 1/2; empty draws
/// get one uniform element so every set is nonempty.
inline SetCoverInstance random_set_cover(int n, int m, int s, uint64_t seed) {
    if (n < 1 || m < 1 || s < 1) throw std::invalid_argument("set cover parameters must be positive");
    std::mt19937_64 rng(seed);
    SetCoverInstance inst;
    inst.universe_size = n;
    inst.budget = s;
    for (int j = 0; j < m; ++j) {
        Bitset set(static_cast<std::size_t>(n));
        for (int e = 0; e < n; ++e)
            if (detail::unit_real(rng) < 0.5) set.set(e);
        if (set.none()) set.set(static_cast<std::size_t>(detail::unit_real(rng) * n));
        inst.sets.push_back(std::move(set));
    }
    return inst;
}

/// Random split graph: a uniformly sized clique on the lowest ids, the rest
/// independent, cross edges with probability 1/2.
inline Graph random_split_graph(int n, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative order");
    std::mt19937_64 rng(seed);
    int clique = n == 0 ? 0 : static_cast<int>(detail::unit_real(rng) * (n + 1));
    if (clique > n) clique = n;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < clique; ++u)
        for (int v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
    for (int u = clique; u < n; ++u)
        for (int v = 0; v < clique; ++v)
            if (detail::unit_real(rng) < 0.5) edges.emplace_back(v, u);
    return Graph(n, edges);
}

/// Appends `extra` vertices, each adjacent to every older vertex with
/// probability 1/2; the result is within deletion distance `extra` of the
/// input graph's class.
inline Graph with_random_extra_vertices(const Graph& g, int extra, uint64_t seed) {
    if (extra < 0) throw std::invalid_argument("negative vertex count");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int i = 0; i < extra; ++i) {
        int v = g.n() + i;
        for (int u = 0; u < v; ++u)
            if (detail::unit_real(rng) < 0.5) edges.emplace_back(u, v);
    }
    return Graph(g.n() + extra, edges);
}

}  // namespace gburn
