#pragma once

// Independent reference implementations for cross-checking the library.
// Everything here is exhaustive and only touches Graph adjacency, so a bug
// in the fast code paths cannot hide in its own oracle.

#include <algorithm>
#include <optional>
#include <vector>

#include "gburn/graph.hpp"
#include "gburn/set_cover.hpp"

namespace oracle {

inline constexpr int kFar = 1 << 29;

/// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<int>> all_distances(const gburn::Graph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
    return d;
}

inline bool schedule_valid(const std::vector<std::vector<int>>& dist,
                           const std::vector<int>& centers) {
    const int n = static_cast<int>(dist.size());
    for (int u = 0; u < n; ++u) {
        bool covered = false;
        for (std::size_t i = 0; i < centers.size() && !covered; ++i)
            covered = dist[centers[i]][u] <= static_cast<int>(i);
        if (!covered) return false;
    }
    return true;
}

/// Every valid length-k schedule, by full enumeration of the n^k center
/// tuples (repetition allowed). Only for small n and k.
inline std::vector<std::vector<int>> all_valid_schedules(const gburn::Graph& g, int k) {
    auto dist = all_distances(g);
    std::vector<std::vector<int>> found;
    std::vector<int> centers(k, 0);
    while (true) {
        if (schedule_valid(dist, centers)) found.push_back(centers);
        int i = k - 1;
        while (i >= 0 && centers[i] == g.n() - 1) centers[i--] = 0;
        if (i < 0) break;
        ++centers[i];
    }
    return found;
}

inline bool burnable(const gburn::Graph& g, int k) {
    if (g.n() == 0) return true;
    auto dist = all_distances(g);
    std::vector<int> centers(k, 0);
    while (true) {
        if (schedule_valid(dist, centers)) return true;
        int i = k - 1;
        while (i >= 0 && centers[i] == g.n() - 1) centers[i--] = 0;
        if (i < 0) return false;
        ++centers[i];
    }
}

inline int burning_number(const gburn::Graph& g) {
    for (int k = 1;; ++k)
        if (burnable(g, k)) return k;
}

/// Minimum cover size over all subfamilies, or nothing when infeasible.
/// Ignores the instance budget. Only for small set counts.
inline std::optional<int> min_cover_size(const gburn::SetCoverInstance& inst) {
    const int m = static_cast<int>(inst.sets.size());
    std::optional<int> best;
    for (unsigned long long pick = 0; pick < (1ull << m); ++pick) {
        gburn::Bitset covered(static_cast<std::size_t>(inst.universe_size));
        int size = 0;
        for (int j = 0; j < m; ++j)
            if (pick >> j & 1) {
                covered |= inst.sets[j];
                ++size;
            }
        if (static_cast<int>(covered.count()) == inst.universe_size)
            if (!best || size < *best) best = size;
    }
    return best;
}

inline bool is_clique(const gburn::Graph& g, const std::vector<int>& vs) {
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (!g.has_edge(vs[a], vs[b])) return false;
    return true;
}

inline bool is_independent(const gburn::Graph& g, const std::vector<int>& vs) {
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (g.has_edge(vs[a], vs[b])) return false;
    return true;
}

/// Longest induced path in vertices by subset enumeration; only for n <= ~15.
inline int longest_induced_path(const gburn::Graph& g) {
    const int n = g.n();
    int best = 0;
    for (unsigned long long pick = 1; pick < (1ull << n); ++pick) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (pick >> v & 1) vs.push_back(v);
        const int s = static_cast<int>(vs.size());
        if (s <= best) continue;

        int edges = 0;
        std::vector<int> deg(s, 0);
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b)
                if (g.has_edge(vs[a], vs[b])) {
                    ++edges;
                    ++deg[a];
                    ++deg[b];
                }
        if (edges != s - 1) continue;
        int ones = 0;
        bool ok = true;
        for (int a = 0; a < s; ++a) {
            if (deg[a] > 2) ok = false;
            if (deg[a] == 1) ++ones;
            if (s > 1 && deg[a] == 0) ok = false;
        }
        if (!ok || (s >= 2 && ones != 2)) continue;

        // connected + tree edge count + max degree 2 => a path
        std::vector<int> stack{0};
        std::vector<char> seen(s, 0);
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < s; ++b)
                if (!seen[b] && g.has_edge(vs[a], vs[b])) {
                    seen[b] = 1;
                    ++reached;
                    stack.push_back(b);
                }
        }
        if (reached == s) best = s;
    }
    return best;
}

}  // namespace oracle
