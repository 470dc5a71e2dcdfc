#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "gburn/graph.hpp"

namespace gburn {

/// Sentinel for "no path". Only compared against, never used in arithmetic.
inline constexpr int unreachable = std::numeric_limits<int>::max();

inline bool is_reachable(int dist) { return dist != unreachable; }

inline std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.n())
        throw std::invalid_argument("bfs source out of range");
    std::vector<int> dist(g.n(), unreachable);
    std::vector<int> queue;
    queue.reserve(g.n());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : g.neighbors(u)) {
            if (dist[v] == unreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

/// Closed ball N_d[v]: all vertices within distance d of v.
inline Bitset ball(const Graph& g, int v, int d) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("ball center out of range");
    if (d < 0) throw std::invalid_argument("ball radius must be >= 0");
    Bitset out(static_cast<std::size_t>(g.n()));
    std::vector<int> frontier{v}, next;
    out.set(v);
    for (int r = 0; r < d && !frontier.empty(); ++r) {
        next.clear();
        for (int u : frontier) {
            for (int w : g.neighbors(u)) {
                if (!out.test(w)) {
                    out.set(w);
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    return out;
}

/// Precomputed balls for all vertices and radii 0..max_radius.
/// Radii beyond max_radius clamp to the largest table entry, which already
/// equals the full reachable set once max_radius covers the eccentricities.
class BallTable {
public:
    BallTable(const Graph& g, int max_radius) : n_(g.n()), max_radius_(max_radius) {
        balls_.resize(static_cast<std::size_t>(max_radius_ + 1));
        balls_[0].reserve(n_);
        for (int v = 0; v < n_; ++v) {
            Bitset b(static_cast<std::size_t>(n_));
            b.set(v);
            balls_[0].push_back(std::move(b));
        }
        for (int r = 1; r <= max_radius_; ++r) {
            balls_[r] = balls_[r - 1];
            for (int v = 0; v < n_; ++v) {
                Bitset& b = balls_[r][v];
                for (int u : g.neighbors(v)) b |= balls_[r - 1][u];
            }
        }
    }

    const Bitset& at(int v, int radius) const {
        return balls_[std::min(radius, max_radius_)][v];
    }
    int max_radius() const { return max_radius_; }

private:
    int n_;
    int max_radius_;
    std::vector<std::vector<Bitset>> balls_;
};

/// Component count only; avoids the all-sources diameter sweep.
inline int component_count(const Graph& g) {
    std::vector<char> seen(g.n(), 0);
    int p = 0;
    std::vector<int> queue;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        ++p;
        seen[s] = 1;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int v : g.neighbors(queue[head]))
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
    }
    return p;
}

struct ComponentDecomposition {
    std::vector<std::vector<int>> components; // each sorted ascending
    std::vector<int> component_of;
    std::vector<int> diameters; // exact diameter per component (0 for singletons)
    int p() const { return static_cast<int>(components.size()); }
    int max_diameter() const {
        int d = 0;
        for (int x : diameters) d = std::max(d, x);
        return d;
    }
};

inline ComponentDecomposition connected_components(const Graph& g) {
    ComponentDecomposition out;
    out.component_of.assign(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (out.component_of[s] != -1) continue;
        int id = out.p();
        std::vector<int> comp{s}, queue{s};
        out.component_of[s] = id;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (int v : g.neighbors(queue[head])) {
                if (out.component_of[v] == -1) {
                    out.component_of[v] = id;
                    comp.push_back(v);
                    queue.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }
    for (const auto& comp : out.components) {
        int diam = 0;
        for (int v : comp) {
            auto dist = bfs_distances(g, v);
            for (int u : comp)
                if (dist[u] != unreachable) diam = std::max(diam, dist[u]);
        }
        out.diameters.push_back(diam);
    }
    return out;
}

/// Longest induced path, in vertices, computed exactly up to `cap`.
/// Returns cap when a path of cap vertices exists (there may be longer ones).
/// Exponential search; intended for graphs of roughly 25 vertices or fewer.
inline int longest_induced_path(const Graph& g, int cap) {
    if (cap <= 0) return 0;
    int best = g.n() > 0 ? 1 : 0;
    std::vector<int> path;
    Bitset on_path(static_cast<std::size_t>(g.n()));
    Bitset blocked(static_cast<std::size_t>(g.n())); // adjacent to a non-tip path vertex

    auto dfs = [&](auto&& self, int tip) -> bool {
        best = std::max(best, static_cast<int>(path.size()));
        if (best >= cap) return true;
        for (int v : g.neighbors(tip)) {
            if (on_path.test(v) || blocked.test(v)) continue;
            // v extends the path; tip's other neighbours become forbidden
            std::vector<int> newly_blocked;
            for (int w : g.neighbors(tip)) {
                if (w != v && !blocked.test(w)) {
                    blocked.set(w);
                    newly_blocked.push_back(w);
                }
            }
            path.push_back(v);
            on_path.set(v);
            bool done = self(self, v);
            on_path.reset(v);
            path.pop_back();
            for (int w : newly_blocked) blocked.reset(w);
            if (done) return true;
        }
        return false;
    };

    for (int s = 0; s < g.n(); ++s) {
        path.assign(1, s);
        on_path.clear();
        blocked.clear();
        on_path.set(s);
        if (dfs(dfs, s)) return cap;
    }
    return best;
}

}  // namespace gburn
