#pragma once

#include <vector>

#include "gburn/schedule.hpp"

namespace gburn {

/// Outcome of one separation probe at parameter t.
/// accepted: every vertex is within distance 2t of some center, and there are
/// at most t centers. rejected: `witness` holds t+1 vertices with pairwise
/// distance greater than 2t, which rules out any burning schedule of length t.
struct SeparationProbe {
    int t = 0;
    bool accepted = false;
    std::vector<int> centers;
    std::vector<int> witness;
};

/// Greedy scan in vertex order: keep any vertex farther than 2t from all
/// previously kept ones (unreachable counts as far). Rejects as soon as t+1
/// vertices have been kept.
inline SeparationProbe separated_set_probe(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("probe parameter must be >= 1");
    SeparationProbe res;
    res.t = t;
    std::vector<int> chosen;
    std::vector<std::vector<int>> dist; // per chosen center
    for (int v = 0; v < g.n(); ++v) {
        bool far = true;
        for (const auto& d : dist) {
            if (d[v] <= 2 * t) { // unreachable compares greater
                far = false;
                break;
            }
        }
        if (!far) continue;
        chosen.push_back(v);
        if (static_cast<int>(chosen.size()) == t + 1) {
            res.witness = chosen;
            return res;
        }
        dist.push_back(bfs_distances(g, v));
    }
    res.accepted = true;
    res.centers = chosen;
    return res;
}

struct ApproxResult {
    int k_upper = 0;
    int t_star = 0; // smallest accepted probe parameter
    BurningSchedule schedule;
};

/// Factor-3 upper bound: scan t upward from max(1, component count); on the
/// first accepted probe place the c <= t centers at indices 3t-1 .. 3t-c so
/// each burns a ball of radius >= 2t, covering its cluster. The returned
/// schedule of length 3t always verifies, and a rejection at t-1 certifies
/// that the optimum exceeds t-1, giving ratio <= 3.
inline ApproxResult approx_burn(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    int p = component_count(g);
    for (int t = std::max(1, p);; ++t) {
        SeparationProbe probe = separated_set_probe(g, t);
        if (!probe.accepted) continue;
        ApproxResult res;
        res.t_star = t;
        res.k_upper = 3 * t;
        res.schedule.centers.assign(3 * t, probe.centers.front());
        for (std::size_t j = 0; j < probe.centers.size(); ++j)
            res.schedule.centers[3 * t - 1 - j] = probe.centers[j];
        return res;
    }
}

}  // namespace gburn
