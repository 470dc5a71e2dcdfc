#pragma once

#include <optional>
#include <string>

#include "gburn/approx.hpp"
#include "gburn/schedule.hpp"
#include "gburn/set_cover.hpp"

namespace gburn {

/// Decide whether g can be burned in exactly k rounds. Branch and bound that
/// assigns the largest radius first; candidate centers are those covering at
/// least one still-uncovered vertex, tried in order of decreasing new
/// coverage (smallest id on ties). Prunes a branch when even best-case balls
/// for the remaining radii cannot cover what is left. NO answers are
/// exhaustive. A shared ball table may be passed when scanning several k.
inline std::optional<BurningSchedule> decide_burning_exact(const Graph& g, int k,
                                                           const BallTable* shared = nullptr) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    if (component_count(g) > k) return std::nullopt; // each component needs a center

    std::optional<BallTable> local;
    if (!shared) local.emplace(g, k - 1);
    const BallTable& balls = shared ? *shared : *local;

    // best-case coverage per radius, prefix-summed over radii 0..i
    std::vector<long long> best_prefix(k, 0);
    for (int i = 0; i < k; ++i) {
        std::size_t best = 0;
        for (int v = 0; v < g.n(); ++v) best = std::max(best, balls.at(v, i).count());
        best_prefix[i] = static_cast<long long>(best) + (i ? best_prefix[i - 1] : 0);
    }

    std::vector<int> centers(k, -1);
    struct Cand {
        int v;
        std::size_t gain;
    };

    auto assign = [&](auto&& self, int i, const Bitset& uncovered) -> bool {
        if (uncovered.none()) {
            for (int j = i; j >= 0; --j) centers[j] = 0;
            return true;
        }
        if (i < 0) return false;
        if (best_prefix[i] < static_cast<long long>(uncovered.count())) return false;

        std::vector<Cand> cands;
        for (int v = 0; v < g.n(); ++v) {
            std::size_t gain = balls.at(v, i).intersect_count(uncovered);
            if (gain > 0) cands.push_back({v, gain});
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Cand& a, const Cand& b) { return a.gain > b.gain; });
        for (const Cand& c : cands) {
            centers[i] = c.v;
            Bitset rest = uncovered;
            rest.subtract(balls.at(c.v, i));
            if (self(self, i - 1, rest)) return true;
        }
        centers[i] = -1;
        return false;
    };

    Bitset all(static_cast<std::size_t>(g.n()));
    all.set_all();
    if (!assign(assign, k - 1, all)) return std::nullopt;
    return BurningSchedule{centers};
}

struct BurningNumberResult {
    int burning_number = 0;
    BurningSchedule schedule;
};

/// Minimum schedule length: scan k upward from the component-count lower
/// bound, capped by the factor-3 upper bound, and return the first YES.
inline BurningNumberResult burning_number_exact(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    int lb = std::max(1, component_count(g));
    int ub = approx_burn(g).k_upper;
    BallTable balls(g, ub - 1);
    for (int k = lb; k <= ub; ++k) {
        if (auto sched = decide_burning_exact(g, k, &balls))
            return BurningNumberResult{k, *sched};
    }
    throw std::logic_error("upper bound failed to burn"); // unreachable
}

/// Burning as set cover: universe is V plus one element per radius index
/// (vertex v -> element v, index i -> element n+i); one set per center/radius
/// pair, ordered index-major (set i*n+v is the ball of radius i around v plus
/// index element n+i); budget k.
inline SetCoverInstance encode_burning_as_set_cover(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    SetCoverInstance inst;
    inst.universe_size = g.n() + k;
    inst.budget = k;
    inst.sets.reserve(static_cast<std::size_t>(g.n()) * k);
    inst.labels.reserve(inst.sets.capacity());
    BallTable balls(g, k - 1);
    for (int i = 0; i < k; ++i) {
        for (int v = 0; v < g.n(); ++v) {
            Bitset s(static_cast<std::size_t>(inst.universe_size));
            balls.at(v, i).for_each([&](std::size_t x) { s.set(x); });
            s.set(static_cast<std::size_t>(g.n() + i));
            inst.sets.push_back(std::move(s));
            inst.labels.push_back("v" + std::to_string(v) + "@r" + std::to_string(i));
        }
    }
    return inst;
}

/// Decision through the set-cover encoding; requires n+k <= 30. Every chosen
/// set carries exactly one radius index, so a cover within budget assigns one
/// center per index. Indices left without a set (impossible for valid covers,
/// kept for robustness) fall back to vertex 0.
inline std::optional<BurningSchedule> decide_burning_via_set_cover(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (g.n() + k > 30)
        throw capacity_error("set-cover route needs n+k <= 30, got " +
                             std::to_string(g.n() + k));
    SetCoverInstance inst = encode_burning_as_set_cover(g, k);
    auto cover = set_cover_exact(inst);
    if (!cover) return std::nullopt;
    BurningSchedule sched;
    sched.centers.assign(k, 0);
    for (int idx : *cover) {
        int i = idx / g.n();
        int v = idx % g.n();
        sched.centers[i] = v;
    }
    if (!verify_schedule(g, sched).ok)
        throw std::logic_error("set-cover schedule failed verification");
    return sched;
}

}  // namespace gburn
