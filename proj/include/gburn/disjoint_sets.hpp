#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gburn/bitset.hpp"
#include "gburn/graph.hpp"

namespace gburn {

/// Packing instance: pick `target` pairwise-disjoint members of `family`.
/// Universe elements 0..radius_count-1 are radius indices; element
/// radius_count+q is the token of component q. Each member is one component
/// token plus the distinct radius indices that suffice to burn the component;
/// `centers` records a witnessing center per radius (original vertex ids).
struct DisjointSetsInstance {
    int universe_size = 0;
    int radius_count = 0; // universe elements below this are radius indices
    int target = 0;

    struct Member {
        Bitset elements;
        int component = -1;
        std::vector<int> radii; // ascending
        std::vector<std::pair<int, int>> centers; // (radius, vertex)
    };
    std::vector<Member> family;
};

/// Exhaustive search for `target` pairwise-disjoint members; returns member
/// indices (ascending) or nothing.
inline std::optional<std::vector<int>> disjoint_sets_exact(const DisjointSetsInstance& inst) {
    if (inst.target <= 0) return std::vector<int>{};
    const int m = static_cast<int>(inst.family.size());
    std::vector<int> chosen;

    auto rec = [&](auto&& self, int from, Bitset used, int need) -> bool {
        if (need == 0) return true;
        if (m - from < need) return false;
        for (int j = from; j < m; ++j) {
            if (inst.family[j].elements.intersects(used)) continue;
            chosen.push_back(j);
            Bitset next = used;
            next |= inst.family[j].elements;
            if (self(self, j + 1, std::move(next), need - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    Bitset used(static_cast<std::size_t>(inst.universe_size));
    if (!rec(rec, 0, used, inst.target)) return std::nullopt;
    return chosen;
}

/// Default trial count for the randomized solver: ceil(e^(t*s) * ln 100)
/// with s the largest member size, capped at 1e6.
inline int default_color_coding_trials(const DisjointSetsInstance& inst) {
    std::size_t max_size = 0;
    for (const auto& mem : inst.family) max_size = std::max(max_size, mem.elements.count());
    double exponent = static_cast<double>(inst.target) * static_cast<double>(max_size);
    if (exponent >= 14.0) return 1000000;
    double trials = std::ceil(std::exp(exponent) * std::log(100.0));
    return std::min(1000000, std::max(1, static_cast<int>(trials)));
}

/// Randomized color-coding solver. Each trial colors the universe with
/// t * max-member-size colors; members are mapped to their color sets and a
/// subset DP over color masks packs members with pairwise-disjoint colors
/// (disjoint colors force disjoint elements, so any answer is sound). A
/// present solution is found in a trial when its members receive pairwise
/// disjoint colors, so NOT_FOUND may be a false negative; the default trial
/// count keeps that probability near 1%. Per-trial seeds derive from
/// (seed, trial), so runs are reproducible.
inline std::optional<std::vector<int>> disjoint_sets_color_coding(
    const DisjointSetsInstance& inst, int trials, uint64_t seed) {
    if (inst.target <= 0) return std::vector<int>{};
    const int m = static_cast<int>(inst.family.size());
    if (m == 0) return std::nullopt;
    if (m > 32767) throw capacity_error("color coding caps the family at 32767 members");

    std::size_t max_size = 0;
    for (const auto& mem : inst.family) max_size = std::max(max_size, mem.elements.count());
    const int colors = static_cast<int>(static_cast<std::size_t>(inst.target) * max_size);
    if (colors > 26)
        throw capacity_error("color coding needs t * max-member-size <= 26, got " +
                             std::to_string(colors));

    const uint32_t full = (uint32_t{1} << colors) - 1;
    std::vector<int> color_of(inst.universe_size);
    std::vector<uint32_t> member_colors(m);
    std::vector<int8_t> dp(static_cast<std::size_t>(full) + 1);
    std::vector<int16_t> via(static_cast<std::size_t>(full) + 1);

    for (int trial = 0; trial < trials; ++trial) {
        std::seed_seq seq{seed, static_cast<uint64_t>(trial)};
        std::mt19937_64 rng(seq);
        std::uniform_int_distribution<int> pick(0, colors - 1);
        for (int e = 0; e < inst.universe_size; ++e) color_of[e] = pick(rng);
        for (int j = 0; j < m; ++j) {
            uint32_t cm = 0;
            inst.family[j].elements.for_each(
                [&](std::size_t e) { cm |= uint32_t{1} << color_of[e]; });
            member_colors[j] = cm;
        }

        dp[0] = 0;
        via[0] = -1;
        for (uint32_t mask = 1; mask <= full; ++mask) {
            uint32_t drop = mask & (mask - 1); // mask minus lowest color
            int8_t best = dp[drop];
            int16_t pick_j = -1;
            for (int j = 0; j < m; ++j) {
                uint32_t cm = member_colors[j];
                if ((cm & ~mask) != 0 || cm == 0) continue;
                int8_t cand = static_cast<int8_t>(dp[mask & ~cm] + 1);
                if (cand > best) {
                    best = cand;
                    pick_j = static_cast<int16_t>(j);
                }
            }
            dp[mask] = best;
            via[mask] = pick_j;
        }
        if (dp[full] < inst.target) continue;

        std::vector<int> chosen;
        uint32_t mask = full;
        while (static_cast<int>(chosen.size()) < inst.target) {
            if (via[mask] >= 0) {
                int j = via[mask];
                chosen.push_back(j);
                mask &= ~member_colors[j];
            } else {
                mask &= mask - 1; // dropping the lowest color preserved the optimum
            }
        }
        std::sort(chosen.begin(), chosen.end());
        // soundness check: genuinely pairwise disjoint
        Bitset used(static_cast<std::size_t>(inst.universe_size));
        for (int j : chosen) {
            if (inst.family[j].elements.intersects(used))
                throw std::logic_error("color coding produced overlapping members");
            used |= inst.family[j].elements;
        }
        return chosen;
    }
    return std::nullopt;
}

}  // namespace gburn
