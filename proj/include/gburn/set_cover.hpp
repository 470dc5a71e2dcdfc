#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gburn/bitset.hpp"
#include "gburn/graph.hpp"

namespace gburn {

struct SetCoverInstance {
    int universe_size = 0;
    std::vector<Bitset> sets; // each a subset of {0..universe_size-1}
    int budget = 0;
    std::vector<std::string> labels; // optional, parallel to sets when present
};

/// Text format: first non-comment line "n m s", then m lines, each the
/// 1-indexed elements of one set (a blank data line is an empty set).
/// Lines starting with '#' are comments.
inline SetCoverInstance load_set_cover(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool header = false;
    SetCoverInstance inst;
    long long n = 0, m = 0, s = 0;
    int sets_read = 0;
    while (sets_read < m || !header) {
        if (!std::getline(in, line)) {
            if (!header) throw parse_error("empty set cover file");
            throw parse_error("expected " + std::to_string(m) + " set lines, got " +
                              std::to_string(sets_read));
        }
        ++lineno;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i != std::string::npos && line[i] == '#') continue;
        std::istringstream ls(line);
        if (!header) {
            if (i == std::string::npos) continue; // blank before the header
            if (!(ls >> n >> m >> s) || n < 1 || m < 1 || s < 1)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": expected header 'n m s' with positive values");
            inst.universe_size = static_cast<int>(n);
            inst.budget = static_cast<int>(s);
            header = true;
            continue;
        }
        Bitset set(static_cast<std::size_t>(n));
        long long e;
        while (ls >> e) {
            if (e < 1 || e > n)
                throw parse_error("line " + std::to_string(lineno) + ": element " +
                                  std::to_string(e) + " outside 1.." + std::to_string(n));
            set.set(static_cast<std::size_t>(e - 1));
        }
        inst.sets.push_back(std::move(set));
        ++sets_read;
    }
    return inst;
}

inline void write_set_cover(const SetCoverInstance& inst, std::ostream& out) {
    out << inst.universe_size << ' ' << inst.sets.size() << ' ' << inst.budget << '\n';
    for (const Bitset& set : inst.sets) {
        bool first = true;
        set.for_each([&](std::size_t e) {
            if (!first) out << ' ';
            out << e + 1;
            first = false;
        });
        out << '\n';
    }
}

namespace detail {

struct ReducedCover {
    std::vector<int> elements;  // kept original elements
    std::vector<int> set_ids;   // kept original set indices
    std::vector<uint32_t> masks; // kept sets over kept elements
};

/// Sound preprocessing for minimum-cardinality set cover:
///  - drop element e when some other element f is covered by a subset of e's
///    sets (covering f then always covers e);
///  - drop set j when another kept set contains it (the superset can always
///    stand in for it).
/// Neither step changes the optimum or invalidates returned indices.
inline ReducedCover reduce_cover(const SetCoverInstance& inst) {
    const int u = inst.universe_size;
    const int m = static_cast<int>(inst.sets.size());
    std::vector<Bitset> covered_by(u, Bitset(static_cast<std::size_t>(m)));
    for (int j = 0; j < m; ++j)
        inst.sets[j].for_each([&](std::size_t e) { covered_by[e].set(j); });

    std::vector<bool> keep_elem(u, true);
    for (int e = 0; e < u; ++e) {
        for (int f = 0; f < u && keep_elem[e]; ++f) {
            if (f == e || !keep_elem[f]) continue;
            if (covered_by[f].is_subset_of(covered_by[e]) &&
                (covered_by[f] != covered_by[e] || f < e))
                keep_elem[e] = false;
        }
    }

    ReducedCover red;
    std::vector<int> elem_pos(u, -1);
    for (int e = 0; e < u; ++e)
        if (keep_elem[e]) {
            elem_pos[e] = static_cast<int>(red.elements.size());
            red.elements.push_back(e);
        }

    std::vector<uint32_t> all_masks(m, 0);
    for (int j = 0; j < m; ++j)
        inst.sets[j].for_each([&](std::size_t e) {
            if (elem_pos[e] >= 0) all_masks[j] |= uint32_t{1} << elem_pos[e];
        });
    std::vector<bool> keep_set(m, true);
    for (int j = 0; j < m; ++j) {
        for (int j2 = 0; j2 < m && keep_set[j]; ++j2) {
            if (j2 == j || !keep_set[j2]) continue;
            bool subset = (all_masks[j] & ~all_masks[j2]) == 0;
            if (subset && (all_masks[j] != all_masks[j2] || j2 < j)) keep_set[j] = false;
        }
    }
    for (int j = 0; j < m; ++j)
        if (keep_set[j]) {
            red.set_ids.push_back(j);
            red.masks.push_back(all_masks[j]);
        }
    return red;
}

}  // namespace detail

/// Exact minimum set cover by dynamic programming over universe subsets:
/// per-mask minimum set count plus a backpointer. Returns a minimum cover
/// (original set indices) when its size is within budget, otherwise nothing.
/// Hard capacity limit: universe_size <= 30.
inline std::optional<std::vector<int>> set_cover_exact(const SetCoverInstance& inst) {
    if (inst.universe_size > 30)
        throw capacity_error("set cover universe too large: " +
                             std::to_string(inst.universe_size) + " > 30");
    if (inst.universe_size < 0 || inst.budget < 0)
        throw std::invalid_argument("bad set cover instance");
    for (const auto& s : inst.sets)
        if (s.size() != static_cast<std::size_t>(inst.universe_size))
            throw std::invalid_argument("set width does not match universe");

    auto red = detail::reduce_cover(inst);
    const int u = static_cast<int>(red.elements.size());
    const uint32_t full = u == 32 ? ~uint32_t{0} : (uint32_t{1} << u) - 1;
    if (full == 0) return std::vector<int>{};

    // sets that cover each reduced element
    std::vector<std::vector<int>> by_elem(u);
    for (std::size_t j = 0; j < red.masks.size(); ++j)
        for (int e = 0; e < u; ++e)
            if (red.masks[j] >> e & 1) by_elem[e].push_back(static_cast<int>(j));

    // one byte per mask keeps the table at 1 GiB even at the capacity limit;
    // the cover itself is rebuilt afterwards by re-scanning, no backpointers
    constexpr uint8_t kInf = 0xff;
    std::vector<uint8_t> dp(static_cast<std::size_t>(full) + 1, kInf);
    dp[0] = 0;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        int e = std::countr_zero(mask);
        for (int j : by_elem[e]) {
            uint32_t prev = mask & ~red.masks[j];
            if (dp[prev] == kInf) continue;
            uint8_t cand = static_cast<uint8_t>(dp[prev] + 1);
            if (cand < dp[mask]) dp[mask] = cand;
        }
    }

    if (dp[full] == kInf || dp[full] > inst.budget) return std::nullopt;
    std::vector<int> chosen;
    uint32_t mask = full;
    while (mask) {
        int e = std::countr_zero(mask);
        for (int j : by_elem[e]) {
            uint32_t prev = mask & ~red.masks[j];
            if (dp[prev] != kInf && dp[prev] + 1 == dp[mask]) {
                chosen.push_back(red.set_ids[j]);
                mask = prev;
                break;
            }
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace gburn
