#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gburn/disjoint_sets.hpp"
#include "gburn/exact.hpp"
#include "gburn/graph_algo.hpp"
#include "gburn/schedule.hpp"

namespace gburn {

/// Can a connected graph be covered by one ball per radius in `radii`
/// (distinct, ascending)? Returns (radius, vertex) pairs on success.
/// Centers may repeat; wasted radii are legal in a burning schedule.
inline std::optional<std::vector<std::pair<int, int>>> radius_cover_search(
    const Graph& g, const std::vector<int>& radii) {
    const int n = g.n();
    if (n == 0) return std::vector<std::pair<int, int>>{};
    if (radii.empty()) return std::nullopt;

    // largest radius first: big balls shrink the uncovered set fastest
    std::vector<int> order(radii.rbegin(), radii.rend());
    BallTable balls(g, order.front());

    // best ball size per radius, suffix-summed for the coverage prune
    std::vector<std::size_t> suffix(order.size() + 1, 0);
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
        std::size_t best = 0;
        for (int v = 0; v < n; ++v) best = std::max(best, balls.at(v, order[idx]).count());
        suffix[idx] = suffix[idx + 1] + best;
    }

    std::vector<std::pair<int, int>> assignment;
    std::vector<std::unordered_set<Bitset, BitsetHash>> visited(order.size());

    auto rec = [&](auto&& self, std::size_t idx, const Bitset& covered) -> bool {
        if (covered.count() == static_cast<std::size_t>(n)) {
            for (std::size_t j = idx; j < order.size(); ++j) assignment.emplace_back(order[j], 0);
            return true;
        }
        if (idx == order.size()) return false;
        if (covered.count() + suffix[idx] < static_cast<std::size_t>(n)) return false;
        if (!visited[idx].insert(covered).second) return false;

        struct Cand {
            int v;
            std::size_t gain;
        };
        std::vector<Cand> cands;
        cands.reserve(n);
        for (int v = 0; v < n; ++v) {
            std::size_t gain = balls.at(v, order[idx]).count() -
                               balls.at(v, order[idx]).intersect_count(covered);
            if (gain > 0) cands.push_back({v, gain});
        }
        if (cands.empty()) cands.push_back({0, 0}); // all choices equivalent here
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Cand& a, const Cand& b) { return a.gain > b.gain; });
        for (const Cand& c : cands) {
            assignment.emplace_back(order[idx], c.v);
            Bitset next = covered;
            next |= balls.at(c.v, order[idx]);
            if (self(self, idx + 1, next)) return true;
            assignment.pop_back();
        }
        return false;
    };

    Bitset covered(static_cast<std::size_t>(n));
    if (!rec(rec, 0, covered)) return std::nullopt;
    return assignment;
}

/// Builds the packing instance behind the multi-component route for round
/// count k. Requires k >= p and k > max component diameter d. Radii
/// 0..d-1 are the scarce ones; radii >= d burn a whole component from any
/// center, and exactly k - d of those exist. A k-round schedule exists iff
/// t = p - k + d components can be burned with pairwise-disjoint sets of
/// scarce radii, which is exactly a size-t disjoint-member packing.
inline DisjointSetsInstance build_disjoint_sets(const Graph& g,
                                                const ComponentDecomposition& decomp, int k,
                                                bool minimal_only = false) {
    const int p = decomp.p();
    const int d = decomp.max_diameter();
    if (k < p) throw std::invalid_argument("components route needs k >= component count");
    if (k <= d) throw std::invalid_argument("components route needs k > max component diameter");
    if (d > 20) throw capacity_error("components route caps max component diameter at 20");

    DisjointSetsInstance inst;
    inst.radius_count = d;
    inst.universe_size = d + p;
    inst.target = p - k + d;
    if (inst.target <= 0) return inst;

    const uint32_t full = d > 0 ? (uint32_t{1} << d) - 1 : 0;
    for (int q = 0; q < p; ++q) {
        Subgraph sub = induced_subgraph(g, decomp.components[q]);
        // witness per coverable radius mask; coverability is monotone, so a
        // superset inherits a submask witness plus wasted extra radii
        std::vector<std::optional<std::vector<std::pair<int, int>>>> witness(full + 1);
        for (uint32_t mask = 1; mask <= full; ++mask) {
            bool inherited = false;
            for (int i = 0; i < d && !inherited; ++i) {
                if (!(mask & (uint32_t{1} << i))) continue;
                uint32_t sub_mask = mask & ~(uint32_t{1} << i);
                if (sub_mask != 0 && witness[sub_mask]) {
                    witness[mask] = *witness[sub_mask];
                    witness[mask]->emplace_back(i, 0);
                    inherited = true;
                }
            }
            if (!inherited) {
                std::vector<int> radii;
                for (int i = 0; i < d; ++i)
                    if (mask & (uint32_t{1} << i)) radii.push_back(i);
                witness[mask] = radius_cover_search(sub.graph, radii);
            }
            if (!witness[mask]) continue;
            if (minimal_only && inherited) continue;

            DisjointSetsInstance::Member mem;
            mem.component = q;
            mem.elements = Bitset(static_cast<std::size_t>(inst.universe_size));
            for (int i = 0; i < d; ++i)
                if (mask & (uint32_t{1} << i)) {
                    mem.elements.set(i);
                    mem.radii.push_back(i);
                }
            mem.elements.set(static_cast<std::size_t>(d + q));
            for (auto [radius, local] : *witness[mask])
                mem.centers.emplace_back(radius, sub.to_original[local]);
            inst.family.push_back(std::move(mem));
        }
    }
    return inst;
}

struct ComponentsOptions {
    bool use_color_coding = false;
    int trials = 0; // 0 picks the default count
    uint64_t seed = 0;
    bool minimal_family = false;
};

/// Decides k-round burnability by splitting the graph into components.
/// Small k delegates to the exact solver; otherwise the disjoint-member
/// packing above settles the question. The family only depends on the
/// graph, so one solver instance can scan many k values cheaply.
class ComponentsSolver {
  public:
    // The graph must outlive the solver; a temporary would dangle.
    explicit ComponentsSolver(Graph&&) = delete;

    explicit ComponentsSolver(const Graph& g) : g_(&g), decomp_(connected_components(g)) {}

    const ComponentDecomposition& decomposition() const { return decomp_; }

    std::optional<BurningSchedule> solve(int k, const ComponentsOptions& opts = {}) {
        if (k <= 0) return std::nullopt;
        if (g_->n() == 0) return BurningSchedule{};
        const int p = decomp_.p();
        const int d = decomp_.max_diameter();
        if (k < p) return std::nullopt;
        if (k <= d) return decide_burning_exact(*g_, k);

        DisjointSetsInstance inst = family(opts.minimal_family);
        inst.target = p - k + d;
        std::optional<std::vector<int>> picked;
        if (inst.target <= 0) {
            picked.emplace();
        } else if (opts.use_color_coding) {
            int trials = opts.trials > 0 ? opts.trials : default_color_coding_trials(inst);
            picked = disjoint_sets_color_coding(inst, trials, opts.seed);
        } else {
            picked = disjoint_sets_exact(inst);
        }
        if (!picked) return std::nullopt;
        return assemble(k, inst, *picked);
    }

  private:
    // built once at the smallest admissible k so the family is complete;
    // only the target varies with k
    DisjointSetsInstance family(bool minimal) {
        if (!family_built_ || family_minimal_ != minimal) {
            int k0 = std::max(decomp_.p(), decomp_.max_diameter() + 1);
            cached_ = build_disjoint_sets(*g_, decomp_, k0, minimal);
            family_built_ = true;
            family_minimal_ = minimal;
        }
        return cached_;
    }

    BurningSchedule assemble(int k, const DisjointSetsInstance& inst,
                             const std::vector<int>& picked) const {
        const int d = decomp_.max_diameter();
        BurningSchedule sched;
        sched.centers.assign(k, 0);
        std::vector<char> placed(k, 0), burned(decomp_.p(), 0);
        for (int j : picked) {
            const auto& mem = inst.family[j];
            burned[mem.component] = 1;
            for (auto [radius, vertex] : mem.centers) {
                sched.centers[radius] = vertex;
                placed[radius] = 1;
            }
        }
        // every component without scarce radii gets one whole-burn radius >= d
        int next = d;
        for (int q = 0; q < decomp_.p(); ++q) {
            if (burned[q]) continue;
            sched.centers[next] = decomp_.components[q].front();
            placed[next] = 1;
            ++next;
        }
        (void)placed; // leftover radii keep center 0; waste is legal
        VerifyResult vr = verify_schedule(*g_, sched);
        if (!vr.ok) throw std::logic_error("components route assembled an invalid schedule");
        return sched;
    }

    const Graph* g_;
    ComponentDecomposition decomp_;
    bool family_built_ = false;
    bool family_minimal_ = false;
    DisjointSetsInstance cached_;
};

inline std::optional<BurningSchedule> decide_burning_components(
    const Graph& g, int k, const ComponentsOptions& opts = {}) {
    ComponentsSolver solver(g);
    return solver.solve(k, opts);
}

}  // namespace gburn
