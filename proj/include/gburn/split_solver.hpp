#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gburn/graph.hpp"
#include "gburn/graph_algo.hpp"
#include "gburn/schedule.hpp"
#include "gburn/set_cover.hpp"
#include "gburn/split_graph.hpp"

namespace gburn {

/// Bounded search tree for a deletion set of at most `budget` vertices whose
/// removal leaves a split graph. Branches over the (at most five) vertices of
/// the first forbidden occurrence, smallest occurrence first; states are
/// memoized on the surviving vertex set, which fixes the spent budget too.
inline std::optional<std::vector<int>> split_deletion_set(const Graph& g, int budget) {
    if (budget < 0) throw std::invalid_argument("negative deletion budget");
    Bitset alive(static_cast<std::size_t>(g.n()));
    alive.set_all();
    std::unordered_set<Bitset, BitsetHash> failed;
    std::vector<int> deleted;

    auto rec = [&](auto&& self, int remaining) -> bool {
        auto occ = find_forbidden_subgraph(g, alive);
        if (!occ) return true;
        if (remaining == 0) return false;
        if (failed.count(alive)) return false;
        for (int v : occ->vertices) {
            alive.reset(v);
            deleted.push_back(v);
            if (self(self, remaining - 1)) return true;
            deleted.pop_back();
            alive.set(v);
        }
        failed.insert(alive);
        return false;
    };

    if (!rec(rec, budget)) return std::nullopt;
    std::sort(deleted.begin(), deleted.end());
    return deleted;
}

inline std::optional<std::vector<int>> minimum_split_deletion_set(const Graph& g,
                                                                 int max_budget) {
    for (int b = 0; b <= max_budget; ++b)
        if (auto s = split_deletion_set(g, b)) return s;
    return std::nullopt;
}

/// Output of the split-route preprocessing: the vertex classes of the
/// decomposition, the graph after the twin reduction, and the kept
/// representatives. All ids refer to the original graph.
struct ClassifiedSplitInstance {
    SplitDecomposition decomp; // indep_deletion holds the full pre-reduction class
    std::vector<int> kept_twins;    // at most 3 per neighbourhood class, smallest ids
    std::vector<int> removed_twins;
    Subgraph reduced;               // original graph minus removed twins
};

/// Classifies V into S / clique / I_K / I_S / I_0 and shrinks every group of
/// I_S vertices with identical neighbourhoods to its 3 smallest members.
/// Keeping 3 is enough: a ball of radius >= 2 that reaches one member of a
/// group reaches all of them (the penultimate path vertex is a shared
/// neighbour), and a schedule has only two balls of radius < 2, so with 3
/// members present some covering ball is of the reaching kind and covers the
/// removed members too. Distances among survivors are unchanged because a
/// kept twin can replace a removed one on any shortest path.
inline ClassifiedSplitInstance classify_and_reduce(const Graph& g,
                                                   const std::vector<int>& deletion_set) {
    ClassifiedSplitInstance out;
    out.decomp.deletion_set = deletion_set;
    std::sort(out.decomp.deletion_set.begin(), out.decomp.deletion_set.end());

    std::vector<char> in_s(g.n(), 0);
    for (int v : out.decomp.deletion_set) in_s[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
        if (!in_s[v]) rest.push_back(v);

    Subgraph sub = induced_subgraph(g, rest);
    SplitPartitionResult part = greedy_split_partition(sub.graph);
    if (!part.is_split)
        throw std::invalid_argument("deletion set does not leave a split graph");

    for (int local : part.clique) out.decomp.clique.push_back(sub.to_original[local]);
    std::vector<char> in_clique(g.n(), 0);
    for (int v : out.decomp.clique) in_clique[v] = 1;

    for (int local : part.independent) {
        int v = sub.to_original[local];
        if (g.degree(v) == 0) {
            out.decomp.isolated.push_back(v);
            continue;
        }
        bool clique_neighbour = false;
        for (int u : g.neighbors(v))
            if (in_clique[u]) {
                clique_neighbour = true;
                break;
            }
        if (clique_neighbour)
            out.decomp.indep_clique.push_back(v);
        else
            out.decomp.indep_deletion.push_back(v);
    }

    // twin groups keyed by the (S-contained) neighbourhood; members ascend
    std::unordered_map<Bitset, int, BitsetHash> kept_count;
    std::vector<char> removed(g.n(), 0);
    for (int v : out.decomp.indep_deletion) {
        int& c = kept_count[g.neighbor_bits(v)];
        if (c < 3) {
            ++c;
            out.kept_twins.push_back(v);
        } else {
            removed[v] = 1;
            out.removed_twins.push_back(v);
        }
    }

    std::vector<int> survivors;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) survivors.push_back(v);
    out.reduced = induced_subgraph(g, survivors);
    return out;
}

/// Large-k fast path: with k >= 3 + |S| + |I*_S| + |I_0| a schedule always
/// exists. Isolated vertices take the lowest indices, then the kept twins,
/// then S (so S radii are >= 1 whenever removed twins rely on them), and the
/// top three indices go to the clique side with a clique vertex on top, whose
/// radius k-1 >= 2 reaches the whole clique side.
inline std::optional<BurningSchedule> shortcut_check(const Graph& g,
                                                     const ClassifiedSplitInstance& cls,
                                                     int k) {
    const SplitDecomposition& d = cls.decomp;
    int threshold = 3 + static_cast<int>(d.deletion_set.size()) +
                    static_cast<int>(cls.kept_twins.size()) +
                    static_cast<int>(d.isolated.size());
    if (k < threshold) return std::nullopt;
    if (g.n() == 0) return BurningSchedule{};

    BurningSchedule sched;
    sched.centers.assign(k, 0);
    int idx = 0;
    for (int v : d.isolated) sched.centers[idx++] = v;
    for (int v : cls.kept_twins) sched.centers[idx++] = v;
    for (int v : d.deletion_set) sched.centers[idx++] = v;

    std::vector<int> clique_side;
    std::merge(d.clique.begin(), d.clique.end(), d.indep_clique.begin(),
               d.indep_clique.end(), std::back_inserter(clique_side));
    if (!clique_side.empty()) {
        sched.centers[k - 1] = d.clique.front(); // radius >= 2 spans the clique side
        int at = k - 2;
        for (int v : clique_side) {
            if (at < k - 3 || at < idx) break;
            if (v == d.clique.front()) continue;
            sched.centers[at--] = v;
        }
    }

    VerifyResult vr = verify_schedule(g, sched);
    if (!vr.ok) throw std::logic_error("shortcut produced an invalid schedule");
    return sched;
}

/// Instance left after forcing isolated vertices onto the lowest indices:
/// burn core (the reduced graph minus isolated vertices) using only the slot
/// indices offset..k-1.
struct GeneralizedInstance {
    Subgraph core;
    int k = 0;
    int offset = 0;
};

namespace detail {

/// Placement search over the open slots, largest radius first. Each slot
/// either takes an S u I*_S vertex that covers something new (dominated and
/// gainless choices are interchangeable with the alternatives that remain,
/// so skipping them loses nothing) or stays vacant for a clique-side vertex.
/// Vacant slots are settled at the end: up to three by direct enumeration,
/// otherwise the largest vacant radius is >= 3 and one clique-side guess
/// there burns the whole clique side (its induced diameter is at most 3),
/// after which the leftovers form a small Set Cover over uncovered vertices
/// plus slot tokens.
struct SplitPlacementSearch {
    const Graph& core;
    int offset;
    int k;
    std::vector<int> guess_cands; // S u I*_S, core-local ids ascending
    std::vector<int> clique_side; // K u I_K, core-local ids ascending
    BallTable balls;
    std::vector<std::size_t> prefix_any; // indexed by slot; sum of best balls offset..slot
    std::vector<std::size_t> max_clique; // best clique-side ball per radius
    std::vector<int> slot_center;        // per slot, core-local id or -1
    std::vector<int> vacant;             // descending slot indices
    std::size_t vacant_sum = 0;
    uint64_t vacant_mask = 0;
    std::map<std::pair<int, uint64_t>, std::unordered_set<Bitset, BitsetHash>> visited;

    SplitPlacementSearch(const Graph& core_graph, int off, int rounds,
                         std::vector<int> guess, std::vector<int> clique)
        : core(core_graph),
          offset(off),
          k(rounds),
          guess_cands(std::move(guess)),
          clique_side(std::move(clique)),
          balls(core_graph, rounds - 1),
          slot_center(rounds, -1) {
        prefix_any.assign(k, 0);
        max_clique.assign(k, 0);
        std::size_t acc = 0;
        for (int r = offset; r < k; ++r) {
            std::size_t best_any = 0;
            for (int v = 0; v < core.n(); ++v)
                best_any = std::max(best_any, balls.at(v, r).count());
            acc += best_any;
            prefix_any[r] = acc;
            for (int v : clique_side)
                max_clique[r] = std::max(max_clique[r], balls.at(v, r).count());
        }
    }

    bool run() {
        Bitset covered(static_cast<std::size_t>(core.n()));
        return dfs(k - 1, covered);
    }

    // keep candidates whose uncovered gain is maximal; ties keep the first
    static void dominance_filter(std::vector<std::pair<int, Bitset>>& cands) {
        std::vector<char> drop(cands.size(), 0);
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (drop[i]) continue;
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                if (drop[j]) continue;
                if (cands[j].second.is_subset_of(cands[i].second))
                    drop[j] = 1;
                else if (cands[i].second.is_subset_of(cands[j].second)) {
                    drop[i] = 1;
                    break;
                }
            }
        }
        std::size_t out = 0;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (drop[i]) continue;
            if (out != i) cands[out] = std::move(cands[i]);
            ++out;
        }
        cands.resize(out);
    }

    std::vector<std::pair<int, Bitset>> candidates(const std::vector<int>& pool, int radius,
                                                   const Bitset& covered) const {
        std::vector<std::pair<int, Bitset>> cands;
        for (int v : pool) {
            Bitset unc = balls.at(v, radius);
            unc.subtract(covered);
            if (unc.any()) cands.emplace_back(v, std::move(unc));
        }
        dominance_filter(cands);
        return cands;
    }

    bool dfs(int slot, const Bitset& covered) {
        if (covered.count() == static_cast<std::size_t>(core.n())) return true;
        if (slot < offset) return complete(covered);
        if (covered.count() + prefix_any[slot] + vacant_sum <
            static_cast<std::size_t>(core.n()))
            return false;
        if (!visited[{slot, vacant_mask}].insert(covered).second) return false;

        for (auto& [v, unc] : candidates(guess_cands, slot, covered)) {
            slot_center[slot] = v;
            Bitset next = covered;
            next |= unc;
            if (dfs(slot - 1, next)) return true;
        }
        slot_center[slot] = -1;

        if (!clique_side.empty()) {
            vacant.push_back(slot);
            vacant_mask |= uint64_t{1} << (slot - offset);
            vacant_sum += max_clique[slot];
            bool ok = dfs(slot - 1, covered);
            vacant_sum -= max_clique[slot];
            vacant_mask &= ~(uint64_t{1} << (slot - offset));
            vacant.pop_back();
            if (ok) return true;
        }
        return false;
    }

    bool complete(const Bitset& covered) {
        if (vacant.empty()) return false;
        if (vacant.size() <= 3) return complete_small(0, covered);
        return complete_large(covered);
    }

    bool complete_small(std::size_t xi, const Bitset& covered) {
        if (covered.count() == static_cast<std::size_t>(core.n())) return true;
        if (xi == vacant.size()) return false;
        int slot = vacant[xi];
        for (auto& [v, unc] : candidates(clique_side, slot, covered)) {
            slot_center[slot] = v;
            Bitset next = covered;
            next |= unc;
            if (complete_small(xi + 1, next)) return true;
        }
        slot_center[slot] = -1;
        return false;
    }

    bool complete_large(const Bitset& covered) {
        int top = vacant.front(); // four distinct slot values, so top >= 3
        for (auto& [v, unc] : candidates(clique_side, top, covered)) {
            Bitset after = covered;
            after |= unc;
            std::vector<int> uncovered;
            for (int u = 0; u < core.n(); ++u)
                if (!after.test(u)) uncovered.push_back(u);
            if (uncovered.empty()) {
                slot_center[top] = v;
                return true;
            }
            // the guess burned the whole clique side, so the residue is a
            // Set Cover over few vertices; only |uncovered| many slots can
            // be useful, and shifting choices to larger radii stays valid
            std::vector<int> slots(vacant.begin() + 1, vacant.end());
            if (slots.size() > uncovered.size()) slots.resize(uncovered.size());

            SetCoverInstance inst;
            inst.universe_size = static_cast<int>(uncovered.size() + slots.size());
            inst.budget = static_cast<int>(slots.size());
            for (std::size_t x = 0; x < slots.size(); ++x)
                for (int w : clique_side) {
                    Bitset s(static_cast<std::size_t>(inst.universe_size));
                    for (std::size_t e = 0; e < uncovered.size(); ++e)
                        if (balls.at(w, slots[x]).test(uncovered[e])) s.set(e);
                    s.set(uncovered.size() + x);
                    inst.sets.push_back(std::move(s));
                }
            auto chosen = set_cover_exact(inst);
            if (!chosen) continue;
            slot_center[top] = v;
            for (int idx : *chosen) {
                int x = idx / static_cast<int>(clique_side.size());
                slot_center[slots[x]] = clique_side[idx % clique_side.size()];
            }
            return true;
        }
        return false;
    }
};

}  // namespace detail

/// Decides k-round burnability through the split decomposition. The deletion
/// set, classification, and core are computed once per graph, so a k-scan
/// reuses them.
class SplitSolver {
  public:
    // The graph must outlive the solver; a temporary would dangle.
    explicit SplitSolver(Graph&&, std::optional<std::vector<int>> = std::nullopt) = delete;

    explicit SplitSolver(const Graph& g,
                         std::optional<std::vector<int>> deletion_set = std::nullopt)
        : g_(&g) {
        if (g.n() == 0) return;
        if (deletion_set) {
            s_ = std::move(*deletion_set);
            std::sort(s_.begin(), s_.end());
        } else {
            s_ = *minimum_split_deletion_set(g, g.n()); // budget n always suffices
        }
        cls_ = classify_and_reduce(g, s_);

        std::vector<char> drop(g.n(), 0);
        for (int v : cls_.removed_twins) drop[v] = 1;
        for (int v : cls_.decomp.isolated) drop[v] = 1;
        std::vector<int> core_vertices;
        for (int v = 0; v < g.n(); ++v)
            if (!drop[v]) core_vertices.push_back(v);
        core_ = induced_subgraph(g, core_vertices);

        for (int v : cls_.decomp.deletion_set) guess_local_.push_back(core_.from_original[v]);
        for (int v : cls_.kept_twins) guess_local_.push_back(core_.from_original[v]);
        std::sort(guess_local_.begin(), guess_local_.end());
        for (int v : cls_.decomp.clique) clique_local_.push_back(core_.from_original[v]);
        for (int v : cls_.decomp.indep_clique) clique_local_.push_back(core_.from_original[v]);
        std::sort(clique_local_.begin(), clique_local_.end());
    }

    const std::vector<int>& deletion_set() const { return s_; }
    const ClassifiedSplitInstance& classified() const { return cls_; }

    GeneralizedInstance generalized(int k) const {
        return GeneralizedInstance{core_, k, static_cast<int>(cls_.decomp.isolated.size())};
    }

    std::optional<BurningSchedule> solve(int k) {
        if (k <= 0) return std::nullopt;
        if (g_->n() == 0) return BurningSchedule{};
        if (auto quick = shortcut_check(*g_, cls_, k)) return quick;

        const std::vector<int>& iso = cls_.decomp.isolated;
        const int off = static_cast<int>(iso.size());
        if (k < off) return std::nullopt;
        if (core_.graph.n() == 0) {
            BurningSchedule sched;
            sched.centers.assign(k, iso.front()); // graph is edgeless here
            for (int i = 0; i < off; ++i) sched.centers[i] = iso[i];
            return sched;
        }
        if (k == off) return std::nullopt; // no slot left for the core
        if (k - off > 60) throw capacity_error("split route: too many open slots");

        detail::SplitPlacementSearch search(core_.graph, off, k, guess_local_, clique_local_);
        if (!search.run()) return std::nullopt;

        BurningSchedule sched;
        sched.centers.assign(k, core_.to_original[0]);
        for (int i = 0; i < off; ++i) sched.centers[i] = iso[i];
        for (int slot = off; slot < k; ++slot)
            if (search.slot_center[slot] >= 0)
                sched.centers[slot] = core_.to_original[search.slot_center[slot]];

        VerifyResult vr = verify_schedule(*g_, sched);
        if (!vr.ok) throw std::logic_error("split route produced an invalid schedule");
        return sched;
    }

  private:
    const Graph* g_;
    std::vector<int> s_;
    ClassifiedSplitInstance cls_;
    Subgraph core_;
    std::vector<int> guess_local_;
    std::vector<int> clique_local_;
};

inline std::optional<BurningSchedule> solve_split(const Graph& g, int k) {
    SplitSolver solver(g);
    return solver.solve(k);
}

inline std::optional<BurningSchedule> solve_split(const Graph& g, int k,
                                                  std::vector<int> deletion_set) {
    SplitSolver solver(g, std::move(deletion_set));
    return solver.solve(k);
}

}  // namespace gburn
