#pragma once

#include <istream>
#include <ostream>
#include <vector>

#include "gburn/graph_algo.hpp"

namespace gburn {

/// Burning schedule (b_0, ..., b_{k-1}). Entry b_i covers the closed ball of
/// radius i around it; the schedule is valid when the balls cover every vertex.
/// Repeated centers are allowed.
struct BurningSchedule {
    std::vector<int> centers;

    int length() const { return static_cast<int>(centers.size()); }
};

struct VerifyResult {
    bool ok = false;
    Bitset uncovered;
};

inline VerifyResult verify_schedule(const Graph& g, const BurningSchedule& sched) {
    Bitset covered(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < sched.length(); ++i) {
        int v = sched.centers[i];
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("schedule entry out of range: " + std::to_string(v));
        covered |= ball(g, v, i);
    }
    VerifyResult res;
    res.uncovered = Bitset(static_cast<std::size_t>(g.n()));
    res.uncovered.set_all();
    res.uncovered.subtract(covered);
    res.ok = res.uncovered.none();
    return res;
}

/// Schedule file: whitespace-separated vertex ids b_0 b_1 ...; '#' comments.
inline BurningSchedule load_schedule(std::istream& in) {
    BurningSchedule s;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        std::istringstream ls(line);
        int v;
        while (ls >> v) s.centers.push_back(v);
        if (!ls.eof()) throw parse_error("bad schedule token in line: " + line);
    }
    return s;
}

inline void write_schedule(const BurningSchedule& s, std::ostream& out) {
    for (int i = 0; i < s.length(); ++i)
        out << s.centers[i] << (i + 1 == s.length() ? '\n' : ' ');
    if (s.length() == 0) out << '\n';
}

}  // namespace gburn
