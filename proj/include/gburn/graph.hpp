#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gburn/bitset.hpp"

namespace gburn {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an operation would exceed a documented capacity limit.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph, immutable after construction.
/// Vertices are 0..n-1. Adjacency is kept both as sorted lists and as
/// per-vertex bitsets whose width is fixed at construction.
class Graph {
public:
    explicit Graph(int n) : Graph(n, {}) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
        adj_.resize(n_);
        nbr_.assign(n_, Bitset(static_cast<std::size_t>(n_)));
        for (auto [u, v] : edges) add_edge(u, v);
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int n() const { return n_; }
    int m() const { return m_; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const Bitset& neighbor_bits(int v) const { return nbr_[v]; }
    bool has_edge(int u, int v) const { return nbr_[u].test(v); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

private:
    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: " +
                                        std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
        if (nbr_[u].test(v))
            throw std::invalid_argument("duplicate edge rejected: " + std::to_string(u) +
                                        " " + std::to_string(v));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        nbr_[u].set(v);
        nbr_[v].set(u);
        ++m_;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> nbr_;
};

/// Edge-list format: first non-comment line "n m", then m lines "u v"
/// (0-indexed). Lines starting with '#' are comments.
inline Graph load_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string hdr;
    if (!next_data_line(hdr)) throw parse_error("empty graph file");
    std::istringstream hs(hdr);
    long long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0)
        throw parse_error("line " + std::to_string(lineno) + ": expected header 'n m'");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
        std::string el;
        if (!next_data_line(el))
            throw parse_error("unexpected end of file: expected " + std::to_string(m) +
                              " edges, got " + std::to_string(e));
        std::istringstream es(el);
        int u, v;
        if (!(es >> u >> v))
            throw parse_error("line " + std::to_string(lineno) + ": expected edge 'u v'");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& ex) {
        throw parse_error(std::string("invalid graph: ") + ex.what());
    }
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// Induced subgraph with its local-to-original vertex map.
struct Subgraph {
    Graph graph{0};
    std::vector<int> to_original;   // local id -> original id
    std::vector<int> from_original; // original id -> local id, -1 if absent
};

inline Subgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    std::vector<int> from(g.n(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        from[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : vertices)
        for (int v : g.neighbors(u))
            if (u < v && from[v] >= 0) edges.emplace_back(from[u], from[v]);
    return Subgraph{Graph(static_cast<int>(vertices.size()), edges), std::move(vertices),
                    std::move(from)};
}

}  // namespace gburn
