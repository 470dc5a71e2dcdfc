#include <sstream>

#include <gtest/gtest.h>

#include "gburn/bitset.hpp"
#include "gburn/generators.hpp"
#include "gburn/graph.hpp"
#include "gburn/graph_algo.hpp"
#include "gburn/schedule.hpp"
#include "oracles.hpp"

using namespace gburn;

TEST(Bitset, BasicOps) {
    Bitset b(70);
    EXPECT_EQ(b.size(), 70u);
    EXPECT_TRUE(b.none());
    b.set(0);
    b.set(69);
    EXPECT_TRUE(b.test(0));
    EXPECT_TRUE(b.test(69));
    EXPECT_FALSE(b.test(68));
    EXPECT_EQ(b.count(), 2u);
    EXPECT_EQ(b.find_first(), 0u);
    b.reset(0);
    EXPECT_EQ(b.find_first(), 69u);
    EXPECT_EQ(b.to_vector(), (std::vector<int>{69}));
}

TEST(Bitset, SetAllRespectsWidth) {
    Bitset b(70);
    b.set_all();
    EXPECT_EQ(b.count(), 70u); // no stray bits past the width
    Bitset c(70);
    c.set_all();
    EXPECT_TRUE(b == c);
    EXPECT_EQ(BitsetHash{}(b), BitsetHash{}(c));
}

TEST(Bitset, SetAlgebra) {
    Bitset a(10), b(10);
    a.set(1);
    a.set(3);
    b.set(3);
    b.set(5);
    Bitset u = a;
    u |= b;
    EXPECT_EQ(u.count(), 3u);
    EXPECT_TRUE(a.intersects(b));
    EXPECT_EQ(a.intersect_count(b), 1u);
    Bitset d = a;
    d.subtract(b);
    EXPECT_EQ(d.to_vector(), (std::vector<int>{1}));
    EXPECT_TRUE(d.is_subset_of(a));
    EXPECT_FALSE(a.is_subset_of(b));
}

TEST(Graph, PathStructure) {
    Graph g = path_graph(4);
    EXPECT_EQ(g.n(), 4);
    EXPECT_EQ(g.m(), 3);
    EXPECT_EQ(g.degree(0), 1);
    EXPECT_EQ(g.degree(1), 2);
    EXPECT_TRUE(g.has_edge(1, 2));
    EXPECT_FALSE(g.has_edge(0, 3));
}

TEST(Graph, RejectsBadEdges) {
    EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST(Graph, EdgeListRoundTrip) {
    Graph g = cycle_graph(5);
    std::stringstream ss;
    write_edge_list(g, ss);
    Graph h = load_edge_list(ss);
    EXPECT_EQ(h.n(), 5);
    EXPECT_EQ(h.m(), 5);
    for (auto [u, v] : g.edges()) EXPECT_TRUE(h.has_edge(u, v));
}

TEST(Graph, ParseErrors) {
    std::stringstream empty("");
    EXPECT_THROW(load_edge_list(empty), parse_error);
    std::stringstream bad_header("x y\n");
    EXPECT_THROW(load_edge_list(bad_header), parse_error);
    std::stringstream truncated("3 2\n0 1\n");
    EXPECT_THROW(load_edge_list(truncated), parse_error);
    std::stringstream comments("# c\n3 1\n# mid\n0 2\n");
    Graph g = load_edge_list(comments);
    EXPECT_TRUE(g.has_edge(0, 2));
}

TEST(GraphAlgo, BfsMatchesFloydWarshall) {
    for (uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = gnp(9, 0.25, seed);
        auto fw = oracle::all_distances(g);
        for (int v = 0; v < g.n(); ++v) {
            auto d = bfs_distances(g, v);
            for (int u = 0; u < g.n(); ++u) {
                if (fw[v][u] >= oracle::kFar)
                    EXPECT_EQ(d[u], unreachable);
                else
                    EXPECT_EQ(d[u], fw[v][u]);
            }
        }
    }
}

TEST(GraphAlgo, BallsAndClamping) {
    Graph g = path_graph(5);
    EXPECT_EQ(ball(g, 2, 1).to_vector(), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(ball(g, 0, 0).to_vector(), (std::vector<int>{0}));
    BallTable t(g, 2);
    EXPECT_EQ(t.at(2, 2).count(), 5u);
    EXPECT_EQ(t.at(2, 100).count(), 5u); // radius clamps to the table maximum
}

TEST(GraphAlgo, Components) {
    Graph g = disjoint_union({path_graph(3), path_graph(1)});
    EXPECT_EQ(component_count(g), 2);
    ComponentDecomposition d = connected_components(g);
    EXPECT_EQ(d.p(), 2);
    EXPECT_EQ(d.components[0], (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(d.components[1], (std::vector<int>{3}));
    EXPECT_EQ(d.diameters, (std::vector<int>{2, 0}));
    EXPECT_EQ(d.max_diameter(), 2);
    EXPECT_EQ(d.component_of[3], 1);
}

TEST(GraphAlgo, ComponentDiameters) {
    EXPECT_EQ(connected_components(cycle_graph(5)).max_diameter(), 2);
    EXPECT_EQ(connected_components(cycle_graph(6)).max_diameter(), 3);
    EXPECT_EQ(connected_components(path_graph(6)).max_diameter(), 5);
}

TEST(GraphAlgo, LongestInducedPathControls) {
    EXPECT_EQ(longest_induced_path(path_graph(6), 100), 6);
    EXPECT_EQ(longest_induced_path(cycle_graph(6), 100), 5);
    EXPECT_EQ(longest_induced_path(complete_graph(4), 100), 2);
    EXPECT_EQ(longest_induced_path(star_graph(4), 100), 3);
}

TEST(GraphAlgo, LongestInducedPathMatchesOracle) {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = gnp(8, 0.3, 100 + seed);
        EXPECT_EQ(longest_induced_path(g, g.n()), oracle::longest_induced_path(g));
    }
}

TEST(GraphAlgo, LongestInducedPathHonorsCap) {
    EXPECT_EQ(longest_induced_path(path_graph(9), 4), 4);
}

TEST(Schedule, VerifyCoverage) {
    Graph p9 = path_graph(9);
    BurningSchedule good{{8, 6, 2}};
    EXPECT_TRUE(verify_schedule(p9, good).ok);

    Graph k5 = complete_graph(5);
    BurningSchedule bad{{0}};
    VerifyResult res = verify_schedule(k5, bad);
    EXPECT_FALSE(res.ok);
    EXPECT_EQ(res.uncovered.to_vector(), (std::vector<int>{1, 2, 3, 4}));

    EXPECT_THROW(verify_schedule(k5, BurningSchedule{{7}}), std::invalid_argument);
}

TEST(Schedule, FileRoundTrip) {
    std::stringstream ss("# comment\n3 1\n4\n");
    BurningSchedule s = load_schedule(ss);
    EXPECT_EQ(s.centers, (std::vector<int>{3, 1, 4}));
    std::stringstream out;
    write_schedule(s, out);
    EXPECT_EQ(out.str(), "3 1 4\n");
    std::stringstream bad("1 x\n");
    EXPECT_THROW(load_schedule(bad), parse_error);
}
