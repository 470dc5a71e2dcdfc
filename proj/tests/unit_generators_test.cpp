#include <gtest/gtest.h>

#include "gburn/generators.hpp"
#include "gburn/graph_algo.hpp"
#include "gburn/split_graph.hpp"

using namespace gburn;

TEST(Generators, FixedFamilies) {
    EXPECT_EQ(path_graph(1).m(), 0);
    EXPECT_EQ(path_graph(6).m(), 5);
    EXPECT_EQ(cycle_graph(3).m(), 3);
    EXPECT_EQ(cycle_graph(8).m(), 8);
    EXPECT_THROW(cycle_graph(2), std::invalid_argument);
    EXPECT_EQ(complete_graph(5).m(), 10);
    Graph star = star_graph(6);
    EXPECT_EQ(star.n(), 7);
    EXPECT_EQ(star.degree(0), 6);
    for (int leaf = 1; leaf <= 6; ++leaf) EXPECT_EQ(star.degree(leaf), 1);
}

TEST(Generators, GnpDeterministicAndBounded) {
    Graph a = gnp(10, 0.3, 7);
    Graph b = gnp(10, 0.3, 7);
    EXPECT_EQ(a.edges(), b.edges());
    Graph c = gnp(10, 0.3, 8);
    EXPECT_TRUE(a.edges() != c.edges() || a.m() == c.m()); // different seed, typically different graph
    EXPECT_EQ(gnp(10, 0.0, 1).m(), 0);
    EXPECT_EQ(gnp(10, 1.0, 1).m(), 45);
}

TEST(Generators, DisjointUnionOffsets) {
    Graph g = disjoint_union({complete_graph(3), path_graph(2), Graph(1)});
    EXPECT_EQ(g.n(), 6);
    EXPECT_EQ(g.m(), 4);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_TRUE(g.has_edge(3, 4));
    EXPECT_EQ(g.degree(5), 0);
    EXPECT_EQ(component_count(g), 3);
}

TEST(Generators, RandomSplitGraphIsSplit) {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_split_graph(1 + static_cast<int>(seed % 10), seed);
        EXPECT_TRUE(is_split_graph(g)) << "seed " << seed;
    }
    Graph a = random_split_graph(8, 3);
    Graph b = random_split_graph(8, 3);
    EXPECT_EQ(a.edges(), b.edges());
}

TEST(Generators, ExtraVerticesExtend) {
    Graph base = random_split_graph(6, 4);
    Graph bigger = with_random_extra_vertices(base, 3, 5);
    EXPECT_EQ(bigger.n(), base.n() + 3);
    for (auto [u, v] : base.edges()) EXPECT_TRUE(bigger.has_edge(u, v));
    Graph again = with_random_extra_vertices(base, 3, 5);
    EXPECT_EQ(bigger.edges(), again.edges());
}

TEST(Generators, RandomSetCoverShape) {
    EXPECT_THROW(random_set_cover(0, 1, 1, 0), std::invalid_argument);
    SetCoverInstance inst = random_set_cover(6, 5, 3, 42);
    EXPECT_EQ(inst.universe_size, 6);
    EXPECT_EQ(inst.sets.size(), 5u);
    EXPECT_EQ(inst.budget, 3);
    for (const Bitset& s : inst.sets) {
        EXPECT_TRUE(s.any());
        EXPECT_EQ(s.size(), 6u);
    }
}
