#include <gtest/gtest.h>

#include <forestbound/errors.hpp>
#include <forestbound/generators.hpp>
#include <forestbound/multigraph.hpp>

#include "oracles.hpp"

using namespace forestbound;

TEST(Multigraph, Construction) {
  const Multigraph g(3, {{0, 1}, {1, 2}, {2, 2}});
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_TRUE(g.edge(2).is_loop());
  EXPECT_THROW(Multigraph(2, {{0, 2}}), InputError);
}

TEST(Multigraph, Degree) {
  EXPECT_EQ(degree(complete_graph(3), 1), 2u);
  EXPECT_EQ(degree(glued_cycles(3, 5), 0), 10u);
  EXPECT_EQ(degree(Multigraph(1, {{0, 0}}), 0), 2u);
  EXPECT_THROW(degree(complete_graph(3), 3), InputError);
  EXPECT_EQ(max_degree(star_graph(4)), 4u);
  EXPECT_EQ(regular_degree(petersen()), 3u);
  EXPECT_FALSE(regular_degree(path_graph(3)).has_value());
}

TEST(Multigraph, Simplicity) {
  EXPECT_TRUE(is_simple(complete_graph(4)));
  EXPECT_FALSE(is_simple(Multigraph(2, {{0, 1}, {1, 0}})));
  EXPECT_FALSE(is_simple(Multigraph(1, {{0, 0}})));
  EXPECT_TRUE(has_loops(Multigraph(1, {{0, 0}})));
}

TEST(Multigraph, Components) {
  const Multigraph g = disjoint_union(cycle_graph(3), path_graph(2));
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_EQ(num_components(g), 2u);
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(cycle_graph(6)));
  EXPECT_EQ(num_components(empty_graph(4)), 4u);
}

TEST(Multigraph, DeleteAndContract) {
  const Multigraph p = delete_edge(cycle_graph(4), 3);
  EXPECT_EQ(p.num_edges(), 3u);
  EXPECT_TRUE(is_connected(p));
  EXPECT_FALSE(girth(p).has_value());

  const Multigraph k = contract_edge(complete_graph(3), 0);
  EXPECT_EQ(k.num_vertices(), 2u);
  EXPECT_EQ(k.num_edges(), 2u);
  EXPECT_EQ(girth(k), 2u);

  // Contracting one of a parallel pair drops its partner instead of making a loop.
  const Multigraph par(3, {{0, 1}, {0, 1}, {1, 2}});
  const Multigraph c = contract_edge(par, 0);
  EXPECT_EQ(c.num_vertices(), 2u);
  EXPECT_EQ(c.num_edges(), 1u);
  EXPECT_FALSE(has_loops(c));

  EXPECT_THROW(contract_edge(Multigraph(1, {{0, 0}}), 0), InputError);
  EXPECT_THROW(delete_edge(complete_graph(3), 3), InputError);
}

TEST(Multigraph, Girth) {
  EXPECT_EQ(girth(petersen()), 5u);
  EXPECT_EQ(girth(cycle_graph(4)), 4u);
  EXPECT_FALSE(girth(star_graph(5)).has_value());
  EXPECT_EQ(girth(Multigraph(2, {{0, 1}, {0, 1}})), 2u);
  EXPECT_EQ(girth(Multigraph(2, {{0, 1}, {1, 1}})), 1u);
  EXPECT_EQ(girth(complete_graph(5)), 3u);
}

TEST(Multigraph, GirthMatchesOracle) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.between(1, 9);
    const Multigraph g = random_simple_graph(n, rng.between(0, std::min<std::size_t>(n * (n - 1) / 2, 14)), rng);
    const std::size_t expected = oracle::girth(g);
    const auto got = girth(g);
    if (expected == std::numeric_limits<std::size_t>::max()) EXPECT_FALSE(got.has_value());
    else EXPECT_EQ(got, expected);
  }
}

TEST(Multigraph, ShortestCycleCount) {
  EXPECT_EQ(count_shortest_cycles(complete_graph(4)), 4u);
  EXPECT_EQ(count_shortest_cycles(petersen()), 12u);
  EXPECT_EQ(count_shortest_cycles(cycle_graph(7)), 1u);
  EXPECT_EQ(count_shortest_cycles(glued_cycles(4, 3)), 3u);
  EXPECT_EQ(count_shortest_cycles(path_graph(4)), 0u);
}

TEST(TwoLift, AllPlusIsDisjointUnion) {
  const Multigraph g = petersen();
  EXPECT_EQ(two_lift(g, SignAssignment::all(g.num_edges(), 1)), disjoint_union(g, g));
}

TEST(TwoLift, TriangleLifts) {
  const Multigraph c3 = cycle_graph(3);
  for (std::uint64_t mask : {0b111ULL, 0b001ULL, 0b100ULL}) {
    const Multigraph h = two_lift(c3, SignAssignment::from_mask(3, mask));
    EXPECT_EQ(h.num_vertices(), 6u);
    EXPECT_TRUE(is_connected(h));
    EXPECT_EQ(regular_degree(h), 2u);
    EXPECT_EQ(girth(h), 6u);
  }
  // Two minus signs: even parity around the triangle, two triangles.
  EXPECT_EQ(num_components(two_lift(c3, SignAssignment::from_mask(3, 0b011))), 2u);
}

TEST(TwoLift, PreservesDegreesAndNeverLowersGirth) {
  Rng rng(9);
  const Multigraph base = petersen();
  for (int t = 0; t < 50; ++t) {
    const auto s = SignAssignment::from_mask(base.num_edges(), rng.below(1ULL << 15));
    const Multigraph h = two_lift(base, s);
    EXPECT_EQ(h.num_vertices(), 20u);
    EXPECT_EQ(h.num_edges(), 30u);
    for (Vertex v = 0; v < h.num_vertices(); ++v) EXPECT_EQ(degree(h, v), degree(base, v % 10));
    EXPECT_GE(*girth(h), 5u);
  }
}

TEST(TwoLift, Errors) {
  EXPECT_THROW(two_lift(complete_graph(3), SignAssignment::all(2, 1)), InputError);
  EXPECT_THROW(two_lift(Multigraph(1, {{0, 0}}), SignAssignment::all(1, -1)), InputError);
  EXPECT_THROW(SignAssignment({1, 0}), InputError);
}
