#include <gtest/gtest.h>

#include <forestbound/catalog.hpp>
#include <forestbound/errors.hpp>
#include <forestbound/generators.hpp>
#include <forestbound/matching.hpp>

#include "oracles.hpp"

using namespace forestbound;

TEST(Matching, Counts) {
  EXPECT_EQ(matching_counts(complete_graph(3)), (std::vector<BigInt>{1, 3}));
  EXPECT_EQ(matching_counts(complete_graph(5)), (std::vector<BigInt>{1, 10, 15}));
  EXPECT_EQ(matching_counts(petersen())[5], 6);
  EXPECT_EQ(matching_counts(empty_graph(3)), (std::vector<BigInt>{1}));
}

TEST(Matching, CountsMatchEnumeration) {
  for (const auto& [name, g] : catalog()) {
    if (g.num_edges() > 20) continue;
    EXPECT_EQ(matching_counts(g), oracle::matching_counts(g)) << name;
  }
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng.between(1, 9);
    const Multigraph g = random_simple_graph(n, rng.between(0, std::min<std::size_t>(n * (n - 1) / 2, 14)), rng);
    EXPECT_EQ(matching_counts(g), oracle::matching_counts(g));
  }
  // parallel edges count separately
  EXPECT_EQ(matching_counts(Multigraph(2, {{0, 1}, {0, 1}})), (std::vector<BigInt>{1, 2}));
}

TEST(Matching, Polynomial) {
  EXPECT_EQ(matching_polynomial(complete_graph(2)), (IntPolynomial{-1, 0, 1}));
  EXPECT_EQ(matching_polynomial(complete_graph(3)), (IntPolynomial{0, -3, 0, 1}));
  EXPECT_EQ(matching_polynomial(complete_graph(4)), (IntPolynomial{3, 0, -6, 0, 1}));
  EXPECT_THROW(matching_polynomial(Multigraph(1, {{0, 0}})), InputError);
  EXPECT_THROW(matching_counts(Multigraph(1, {{0, 0}})), InputError);
}

TEST(Matching, PolynomialRoundTripsCounts) {
  for (const auto& [name, g] : catalog()) {
    const auto mu = matching_polynomial(g);
    const auto m = matching_counts(g);
    const std::size_t n = g.num_vertices();
    for (std::size_t k = 0; k < m.size(); ++k) EXPECT_EQ(mu[n - 2 * k], k % 2 ? BigInt(-m[k]) : m[k]) << name;
  }
}

TEST(Matching, CompleteClosedForm) {
  EXPECT_EQ(matching_counts_complete(5), (std::vector<BigInt>{1, 10, 15}));
  EXPECT_EQ(matching_counts_complete(6), (std::vector<BigInt>{1, 15, 45, 15}));
  EXPECT_EQ(matching_counts_complete(1), (std::vector<BigInt>{1}));
  for (std::size_t n = 1; n <= 11; ++n) EXPECT_EQ(matching_counts_complete(n), matching_counts(complete_graph(n)));
}

TEST(PathTree, Sizes) {
  EXPECT_EQ(path_tree(complete_graph(3), 0).size(), 5u);
  EXPECT_EQ(path_tree(star_graph(3), 0).size(), 4u);
  EXPECT_EQ(path_tree(complete_graph(5), 2).size(), 65u);
  const PathTree t = path_tree(complete_graph(4), 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto p = t.path(i);
    EXPECT_EQ(p.front(), 1u);
    EXPECT_EQ(p.size(), t.nodes[i].depth + 1);
  }
  EXPECT_THROW(path_tree(complete_graph(3), 3), InputError);
}

TEST(PathTree, DepthLimit) { EXPECT_EQ(path_tree(complete_graph(5), 0, 1).size(), 5u); }

TEST(TreeLikeWalks, Examples) {
  EXPECT_EQ(tree_like_closed_walks(complete_graph(3), 0, 2), 2);
  EXPECT_EQ(tree_like_closed_walks(complete_graph(3), 1, 0), 1);
  EXPECT_EQ(tree_like_closed_walks(petersen(), 0, 5), 0);
  EXPECT_EQ(total_tree_like_walks(complete_graph(3), 2), 6);
  EXPECT_EQ(total_tree_like_walks(complete_graph(4), 4), 60);
  for (const auto& [name, g] : catalog()) EXPECT_EQ(total_tree_like_walks(g, 2), 2 * g.num_edges()) << name;
}

TEST(TreeLikeWalks, GodsilIdentity) {
  for (const auto& [name, g] : catalog()) {
    if (g.num_vertices() > 10) continue;
    const auto p = power_sums(matching_polynomial(g), 8);
    for (std::size_t len = 0; len <= 8; ++len) EXPECT_EQ(total_tree_like_walks(g, len), p[len]) << name << " " << len;
  }
}
