#include <gtest/gtest.h>

#include <forestbound/catalog.hpp>
#include <forestbound/errors.hpp>
#include <forestbound/forest.hpp>
#include <forestbound/generators.hpp>
#include <forestbound/random.hpp>

#include "oracles.hpp"

using namespace forestbound;

TEST(Forest, Polynomial) {
  EXPECT_EQ(forest_polynomial(complete_graph(3)).poly, (IntPolynomial{0, 3, 3, 1}));
  const auto k4 = forest_polynomial(complete_graph(4));
  EXPECT_EQ(k4.total(), 38);
  EXPECT_EQ(k4.forests_with_edges(0), 1);
  EXPECT_EQ(k4.forests_with_edges(1), 6);
  EXPECT_EQ(k4.forests_with_edges(2), 15);
  EXPECT_EQ(k4.forests_with_edges(3), 16);
  EXPECT_EQ(forest_polynomial(empty_graph(3)).poly, IntPolynomial::monomial(1, 3));
  EXPECT_EQ(forest_polynomial(empty_graph(0)).total(), 1);
}

TEST(Forest, Trees) {
  for (std::size_t m = 1; m <= 8; ++m) {
    const auto f = forest_polynomial(path_graph(m));
    EXPECT_EQ(f.poly, poly_pow(IntPolynomial{1, 1}, m - 1).shifted_up(1));
    EXPECT_EQ(f.total(), ipow(BigInt(2), m - 1));
  }
}

TEST(Forest, Counts) {
  EXPECT_EQ(forest_count(complete_graph(3)), 7);
  EXPECT_EQ(forest_count(cycle_graph(4)), 15);
  EXPECT_EQ(forest_count(glued_cycles(3, 5)), 16807);
  EXPECT_EQ(forest_count(disjoint_union(cycle_graph(3), cycle_graph(3))), 49);
}

TEST(Forest, Multigraphs) {
  EXPECT_EQ(forest_polynomial_oracle(complete_graph(2)).poly, (IntPolynomial{0, 1, 1}));
  const Multigraph par(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(forest_polynomial_oracle(par).poly, (IntPolynomial{0, 2, 1}));
  EXPECT_EQ(forest_polynomial(par).poly, (IntPolynomial{0, 2, 1}));
  const Multigraph loopy(2, {{0, 1}, {1, 1}, {0, 0}});
  EXPECT_EQ(forest_polynomial(loopy), forest_polynomial_oracle(loopy));
}

TEST(Forest, MatchesOracles) {
  for (const auto& [name, g] : catalog()) {
    const auto f = forest_polynomial(g);
    EXPECT_EQ(f, forest_polynomial_oracle(g)) << name;
    const auto by_size = oracle::forest_counts_by_size(g);
    for (std::size_t k = 0; k < by_size.size(); ++k) EXPECT_EQ(f.poly[g.num_vertices() - k], by_size[k]) << name;
  }
  Rng rng(17);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = rng.between(1, 8);
    std::vector<Edge> edges;
    const std::size_t m = rng.between(0, 14);
    for (std::size_t i = 0; i < m; ++i) edges.push_back({rng.below(n), rng.below(n)});
    const Multigraph g(n, edges);
    EXPECT_EQ(forest_polynomial(g), forest_polynomial_oracle(g));
  }
}

TEST(Forest, OracleSizeGuard) {
  EXPECT_THROW(forest_polynomial_oracle(complete_graph(9)), ResourceError);
  EXPECT_THROW(pseudo_forest_polynomial(complete_graph(9)), ResourceError);
}

TEST(Forest, Multiplicativity) {
  const auto cat = catalog();
  for (std::size_t i = 0; i < cat.size(); i += 3)
    for (std::size_t j = 0; j < cat.size(); j += 4)
      EXPECT_EQ(forest_count(disjoint_union(cat[i].graph, cat[j].graph)),
                forest_count(cat[i].graph) * forest_count(cat[j].graph));
}

TEST(PseudoForest, Examples) {
  EXPECT_EQ(pseudo_forest_polynomial(complete_graph(3)), (IntPolynomial{2, 3, 3, 1}));
  EXPECT_EQ(pseudo_forest_polynomial(empty_graph(4)), IntPolynomial::monomial(1, 4));
  EXPECT_EQ(pseudo_forest_polynomial(complete_graph(2)), (IntPolynomial{0, 1, 1}));
}

TEST(RPolynomial, Examples) {
  EXPECT_EQ(r_polynomial(complete_graph(3)), (IntPolynomial{1, 0, 0, 1}));
  EXPECT_EQ(r_polynomial(complete_graph(2)), (IntPolynomial{0, -1, 1}));
  EXPECT_EQ(r_polynomial(empty_graph(3)), poly_pow(IntPolynomial{-1, 1}, 3));
  EXPECT_THROW(r_polynomial(Multigraph(1, {{0, 0}})), InputError);
}

TEST(RPolynomial, RegularRoute) {
  EXPECT_EQ(r_polynomial_regular(complete_graph(3), 2), (IntPolynomial{1, 0, 0, 1}));
  // (z+1)^4 - 4z(z+1)^2 + 2z^2
  const IntPolynomial c4 = poly_pow(IntPolynomial{1, 1}, 4) - IntPolynomial{0, 4} * poly_pow(IntPolynomial{1, 1}, 2) +
                           IntPolynomial{0, 0, 2};
  EXPECT_EQ(r_polynomial_regular(cycle_graph(4), 2), c4);
  EXPECT_EQ(r_polynomial(cycle_graph(4)), c4);
  EXPECT_EQ(r_polynomial_regular(complete_graph(4), 3), r_polynomial(complete_graph(4)));
  EXPECT_EQ(r_polynomial_regular(petersen(), 3), r_polynomial(petersen()));
  EXPECT_THROW(r_polynomial_regular(path_graph(3), 1), InputError);
}

TEST(RPolynomial, ValueAtTwo) {
  EXPECT_EQ(r_at_two_exact(complete_graph(3), 2), 9);
  EXPECT_EQ(r_at_two_exact(complete_graph(5), 4), 925);
  EXPECT_EQ(r_at_two_exact(complete_graph(6), 5), 14136);
  EXPECT_THROW(r_at_two_exact(star_graph(3), 3), InputError);
}

TEST(PseudoForest, IdentityOnRandomGraphs) {
  for (const auto& [name, g] : catalog()) EXPECT_EQ(poly_shift(r_polynomial(g)), pseudo_forest_polynomial(g)) << name;
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.between(1, 8);
    const Multigraph g = random_simple_graph(n, rng.between(0, std::min<std::size_t>(n * (n - 1) / 2, 14)), rng);
    EXPECT_EQ(poly_shift(r_polynomial(g)), pseudo_forest_polynomial(g));
  }
}

TEST(SpanningTrees, MatrixTree) {
  EXPECT_EQ(spanning_tree_count(complete_graph(4)), 16);
  EXPECT_EQ(spanning_tree_count(cycle_graph(5)), 5);
  EXPECT_EQ(spanning_tree_count(disjoint_union(cycle_graph(3), cycle_graph(3))), 0);
  EXPECT_EQ(spanning_tree_count(petersen()), 2000);
  for (std::size_t n = 2; n <= 9; ++n) EXPECT_EQ(spanning_tree_count(complete_graph(n)), ipow(BigInt(n), n - 2));
  for (const auto& [name, g] : catalog())
    EXPECT_EQ(spanning_tree_count(g), forest_polynomial(g).forests_with_edges(g.num_vertices() - 1)) << name;
  EXPECT_EQ(spanning_tree_count(Multigraph(2, {{0, 1}, {0, 1}, {1, 1}})), 2);
}

TEST(Forest, DominatedByRAtTwo) {
  for (std::size_t d = 3; d <= 5; ++d)
    for (std::size_t n = d + 1; n <= 10; ++n) {
      if (n * d % 2) continue;
      const Multigraph g = random_regular(d, n, 3);
      const BigInt f = forest_count(g);
      EXPECT_LE(f, r_at_two_exact(g, d));
      EXPECT_LT(f, ipow(BigInt(d), n));
    }
}

TEST(Forest, MediumInstancesFinish) {
  // 6-regular on 12 vertices and a 3-regular 20-vertex lift stay well within budget.
  const BigInt f = forest_count(random_regular(6, 12, 4));
  EXPECT_LT(f, ipow(BigInt(6), 12));
  EXPECT_GT(forest_count(two_lift(petersen(), SignAssignment::all(15, -1))), ipow(forest_count(petersen()), 2));
}
