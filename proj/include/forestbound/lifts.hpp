#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "forest.hpp"
#include "multigraph.hpp"
#include "random.hpp"

namespace forestbound {

/// Number of forests of g containing every edge in `required`: the forests of
/// g with those edges contracted, or 0 if they already close a cycle.
inline BigInt forest_counts_with_edges(const Multigraph& g, const std::vector<std::size_t>& required) {
  std::set<std::size_t> distinct(required.begin(), required.end());
  if (distinct.size() != required.size()) throw InputError("forest_counts_with_edges: repeated edge index");
  for (std::size_t id : required) {
    if (id >= g.num_edges()) throw InputError("forest_counts_with_edges: edge index out of range");
    if (g.edge(id).is_loop()) throw InputError("forest_counts_with_edges: required edge is a loop");
  }
  detail::UnionFind uf(g.num_vertices());
  for (std::size_t id : required)
    if (!uf.unite(g.edge(id).u, g.edge(id).v)) return 0;

  // Contract each vertex class to one vertex; every other edge inside a class
  // would close a cycle with the required edges and is dropped.
  std::vector<std::size_t> cls(g.num_vertices());
  std::vector<std::size_t> index(g.num_vertices(), g.num_vertices());
  std::size_t next = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::size_t r = uf.find(v);
    if (index[r] == g.num_vertices()) index[r] = next++;
    cls[v] = index[r];
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (distinct.count(i)) continue;
    const Edge& e = g.edge(i);
    if (cls[e.u] == cls[e.v]) continue;
    edges.push_back({cls[e.u], cls[e.v]});
  }
  return forest_count(Multigraph(next, std::move(edges)));
}

/// Forest counts for one edge pair. For a uniform random forest,
/// P(e,f) <= P(e) P(f) is the integer comparison with_both * total <=
/// with_e * with_f.
struct CorrelationRecord {
  std::size_t e = 0;
  std::size_t f = 0;
  BigInt total;
  BigInt with_e;
  BigInt with_f;
  BigInt with_both;
  bool satisfied = true;
};

inline std::vector<CorrelationRecord> correlation_scan(const Multigraph& g) {
  if (!is_simple(g)) throw InputError("correlation_scan: graph must be simple");
  const BigInt total = forest_count(g);
  std::vector<BigInt> single;
  for (std::size_t i = 0; i < g.num_edges(); ++i) single.push_back(forest_counts_with_edges(g, {i}));
  std::vector<CorrelationRecord> out;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    for (std::size_t j = i + 1; j < g.num_edges(); ++j) {
      CorrelationRecord r{i, j, total, single[i], single[j], forest_counts_with_edges(g, {i, j})};
      r.satisfied = r.with_both * r.total <= r.with_e * r.with_f;
      out.push_back(std::move(r));
    }
  }
  return out;
}

struct LiftComparison {
  BigInt base_squared;  // F(G)^2 = F(G u G)
  BigInt lift;          // F(H)
  bool satisfied = true;
};

inline LiftComparison lift_forest_comparison(const Multigraph& g, const SignAssignment& s) {
  const Multigraph h = two_lift(g, s);
  const BigInt base = forest_count(g);
  LiftComparison c{base * base, forest_count(h)};
  c.satisfied = c.base_squared <= c.lift;
  return c;
}

/// F(a)^(1/v(a)) <= F(b)^(1/v(b)), decided as F(a)^v(b) <= F(b)^v(a).
inline bool root_growth_le(const BigInt& forests_a, std::size_t vertices_a, const BigInt& forests_b,
                           std::size_t vertices_b) {
  return ipow(forests_a, vertices_b) <= ipow(forests_b, vertices_a);
}

inline constexpr std::size_t kLiftDrawsPerRound = 64;

struct LiftSequence {
  std::vector<Multigraph> graphs;
  bool reached_target = false;
};

/// Greedy randomized search for a tower of 2-lifts with growing girth. Each
/// round draws 64 uniform sign vectors, keeps the best (largest girth, ties to
/// fewer shortest cycles), then flips single edge signs while that improves
/// the lift. Stops at `target_girth` or after `max_rounds` lifts.
inline LiftSequence girth_climbing_lift(const Multigraph& g, std::size_t target_girth, std::uint64_t seed,
                                        std::size_t max_rounds) {
  if (!is_simple(g)) throw InputError("girth_climbing_lift: graph must be simple");
  if (!is_connected(g)) throw InputError("girth_climbing_lift: graph must be connected");
  constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();
  auto girth_of = [&](const Multigraph& x) { return girth(x).value_or(kInfinite); };
  // Larger is better: (girth, -shortest cycle count).
  auto score = [&](const Multigraph& x) {
    const std::size_t gx = girth_of(x);
    return std::pair<std::size_t, std::size_t>{gx, gx == kInfinite ? kInfinite : kInfinite - count_shortest_cycles(x)};
  };

  Rng rng(seed);
  LiftSequence seq;
  seq.graphs.push_back(g);
  while (true) {
    const Multigraph& cur = seq.graphs.back();
    if (girth_of(cur) >= target_girth) {
      seq.reached_target = true;
      break;
    }
    if (seq.graphs.size() - 1 >= max_rounds) break;
    std::vector<int> best;
    std::pair<std::size_t, std::size_t> best_score{0, 0};
    for (std::size_t draw = 0; draw < kLiftDrawsPerRound; ++draw) {
      std::vector<int> signs(cur.num_edges());
      for (auto& s : signs) s = (rng.next() >> 63U) ? -1 : 1;
      const auto sc = score(two_lift(cur, SignAssignment(signs)));
      if (best.empty() || sc > best_score) {
        best = std::move(signs);
        best_score = sc;
      }
    }
    for (bool improved = true; improved;) {
      improved = false;
      for (std::size_t i = 0; i < best.size(); ++i) {
        best[i] = -best[i];
        const auto sc = score(two_lift(cur, SignAssignment(best)));
        if (sc > best_score) {
          best_score = sc;
          improved = true;
        } else {
          best[i] = -best[i];
        }
      }
    }
    seq.graphs.push_back(two_lift(cur, SignAssignment(std::move(best))));
  }
  return seq;
}

struct DegreeProductBounds {
  BigInt forests;
  BigInt prod_degree;       // prod d_v
  BigInt prod_degree_plus;  // prod (d_v + 1)
};

inline DegreeProductBounds degree_product_bounds(const Multigraph& g) {
  DegreeProductBounds b{forest_count(g), 1, 1};
  for (std::size_t d : degrees(g)) {
    b.prod_degree *= d;
    b.prod_degree_plus *= d + 1;
  }
  return b;
}

}  // namespace forestbound
