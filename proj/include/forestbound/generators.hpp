#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "multigraph.hpp"
#include "random.hpp"

namespace forestbound {

inline Multigraph empty_graph(std::size_t n) { return Multigraph(n); }

inline Multigraph complete_graph(std::size_t n) {
  if (n == 0) throw InputError("complete_graph: n must be positive");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Multigraph(n, std::move(edges));
}

inline Multigraph cycle_graph(std::size_t k) {
  if (k < 3) throw InputError("cycle_graph: k must be at least 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  return Multigraph(k, std::move(edges));
}

inline Multigraph path_graph(std::size_t n) {
  if (n == 0) throw InputError("path_graph: n must be positive");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Multigraph(n, std::move(edges));
}

inline Multigraph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Multigraph(leaves + 1, std::move(edges));
}

// r cycles of length k sharing vertex 0.
inline Multigraph glued_cycles(std::size_t k, std::size_t r) {
  if (k < 3) throw InputError("glued_cycles: k must be at least 3");
  if (r < 1) throw InputError("glued_cycles: r must be positive");
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t c = 0; c < r; ++c) {
    Vertex prev = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 0});
  }
  return Multigraph(next, std::move(edges));
}

// Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram.
inline Multigraph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (Vertex i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (Vertex i = 0; i < 5; ++i) edges.push_back({i + 5, (i + 2) % 5 + 5});
  return Multigraph(10, std::move(edges));
}

inline Multigraph complement(const Multigraph& g) {
  if (!is_simple(g)) throw InputError("complement: graph must be simple");
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!adj[u][v]) edges.push_back({u, v});
  return Multigraph(n, std::move(edges));
}

inline constexpr std::size_t kMaxRegularAttempts = 10000;

namespace detail {

// One uniform pairing of the d*n half-edges, abandoned as soon as it shows a
// loop or a repeated pair. Abandoning early rejects exactly the same pairings
// as building them in full and checking afterwards.
inline std::optional<std::vector<Edge>> try_simple_pairing(std::size_t d, std::size_t n, Rng& rng) {
  std::vector<Vertex> points;
  points.reserve(d * n);
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t j = 0; j < d; ++j) points.push_back(v);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  while (!points.empty()) {
    const Vertex a = points.back();
    points.pop_back();
    const std::size_t pick = rng.below(points.size());
    const Vertex b = points[pick];
    points[pick] = points.back();
    points.pop_back();
    if (a == b || adj[a][b]) return std::nullopt;
    adj[a][b] = adj[b][a] = true;
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
  return edges;
}

}  // namespace detail

/// Uniformly random simple d-regular graph on n vertices, deterministic in
/// (d, n, seed). Configuration model with whole-pairing rejection; when
/// d > (n-1)/2 the sparser complement is generated instead, which keeps the
/// distribution uniform since complementation is a bijection.
inline Multigraph random_regular(std::size_t d, std::size_t n, std::uint64_t seed) {
  if (n == 0 || d == 0) throw InputError("random_regular: d and n must be positive");
  if ((d * n) % 2 != 0) throw InputError("random_regular: d*n must be even");
  if (d >= n) throw InputError("random_regular: need d < n");
  Rng rng(seed);
  const std::size_t dd = std::min(d, n - 1 - d);
  const bool use_complement = dd != d;
  for (std::size_t attempt = 0; attempt < kMaxRegularAttempts; ++attempt) {
    if (auto edges = detail::try_simple_pairing(dd, n, rng)) {
      Multigraph g(n, std::move(*edges));
      return use_complement ? complement(g) : g;
    }
  }
  throw GenerationError("random_regular: rejection sampling failed " +
                        std::to_string(kMaxRegularAttempts) + " consecutive times");
}

// Uniform simple graph with n vertices and m edges.
inline Multigraph random_simple_graph(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  if (m > pairs.size()) throw InputError("random_simple_graph: too many edges");
  for (std::size_t i = 0; i < m; ++i) std::swap(pairs[i], pairs[i + rng.below(pairs.size() - i)]);
  pairs.resize(m);
  return Multigraph(n, std::move(pairs));
}

}  // namespace forestbound
