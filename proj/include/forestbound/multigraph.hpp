#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace forestbound {

using Vertex = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph: a vertex count and an ordered edge list. Loops and
/// parallel edges are allowed. An edge's identity is its position in the
/// list, which sign assignments and edge-index operations rely on.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t num_vertices, std::vector<Edge> edges = {})
      : num_vertices_(num_vertices), edges_(std::move(edges)) {
    for (const Edge& e : edges_)
      if (e.u >= num_vertices_ || e.v >= num_vertices_)
        throw InputError("Multigraph: edge endpoint out of range");
  }

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
};

/// One sign per base edge; +1 keeps the two sheets parallel, -1 crosses them.
class SignAssignment {
 public:
  SignAssignment() = default;
  explicit SignAssignment(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_)
      if (s != 1 && s != -1) throw InputError("SignAssignment: signs must be +1 or -1");
  }
  static SignAssignment all(std::size_t num_edges, int sign) {
    return SignAssignment(std::vector<int>(num_edges, sign));
  }
  // Bit i of `mask` set means edge i gets -1.
  static SignAssignment from_mask(std::size_t num_edges, std::uint64_t mask) {
    std::vector<int> s(num_edges, 1);
    for (std::size_t i = 0; i < num_edges; ++i)
      if ((mask >> i) & 1U) s[i] = -1;
    return SignAssignment(std::move(s));
  }

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_.at(i); }
  const std::vector<int>& signs() const { return signs_; }

 private:
  std::vector<int> signs_;
};

// Edge-endpoint incidences at v; a loop counts twice.
inline std::size_t degree(const Multigraph& g, Vertex v) {
  if (v >= g.num_vertices()) throw InputError("degree: vertex index out of range");
  std::size_t d = 0;
  for (const Edge& e : g.edges()) d += static_cast<std::size_t>(e.u == v) + static_cast<std::size_t>(e.v == v);
  return d;
}

inline std::vector<std::size_t> degrees(const Multigraph& g) {
  std::vector<std::size_t> d(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

inline std::size_t max_degree(const Multigraph& g) {
  std::size_t m = 0;
  for (std::size_t d : degrees(g)) m = std::max(m, d);
  return m;
}

// The common degree if every vertex has the same degree.
inline std::optional<std::size_t> regular_degree(const Multigraph& g) {
  const auto d = degrees(g);
  if (d.empty()) return std::nullopt;
  for (std::size_t x : d)
    if (x != d.front()) return std::nullopt;
  return d.front();
}

inline bool has_loops(const Multigraph& g) {
  for (const Edge& e : g.edges())
    if (e.is_loop()) return true;
  return false;
}

inline bool is_simple(const Multigraph& g) {
  if (has_loops(g)) return false;
  std::vector<std::vector<bool>> seen(g.num_vertices(), std::vector<bool>(g.num_vertices(), false));
  for (const Edge& e : g.edges()) {
    if (seen[e.u][e.v]) return false;
    seen[e.u][e.v] = seen[e.v][e.u] = true;
  }
  return true;
}

// Incident edge ids per vertex; a loop is listed once.
inline std::vector<std::vector<std::size_t>> incidence(const Multigraph& g) {
  std::vector<std::vector<std::size_t>> inc(g.num_vertices());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    inc[e.u].push_back(i);
    if (!e.is_loop()) inc[e.v].push_back(i);
  }
  return inc;
}

// Component label per vertex, labels 0..k-1 in order of first vertex.
inline std::vector<std::size_t> component_labels(const Multigraph& g) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(g.num_vertices(), kUnset);
  const auto inc = incidence(g);
  std::size_t next = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (label[s] != kUnset) continue;
    std::vector<Vertex> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (std::size_t id : inc[x]) {
        const Edge& e = g.edge(id);
        const Vertex y = e.u == x ? e.v : e.u;
        if (label[y] == kUnset) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

inline std::size_t num_components(const Multigraph& g) {
  const auto labels = component_labels(g);
  std::size_t k = 0;
  for (std::size_t l : labels) k = std::max(k, l + 1);
  return k;
}

inline bool is_connected(const Multigraph& g) { return num_components(g) <= 1; }

inline Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  std::vector<Edge> edges = a.edges();
  const std::size_t off = a.num_vertices();
  for (const Edge& e : b.edges()) edges.push_back({e.u + off, e.v + off});
  return Multigraph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

inline Multigraph delete_edge(const Multigraph& g, std::size_t edge_index) {
  if (edge_index >= g.num_edges()) throw InputError("delete_edge: edge index out of range");
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(edge_index));
  return Multigraph(g.num_vertices(), std::move(edges));
}

/// Merge the endpoints of a non-loop edge into the smaller index; vertices
/// above the larger index shift down by one. Edges parallel to the contracted
/// edge would become loops and are dropped; other edges keep their order.
inline Multigraph contract_edge(const Multigraph& g, std::size_t edge_index) {
  if (edge_index >= g.num_edges()) throw InputError("contract_edge: edge index out of range");
  const Edge c = g.edge(edge_index);
  if (c.is_loop()) throw InputError("contract_edge: cannot contract a loop");
  const Vertex keep = std::min(c.u, c.v);
  const Vertex gone = std::max(c.u, c.v);
  auto relabel = [&](Vertex x) {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (i == edge_index) continue;
    const Edge& e = g.edge(i);
    const bool parallel = (e.u == c.u && e.v == c.v) || (e.u == c.v && e.v == c.u);
    if (parallel) continue;
    edges.push_back({relabel(e.u), relabel(e.v)});
  }
  return Multigraph(g.num_vertices() - 1, std::move(edges));
}

/// The 2-lift of g encoded by s. Vertex (v, sheet) has index v + sheet * n,
/// and lift edge i + sheet * m starts at sheet `sheet` over base edge i. A +
/// edge (u,v) yields (u0,v0),(u1,v1); a - edge yields (u0,v1),(u1,v0). With
/// all signs + this is exactly disjoint_union(g, g).
inline Multigraph two_lift(const Multigraph& g, const SignAssignment& s) {
  if (has_loops(g)) throw InputError("two_lift: base graph has a loop");
  if (s.size() != g.num_edges()) throw InputError("two_lift: sign count does not match edge count");
  const std::size_t n = g.num_vertices();
  std::vector<Edge> edges;
  edges.reserve(2 * g.num_edges());
  for (std::size_t sheet = 0; sheet < 2; ++sheet) {
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edge(i);
      const std::size_t other = s[i] > 0 ? sheet : 1 - sheet;
      edges.push_back({e.u + sheet * n, e.v + other * n});
    }
  }
  return Multigraph(2 * n, std::move(edges));
}

/// Shortest cycle length; a loop is a 1-cycle, a parallel pair a 2-cycle.
/// nullopt when g is a forest.
inline std::optional<std::size_t> girth(const Multigraph& g) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  const auto inc = incidence(g);
  std::size_t best = kUnset;
  std::vector<std::size_t> dist(g.num_vertices());
  std::vector<std::size_t> via(g.num_vertices());
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    std::fill(dist.begin(), dist.end(), kUnset);
    dist[root] = 0;
    via[root] = kUnset;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      if (2 * dist[x] + 1 >= best) break;
      for (std::size_t id : inc[x]) {
        if (id == via[x]) continue;
        const Edge& e = g.edge(id);
        const Vertex y = e.u == x ? e.v : e.u;
        if (dist[y] == kUnset) {
          dist[y] = dist[x] + 1;
          via[y] = id;
          q.push(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == kUnset) return std::nullopt;
  return best;
}

/// Number of cycles whose length equals the girth; 0 for forests.
inline std::size_t count_shortest_cycles(const Multigraph& g) {
  const auto gg = girth(g);
  if (!gg) return 0;
  const std::size_t len = *gg;
  std::size_t loops = 0;
  for (const Edge& e : g.edges()) loops += e.is_loop() ? 1 : 0;
  if (len == 1) return loops;
  const auto inc = incidence(g);
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  std::vector<std::size_t> dist(g.num_vertices());
  std::vector<std::size_t> paths(g.num_vertices());
  // Each shortest cycle through edge (u,v) is a shortest u-v path of length
  // len-1 avoiding that edge; every cycle is seen once per edge.
  for (std::size_t skip = 0; skip < g.num_edges(); ++skip) {
    const Edge& c = g.edge(skip);
    if (c.is_loop()) continue;
    std::fill(dist.begin(), dist.end(), kUnset);
    std::fill(paths.begin(), paths.end(), 0);
    dist[c.u] = 0;
    paths[c.u] = 1;
    std::queue<Vertex> q;
    q.push(c.u);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      if (dist[x] + 1 > len - 1) continue;
      for (std::size_t id : inc[x]) {
        if (id == skip) continue;
        const Edge& e = g.edge(id);
        if (e.is_loop()) continue;
        const Vertex y = e.u == x ? e.v : e.u;
        if (dist[y] == kUnset) {
          dist[y] = dist[x] + 1;
          paths[y] = paths[x];
          q.push(y);
        } else if (dist[y] == dist[x] + 1) {
          paths[y] += paths[x];
        }
      }
    }
    if (dist[c.v] == len - 1) total += paths[c.v];
  }
  return total / len;
}

}  // namespace forestbound
