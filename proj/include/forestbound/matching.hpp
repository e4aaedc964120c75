#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "multigraph.hpp"
#include "polynomial.hpp"

namespace forestbound {

namespace detail {

inline void require_loop_free(const Multigraph& g, const char* who) {
  if (has_loops(g)) throw InputError(std::string(who) + ": graph has a loop");
}

class MatchingPolynomialSolver {
 public:
  explicit MatchingPolynomialSolver(const Multigraph& g) : adj_(g.num_vertices()) {
    for (const Edge& e : g.edges()) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
  }

  // mu of the subgraph induced on `alive`:
  //   mu(S) = x mu(S - u) - sum over edges uv inside S of mu(S - u - v).
  const IntPolynomial& solve(std::uint64_t alive) {
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
    IntPolynomial result = IntPolynomial::constant(1);
    if (alive != 0) {
      const auto u = static_cast<Vertex>(std::countr_zero(alive));
      const std::uint64_t rest = alive & ~(std::uint64_t{1} << u);
      result = solve(rest).shifted_up(1);
      for (Vertex v : adj_[u])
        if ((rest >> v) & 1U) result -= solve(rest & ~(std::uint64_t{1} << v));
    }
    return memo_.emplace(alive, std::move(result)).first->second;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::unordered_map<std::uint64_t, IntPolynomial> memo_;
};

}  // namespace detail

inline constexpr std::size_t kMaxMatchingVertices = 64;

/// Matching polynomial mu_G(x) = sum_k (-1)^k m_k x^(n-2k) by the vertex
/// recursion, memoized on the surviving vertex set. Parallel edges each
/// contribute their own term.
inline IntPolynomial matching_polynomial(const Multigraph& g) {
  detail::require_loop_free(g, "matching_polynomial");
  const std::size_t n = g.num_vertices();
  if (n > kMaxMatchingVertices) throw ResourceError("matching_polynomial: more than 64 vertices");
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  detail::MatchingPolynomialSolver solver(g);
  return solver.solve(all);
}

/// m_k, the number of k-edge matchings, for k = 0..max. m_0 = 1.
inline std::vector<BigInt> matching_counts(const Multigraph& g) {
  detail::require_loop_free(g, "matching_counts");
  const IntPolynomial mu = matching_polynomial(g);
  const std::size_t n = g.num_vertices();
  std::vector<BigInt> m;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    BigInt c = mu[n - 2 * k];
    m.push_back(k % 2 == 0 ? c : BigInt(-c));
  }
  while (m.size() > 1 && m.back() == 0) m.pop_back();
  return m;
}

// m_k(K_n) = n! / (2^k k! (n-2k)!).
inline std::vector<BigInt> matching_counts_complete(std::size_t n) {
  if (n == 0) throw InputError("matching_counts_complete: n must be positive");
  std::vector<BigInt> fact(n + 1, BigInt(1));
  for (std::size_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<BigInt> m;
  for (std::size_t k = 0; 2 * k <= n; ++k)
    m.push_back(fact[n] / (ipow(BigInt(2), k) * fact[k] * fact[n - 2 * k]));
  return m;
}

/// Tree of simple paths from a root vertex. Node 0 is the trivial path (u);
/// every other node extends its parent's path by `vertex`.
struct PathTree {
  struct Node {
    Vertex vertex;
    std::size_t parent;  // kNoParent for the root
    std::size_t depth;   // number of edges in the path
  };
  static constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

  std::vector<Node> nodes;
  std::vector<std::vector<std::size_t>> children;

  std::size_t size() const { return nodes.size(); }

  std::vector<Vertex> path(std::size_t node) const {
    std::vector<Vertex> p;
    for (std::size_t i = node; i != kNoParent; i = nodes[i].parent) p.push_back(nodes[i].vertex);
    return {p.rbegin(), p.rend()};
  }
};

inline constexpr std::size_t kMaxPathTreeNodes = 10'000'000;

/// T(G, u). `max_depth` truncates to paths of at most that many edges, which
/// is all a closed walk of length 2*max_depth can reach.
inline PathTree path_tree(const Multigraph& g, Vertex root,
                          std::size_t max_depth = std::numeric_limits<std::size_t>::max()) {
  if (!is_simple(g)) throw InputError("path_tree: graph must be simple");
  if (root >= g.num_vertices()) throw InputError("path_tree: root out of range");
  std::vector<std::vector<Vertex>> adj(g.num_vertices());
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  PathTree tree;
  tree.nodes.push_back({root, PathTree::kNoParent, 0});
  tree.children.emplace_back();
  std::vector<bool> on_path(g.num_vertices(), false);
  on_path[root] = true;

  auto extend = [&](auto&& self, std::size_t node) -> void {
    const auto& cur = tree.nodes[node];
    if (cur.depth >= max_depth) return;
    const Vertex x = cur.vertex;
    const std::size_t depth = cur.depth;
    for (Vertex y : adj[x]) {
      if (on_path[y]) continue;
      if (tree.nodes.size() >= kMaxPathTreeNodes)
        throw ResourceError("path_tree: node budget of 10^7 exceeded");
      const std::size_t child = tree.nodes.size();
      tree.nodes.push_back({y, node, depth + 1});
      tree.children.emplace_back();
      tree.children[node].push_back(child);
      on_path[y] = true;
      self(self, child);
      on_path[y] = false;
    }
  };
  extend(extend, 0);
  return tree;
}

/// Closed walks of length `len` at the root of T(G, u).
inline BigInt tree_like_closed_walks(const Multigraph& g, Vertex u, std::size_t len) {
  const PathTree tree = path_tree(g, u, len / 2);
  std::vector<BigInt> walks(tree.size(), BigInt(0));
  std::vector<BigInt> next(tree.size());
  walks[0] = 1;
  for (std::size_t step = 0; step < len; ++step) {
    for (std::size_t i = 0; i < tree.size(); ++i) {
      BigInt acc = 0;
      if (tree.nodes[i].parent != PathTree::kNoParent) acc += walks[tree.nodes[i].parent];
      for (std::size_t c : tree.children[i]) acc += walks[c];
      next[i] = std::move(acc);
    }
    walks.swap(next);
  }
  return walks[0];
}

/// Sum over all roots; equals the power sum of the roots of mu_G.
inline BigInt total_tree_like_walks(const Multigraph& g, std::size_t len) {
  BigInt total = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) total += tree_like_closed_walks(g, u, len);
  return total;
}

}  // namespace forestbound
