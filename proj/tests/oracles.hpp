#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the Multigraph container.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include <forestbound/bigint.hpp>
#include <forestbound/multigraph.hpp>

namespace oracle {

using forestbound::BigInt;
using forestbound::Multigraph;

// m_k by enumerating every edge subset.
inline std::vector<BigInt> matching_counts(const Multigraph& g) {
  const std::size_t m = g.num_edges();
  std::vector<BigInt> out(g.num_vertices() / 2 + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<bool> used(g.num_vertices(), false);
    bool ok = true;
    std::size_t k = 0;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1U)) continue;
      const auto& e = g.edge(i);
      if (used[e.u] || used[e.v]) ok = false;
      used[e.u] = used[e.v] = true;
      ++k;
    }
    if (ok) ++out[k];
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// Acyclic edge subsets of each size, checked by counting components with a DFS.
inline std::vector<BigInt> forest_counts_by_size(const Multigraph& g) {
  const std::size_t m = g.num_edges();
  const std::size_t n = g.num_vertices();
  std::vector<BigInt> out(n + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::vector<std::size_t>> adj(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1U)) continue;
      adj[g.edge(i).u].push_back(g.edge(i).v);
      adj[g.edge(i).v].push_back(g.edge(i).u);
      ++k;
    }
    std::vector<bool> seen(n, false);
    std::size_t comps = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++comps;
      std::vector<std::size_t> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v])
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
      }
    }
    if (k + comps == n) ++out[k];
  }
  return out;
}

// Shortest cycle: for each edge, the shortest path between its ends avoiding it.
inline std::size_t girth(const Multigraph& g) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t best = kNone;
  for (std::size_t skip = 0; skip < g.num_edges(); ++skip) {
    const auto& e = g.edge(skip);
    if (e.is_loop()) return 1;
    std::vector<std::size_t> dist(g.num_vertices(), kNone);
    std::queue<std::size_t> q;
    dist[e.u] = 0;
    q.push(e.u);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t i = 0; i < g.num_edges(); ++i) {
        if (i == skip) continue;
        const auto& f = g.edge(i);
        std::size_t w = kNone;
        if (f.u == v) w = f.v;
        else if (f.v == v) w = f.u;
        if (w != kNone && dist[w] == kNone) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    if (dist[e.v] != kNone) best = std::min(best, dist[e.v] + 1);
  }
  return best;
}

}  // namespace oracle
