#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "matching.hpp"
#include "multigraph.hpp"
#include "polynomial.hpp"

namespace forestbound {

/// F_G(z) = sum_k f_k z^(n-k), where f_k counts k-edge forests. Equivalently
/// the sum over forests of z^(number of components), i.e. z^k(G) T_G(z+1, 1).
struct ForestPolynomial {
  IntPolynomial poly;
  std::size_t num_vertices = 0;

  // Number of forests with k edges.
  BigInt forests_with_edges(std::size_t k) const {
    return k > num_vertices ? BigInt(0) : poly[num_vertices - k];
  }
  BigInt total() const {
    BigInt s = 0;
    for (const auto& c : poly.coefficients()) s += c;
    return s;
  }
  friend bool operator==(const ForestPolynomial&, const ForestPolynomial&) = default;
};

inline constexpr std::size_t kForestRecursionBudget = 100'000'000;
inline constexpr std::size_t kMaxOracleEdges = 30;

namespace detail {

// Deletion-contraction on a fixed edge order, memoized on the remaining
// multigraph. A state is the not-yet-decided suffix of the edge list with
// vertices relabeled by first appearance, so two branches that merged the
// same vertices share one entry. Vertices with no remaining edge are peeled
// off as factors of z.
class ForestPolynomialSolver {
 public:
  using State = std::vector<std::uint32_t>;  // u0 v0 u1 v1 ...

  // Returns the polynomial of `edges` on `num_vertices` vertices.
  IntPolynomial run(State edges, std::size_t num_vertices) {
    auto [state, isolated] = normalize(std::move(edges), num_vertices);
    return solve(state).shifted_up(isolated);
  }

  std::size_t states_visited() const { return visited_; }

 private:
  // Drops loops, relabels by first appearance and reports how many of the
  // `num_vertices` vertices no longer touch any edge.
  static std::pair<State, std::size_t> normalize(State edges, std::size_t num_vertices) {
    std::unordered_map<std::uint32_t, std::uint32_t> label;
    State out;
    out.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); i += 2) {
      if (edges[i] == edges[i + 1]) continue;
      for (std::size_t j = i; j < i + 2; ++j) {
        auto [it, fresh] = label.try_emplace(edges[j], static_cast<std::uint32_t>(label.size()));
        out.push_back(it->second);
      }
    }
    return {std::move(out), num_vertices - label.size()};
  }

  static std::size_t vertex_count(const State& s) {
    std::uint32_t m = 0;
    for (auto x : s) m = std::max(m, x + 1);
    return s.empty() ? 0 : m;
  }

  const IntPolynomial& solve(const State& state) {
    const std::string key(reinterpret_cast<const char*>(state.data()), state.size() * sizeof(std::uint32_t));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++visited_ > kForestRecursionBudget)
      throw ResourceError("forest_polynomial: recursion budget of 10^8 states exceeded");

    IntPolynomial result = IntPolynomial::constant(1);
    if (!state.empty()) {
      const std::size_t n = vertex_count(state);
      const std::uint32_t a = state[0];
      const std::uint32_t b = state[1];
      // F(G) = F(G - e) + F(G / e)
      State deleted(state.begin() + 2, state.end());
      State contracted = deleted;
      for (auto& x : contracted)
        if (x == b) x = a;
      auto [del_state, del_iso] = normalize(std::move(deleted), n);
      auto [con_state, con_iso] = normalize(std::move(contracted), n - 1);
      result = solve(del_state).shifted_up(del_iso);
      result += solve(con_state).shifted_up(con_iso);
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

  std::unordered_map<std::string, IntPolynomial> memo_;
  std::size_t visited_ = 0;
};

// Edge order for deletion-contraction: vertices by maximum cardinality
// search, each edge placed once both endpoints are numbered. Keeps the set of
// vertices with both decided and undecided edges small.
inline std::vector<std::size_t> frontier_edge_order(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  const auto inc = incidence(g);
  std::vector<std::size_t> position(n, n);
  std::vector<std::size_t> weight(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (Vertex v = 0; v < n; ++v) {
      if (position[v] != n) continue;
      if (pick == n || weight[v] > weight[pick] ||
          (weight[v] == weight[pick] && inc[v].size() < inc[pick].size()))
        pick = v;
    }
    position[pick] = step;
    for (std::size_t id : inc[pick]) {
      const Edge& e = g.edge(id);
      const Vertex other = e.u == pick ? e.v : e.u;
      if (position[other] == n) ++weight[other];
    }
  }
  std::vector<std::size_t> order(g.num_edges());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const Edge& ex = g.edge(x);
    const Edge& ey = g.edge(y);
    const auto kx = std::pair(std::max(position[ex.u], position[ex.v]), std::min(position[ex.u], position[ex.v]));
    const auto ky = std::pair(std::max(position[ey.u], position[ey.v]), std::min(position[ey.u], position[ey.v]));
    return kx < ky;
  });
  return order;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns the surviving root, or nullopt if x and y were already joined.
  std::optional<std::size_t> unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return std::nullopt;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return x;
  }
  std::size_t size_of(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

inline void require_oracle_size(const Multigraph& g, const char* who) {
  if (g.num_edges() > kMaxOracleEdges)
    throw ResourceError(std::string(who) + ": more than 30 edges for subset enumeration");
}

}  // namespace detail

/// Exact F_G(z) by memoized deletion-contraction.
inline ForestPolynomial forest_polynomial(const Multigraph& g) {
  detail::ForestPolynomialSolver::State state;
  state.reserve(2 * g.num_edges());
  for (std::size_t id : detail::frontier_edge_order(g)) {
    state.push_back(static_cast<std::uint32_t>(g.edge(id).u));
    state.push_back(static_cast<std::uint32_t>(g.edge(id).v));
  }
  detail::ForestPolynomialSolver solver;
  return {solver.run(std::move(state), g.num_vertices()), g.num_vertices()};
}

// F(G) = F_G(1).
inline BigInt forest_count(const Multigraph& g) { return forest_polynomial(g).total(); }

/// F_G(z) by testing every edge subset for acyclicity. Independent of the
/// deletion-contraction route; limited to 30 edges.
inline ForestPolynomial forest_polynomial_oracle(const Multigraph& g) {
  detail::require_oracle_size(g, "forest_polynomial_oracle");
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  std::vector<std::uint64_t> by_size(m + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    detail::UnionFind uf(n);
    bool acyclic = true;
    for (std::size_t i = 0; i < m && acyclic; ++i)
      if ((mask >> i) & 1U) acyclic = uf.unite(g.edge(i).u, g.edge(i).v).has_value();
    if (acyclic) ++by_size[static_cast<std::size_t>(std::popcount(mask))];
  }
  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  for (std::size_t k = 0; k <= std::min(m, n); ++k) coeffs[n - k] = by_size[k];
  return {IntPolynomial(std::move(coeffs)), n};
}

/// sum over pseudo-forests A of 2^c(A) z^(n - |A|), where every component of
/// (V, A) has at most as many edges as vertices and c(A) = |A| - n + k(A).
inline IntPolynomial pseudo_forest_polynomial(const Multigraph& g) {
  detail::require_oracle_size(g, "pseudo_forest_polynomial");
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  std::vector<std::size_t> edges_at(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > n) continue;
    detail::UnionFind uf(n);
    std::fill(edges_at.begin(), edges_at.end(), 0);
    std::size_t components = n;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((mask >> i) & 1U)) continue;
      const Edge& e = g.edge(i);
      const std::size_t ru = uf.find(e.u);
      const std::size_t rv = uf.find(e.v);
      if (auto root = uf.unite(ru, rv)) {
        edges_at[*root] = edges_at[ru] + edges_at[rv] + 1;
        --components;
      } else {
        ++edges_at[ru];
      }
    }
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v)
      if (uf.find(v) == v && edges_at[v] > uf.size_of(v)) ok = false;
    if (!ok) continue;
    const std::size_t cycles = size + components - n;
    coeffs[n - size] += BigInt(1) << cycles;
  }
  return IntPolynomial(std::move(coeffs));
}

/// R_G(z) = sum over matchings M of (-z)^|M| prod_{v not in V(M)} (z + d_v - 1),
/// with every matching enumerated edge by edge and grouped by covered set.
inline IntPolynomial r_polynomial(const Multigraph& g) {
  detail::require_loop_free(g, "r_polynomial");
  const std::size_t n = g.num_vertices();
  if (n > 64) throw ResourceError("r_polynomial: more than 64 vertices");
  const auto deg = degrees(g);
  std::map<std::uint64_t, BigInt> covered_count;
  auto enumerate = [&](auto&& self, std::size_t i, std::uint64_t covered) -> void {
    if (i == g.num_edges()) {
      ++covered_count[covered];
      return;
    }
    self(self, i + 1, covered);
    const Edge& e = g.edge(i);
    const std::uint64_t bits = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    if ((covered & bits) == 0) self(self, i + 1, covered | bits);
  };
  enumerate(enumerate, 0, 0);

  IntPolynomial result;
  for (const auto& [covered, count] : covered_count) {
    const auto size = static_cast<std::size_t>(std::popcount(covered)) / 2;
    IntPolynomial term = IntPolynomial::monomial(size % 2 == 0 ? count : BigInt(-count), size);
    for (Vertex v = 0; v < n; ++v)
      if (!((covered >> v) & 1U))
        term *= IntPolynomial{BigInt(static_cast<long long>(deg[v]) - 1), BigInt(1)};
    result += term;
  }
  return result;
}

namespace detail {
inline void require_regular(const Multigraph& g, std::size_t d, const char* who) {
  const auto rd = regular_degree(g);
  if (!rd || *rd != d) throw InputError(std::string(who) + ": graph is not " + std::to_string(d) + "-regular");
}
}  // namespace detail

/// R_G(z) = sum_k (-1)^k m_k z^k (z + d - 1)^(n - 2k) for a d-regular G.
inline IntPolynomial r_polynomial_regular(const Multigraph& g, std::size_t d) {
  detail::require_regular(g, d, "r_polynomial_regular");
  const auto m = matching_counts(g);
  const std::size_t n = g.num_vertices();
  const IntPolynomial base{BigInt(static_cast<long long>(d) - 1), BigInt(1)};
  IntPolynomial result;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const BigInt c = k % 2 == 0 ? m[k] : BigInt(-m[k]);
    result += (poly_pow(base, n - 2 * k) * IntPolynomial::monomial(c, k));
  }
  return result;
}

/// R_G(2) = sum_k (-1)^k m_k 2^k (d + 1)^(n - 2k), which equals
/// 2^(n/2) mu_G((d+1)/sqrt 2) for a d-regular G.
inline BigInt r_at_two_exact(const Multigraph& g, std::size_t d) {
  detail::require_regular(g, d, "r_at_two_exact");
  const auto m = matching_counts(g);
  const std::size_t n = g.num_vertices();
  BigInt total = 0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    BigInt term = m[k] * ipow(BigInt(2), k) * ipow(BigInt(d + 1), n - 2 * k);
    total += k % 2 == 0 ? term : BigInt(-term);
  }
  return total;
}

/// Matrix-tree theorem: determinant of the reduced Laplacian by Bareiss
/// fraction-free elimination. 0 for disconnected graphs.
inline BigInt spanning_tree_count(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return 0;
  if (n == 1) return 1;
  const std::size_t r = n - 1;
  std::vector<std::vector<BigInt>> a(r, std::vector<BigInt>(r, BigInt(0)));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    if (e.u < r) a[e.u][e.u] += 1;
    if (e.v < r) a[e.v][e.v] += 1;
    if (e.u < r && e.v < r) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < r; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < r && a[p][k] == 0) ++p;
      if (p == r) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < r; ++i) {
      for (std::size_t j = k + 1; j < r; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[r - 1][r - 1];
  return sign > 0 ? det : BigInt(-det);
}

}  // namespace forestbound
