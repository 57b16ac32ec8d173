#pragma once

// Test-only reference implementations, deliberately independent of the
// library's solver and graph code: adjacency straight from pairwise gcds,
// Bron-Kerbosch with pivoting, and a full-subset sweep for tiny n.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

struct Graph {
  std::size_t n = 0;
  std::vector<std::vector<char>> adj;
};

inline Graph gcd_graph(u64 n, const std::vector<u64>& divisors) {
  Graph g;
  g.n = static_cast<std::size_t>(n);
  g.adj.assign(g.n, std::vector<char>(g.n, 0));
  for (u64 a = 0; a < n; ++a)
    for (u64 b = a + 1; b < n; ++b) {
      const u64 d = std::gcd(b - a, n);
      bool in = false;
      for (u64 x : divisors) in = in || (x == d);
      g.adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = in;
      g.adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = in;
    }
  return g;
}

namespace detail {

inline void bron_kerbosch(const Graph& g, std::size_t rsize, std::vector<int> p, std::vector<int> x,
                          std::size_t& best) {
  if (p.empty() && x.empty()) {
    best = std::max(best, rsize);
    return;
  }
  int pivot = -1;
  std::size_t pivot_score = 0;
  auto consider = [&](int u) {
    std::size_t score = 0;
    for (int v : p) score += g.adj[u][v] ? 1 : 0;
    if (pivot < 0 || score > pivot_score) {
      pivot = u;
      pivot_score = score;
    }
  };
  for (int u : p) consider(u);
  for (int u : x) consider(u);

  std::vector<int> branch;
  for (int v : p)
    if (!g.adj[pivot][v]) branch.push_back(v);

  for (int v : branch) {
    std::vector<int> p2, x2;
    for (int u : p)
      if (g.adj[v][u]) p2.push_back(u);
    for (int u : x)
      if (g.adj[v][u]) x2.push_back(u);
    bron_kerbosch(g, rsize + 1, std::move(p2), std::move(x2), best);
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace detail

inline std::size_t max_clique_bk(const Graph& g) {
  std::vector<int> p(g.n);
  std::iota(p.begin(), p.end(), 0);
  std::size_t best = 0;
  detail::bron_kerbosch(g, 0, std::move(p), {}, best);
  return best;
}

inline std::size_t max_clique_bk(u64 n, const std::vector<u64>& divisors) {
  return max_clique_bk(gcd_graph(n, divisors));
}

// Every subset of Z_n, feasible up to n ~ 22.
inline std::size_t max_clique_subsets(u64 n, const std::vector<u64>& divisors) {
  const Graph g = gcd_graph(n, divisors);
  std::vector<std::uint64_t> nbr(g.n, 0);
  for (std::size_t v = 0; v < g.n; ++v)
    for (std::size_t u = 0; u < g.n; ++u)
      if (g.adj[v][u]) nbr[v] |= std::uint64_t{1} << u;
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n); ++mask) {
    bool clique = true;
    for (std::uint64_t m = mask; clique && m; m &= m - 1) {
      const std::size_t v = static_cast<std::size_t>(std::countr_zero(m));
      const std::uint64_t self = std::uint64_t{1} << v;
      clique = (mask & ~(nbr[v] | self)) == 0;
    }
    if (clique) best = std::max(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

}  // namespace oracle
