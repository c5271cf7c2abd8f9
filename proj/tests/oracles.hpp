#pragma once

// Reference computations used only by the tests. They avoid the library's
// graph machinery: components come from a local union-find and counts from
// plain enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "yamada/laurent.hpp"
#include "yamada/multigraph.hpp"

namespace oracle {

using yamada::Integer;
using yamada::Laurent;
using yamada::Multigraph;

struct Betti {
  long b0 = 0;
  long b1 = 0;
};

inline Betti betti(const Multigraph& g, std::uint64_t mask) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  long merges = 0;
  long used = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!((mask >> e) & 1U)) continue;
    ++used;
    const auto a = find(g.edges()[e].u);
    const auto b = find(g.edges()[e].v);
    if (a != b) {
      parent[a] = b;
      ++merges;
    }
  }
  const long b0 = static_cast<long>(g.vertex_count()) - merges;
  return {b0, used - merges};
}

inline Laurent power(const Laurent& p, long n) {
  Laurent r(1);
  for (long i = 0; i < n; ++i) r *= p;
  return r;
}

// h(G) = sum_S (-x)^(|S|-|E|) x^b0 y^b1, written with (-1)^(|S|-|E|) x^(|S|-|E|+b0).
inline Laurent yamada_h(const Multigraph& g) {
  Laurent h;
  const long m = static_cast<long>(g.edge_count());
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    const Betti b = betti(g, s);
    const long size = std::popcount(s);
    const long sign = ((m - size) % 2 == 0) ? 1 : -1;
    h += Laurent::monomial(sign, static_cast<int>(size - m + b.b0), static_cast<int>(b.b1));
  }
  return h;
}

// sum_S (-1)^|S| (1+t)^(lambda + b0) (1+w)^b1, lambda = |S| or 0 for the tutte variant.
inline Laurent euler_of_chains(const Multigraph& g, bool with_edges) {
  const Laurent qa = Laurent(1) + Laurent::x();
  const Laurent qb = Laurent(1) + Laurent::y();
  Laurent sum;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.edge_count()); ++s) {
    const Betti b = betti(g, s);
    const long size = std::popcount(s);
    Laurent term = power(qa, (with_edges ? size : 0) + b.b0) * power(qb, b.b1);
    sum += (size % 2 == 0) ? term : -term;
  }
  return sum;
}

// Tutte polynomial from the rank generating function.
inline Laurent tutte(const Multigraph& g) {
  const long full_rank = static_cast<long>(g.vertex_count()) - betti(g, (std::uint64_t{1} << g.edge_count()) - 1).b0;
  const Laurent xm = Laurent::x() - 1;
  const Laurent ym = Laurent::y() - 1;
  Laurent t;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.edge_count()); ++s) {
    const Betti b = betti(g, s);
    const long rank = static_cast<long>(g.vertex_count()) - b.b0;
    t += power(xm, full_rank - rank) * power(ym, b.b1);
  }
  return t;
}

inline Integer proper_colourings(const Multigraph& g, unsigned k) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 1;
  if (k == 0) return 0;
  std::vector<unsigned> c(n, 0);
  Integer count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& e : g.edges()) ok = ok && c[e.u] != c[e.v];
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) return count;
  }
}

// Nowhere-zero Z_k flows for the orientation u -> v of each edge.
inline Integer nowhere_zero_flows(const Multigraph& g, unsigned k) {
  const std::size_t m = g.edge_count();
  if (m == 0) return 1;
  if (k < 2) return 0;
  std::vector<unsigned> f(m, 1);
  Integer count = 0;
  for (;;) {
    std::vector<long> net(g.vertex_count(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      net[g.edges()[e].u] += f[e];
      net[g.edges()[e].v] -= f[e];
    }
    bool ok = true;
    for (long v : net) ok = ok && v % static_cast<long>(k) == 0;
    if (ok) ++count;
    std::size_t i = 0;
    while (i < m && ++f[i] == k) f[i++] = 1;
    if (i == m) return count;
  }
}

inline Multigraph random_graph(std::mt19937& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  std::uniform_int_distribution<yamada::VertexId> pick(0, static_cast<yamada::VertexId>(n - 1));
  std::vector<yamada::Edge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back({pick(rng), pick(rng)});
  return Multigraph(n, std::move(edges));
}

inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
