#include "yamada/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace yamada {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

std::size_t components_of_edges(const Multigraph& g, const StateSubset& s) {
  UnionFind uf(g.vertex_count());
  std::size_t merges = 0;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (s.contains(e) && uf.unite(g.edge(e).u, g.edge(e).v)) ++merges;
  }
  return g.vertex_count() - merges;
}

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u >= vertex_count_ || edges_[i].v >= vertex_count_) {
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range (" +
                                  std::to_string(edges_[i].u) + ", " + std::to_string(edges_[i].v) +
                                  ") with " + std::to_string(vertex_count_) + " vertices");
    }
  }
}

Multigraph Multigraph::build(std::int64_t vertex_count,
                             std::span<const std::pair<std::int64_t, std::int64_t>> edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (vertex_count > std::int64_t{1} << 31) throw std::invalid_argument("vertex count too large");
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range (" +
                                  std::to_string(u) + ", " + std::to_string(v) + ") with " +
                                  std::to_string(vertex_count) + " vertices");
    }
    list.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  return Multigraph(static_cast<std::size_t>(vertex_count), std::move(list));
}

const Edge& Multigraph::edge(EdgeIndex e) const {
  if (e >= edges_.size()) throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
  return edges_[e];
}

StateSubset::StateSubset(std::uint64_t bits, std::size_t width) : bits_(bits), width_(width) {
  if (width > 63) throw std::invalid_argument("state width exceeds 63 edges");
  if ((bits >> width) != 0) throw std::invalid_argument("state bitmask wider than edge count");
}

StateSubset StateSubset::full(std::size_t width) {
  if (width > 63) throw std::invalid_argument("state width exceeds 63 edges");
  return {(std::uint64_t{1} << width) - 1, width};
}

std::size_t StateSubset::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

StateSubset StateSubset::with(EdgeIndex e) const {
  if (e >= width_) throw std::out_of_range("edge index out of range for state");
  return {bits_ | (std::uint64_t{1} << e), width_};
}

std::size_t StateSubset::count_below(EdgeIndex e) const {
  const std::uint64_t mask = e >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e) - 1;
  return static_cast<std::size_t>(std::popcount(bits_ & mask));
}

std::vector<EdgeIndex> StateSubset::members() const {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < width_; ++e) {
    if (contains(e)) out.push_back(e);
  }
  return out;
}

StateStats state_stats(const Multigraph& g, const StateSubset& s) {
  if (s.width() != g.edge_count()) {
    throw std::invalid_argument("state width " + std::to_string(s.width()) + " does not match " +
                                std::to_string(g.edge_count()) + " edges");
  }
  const std::size_t n = g.vertex_count();
  UnionFind uf(n);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (s.contains(e)) uf.unite(g.edge(e).u, g.edge(e).v);
  }

  StateStats stats;
  stats.component_of.assign(n, 0);
  // Scanning vertices in increasing order visits each root first at its
  // component's minimal vertex, which gives the canonical order directly.
  std::vector<std::size_t> slot_of_root(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = uf.find(v);
    if (slot_of_root[root] == n) {
      slot_of_root[root] = stats.components.size();
      stats.components.emplace_back();
    }
    const std::size_t slot = slot_of_root[root];
    stats.components[slot].push_back(static_cast<VertexId>(v));
    stats.component_of[v] = slot;
  }
  stats.b0 = stats.components.size();
  // b1 = |S| - |V| + b0 is nonnegative for every spanning subgraph.
  stats.b1 = s.size() + stats.b0 - n;
  return stats;
}

EdgeKind classify_edge(const Multigraph& g, EdgeIndex e) {
  const Edge& edge = g.edge(e);
  if (edge.is_loop()) return EdgeKind::loop;
  const auto all = StateSubset::full(g.edge_count());
  const StateSubset without(all.bits() & ~(std::uint64_t{1} << e), g.edge_count());
  return components_of_edges(g, without) > components_of_edges(g, all) ? EdgeKind::isthmus
                                                                      : EdgeKind::ordinary;
}

Multigraph reduce(const Multigraph& g, EdgeIndex e, ReduceMode mode) {
  const Edge removed = g.edge(e);
  std::vector<Edge> survivors;
  survivors.reserve(g.edge_count() - 1);
  if (mode == ReduceMode::remove) {
    for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
      if (i != e) survivors.push_back(g.edge(i));
    }
    return Multigraph(g.vertex_count(), std::move(survivors));
  }

  if (removed.is_loop()) throw std::invalid_argument("cannot contract a loop");
  const VertexId keep = std::min(removed.u, removed.v);
  const VertexId gone = std::max(removed.u, removed.v);
  auto relabel = [&](VertexId v) -> VertexId {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    if (i == e) continue;
    survivors.push_back({relabel(g.edge(i).u), relabel(g.edge(i).v)});
  }
  return Multigraph(g.vertex_count() - 1, std::move(survivors));
}

Multigraph permute_edges(const Multigraph& g, std::span<const std::size_t> sigma) {
  const std::size_t n = g.edge_count();
  if (sigma.size() != n) throw std::invalid_argument("permutation length does not match edge count");
  std::vector<bool> seen(n, false);
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (sigma[k] >= n || seen[sigma[k]]) throw std::invalid_argument("not a permutation of edge indices");
    seen[sigma[k]] = true;
    edges.push_back(g.edge(sigma[k]));
  }
  return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph edge_subgraph(const Multigraph& g, const StateSubset& gamma) {
  if (gamma.width() != g.edge_count()) throw std::invalid_argument("edge subset width mismatch");
  std::vector<Edge> edges;
  for (EdgeIndex e : gamma.members()) edges.push_back(g.edge(e));
  return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph disjoint_union(const Multigraph& g, const Multigraph& h) {
  const auto shift = static_cast<VertexId>(g.vertex_count());
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Multigraph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

Multigraph wedge(const Multigraph& g, VertexId g_vertex, const Multigraph& h, VertexId h_vertex) {
  if (g_vertex >= g.vertex_count() || h_vertex >= h.vertex_count()) {
    throw std::invalid_argument("wedge vertex out of range");
  }
  // h's vertices other than h_vertex are appended after g's, in order.
  const auto base = static_cast<VertexId>(g.vertex_count());
  auto relabel = [&](VertexId v) -> VertexId {
    if (v == h_vertex) return g_vertex;
    return base + (v > h_vertex ? v - 1 : v);
  };
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.push_back({relabel(e.u), relabel(e.v)});
  return Multigraph(g.vertex_count() + h.vertex_count() - 1, std::move(edges));
}

std::size_t component_count(const Multigraph& g) {
  return components_of_edges(g, StateSubset::full(g.edge_count()));
}

}  // namespace yamada
