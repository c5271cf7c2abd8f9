#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace yamada {

using VertexId = std::uint32_t;
using EdgeIndex = std::size_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  bool operator==(const Edge&) const = default;
};

/// Finite multigraph with a fixed edge order e_1, ..., e_n.
///
/// Loops and parallel edges are allowed. The edge order is part of the value:
/// graphs whose edge lists are permutations of each other compare unequal.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws std::invalid_argument when an endpoint is out of range.
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  /// Checked construction from signed input (e.g. parsed JSON).
  static Multigraph build(std::int64_t vertex_count,
                          std::span<const std::pair<std::int64_t, std::int64_t>> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const;

  bool operator==(const Multigraph&) const = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Upper bound on |E| for anything that enumerates states as bitmasks.
inline constexpr std::size_t kMaxStateWidth = 30;

/// An edge subset S, stored as a bitmask (bit i set iff e_{i+1} is in S).
/// This is also the cube vertex alpha with alpha_i = 1 iff e_i in S.
class StateSubset {
 public:
  StateSubset() = default;
  StateSubset(std::uint64_t bits, std::size_t width);

  static StateSubset empty(std::size_t width) { return {0, width}; }
  static StateSubset full(std::size_t width);

  std::uint64_t bits() const { return bits_; }
  std::size_t width() const { return width_; }
  std::size_t size() const;
  bool contains(EdgeIndex e) const { return e < width_ && ((bits_ >> e) & 1U) != 0; }
  StateSubset with(EdgeIndex e) const;
  /// Number of members of S with index strictly below e.
  std::size_t count_below(EdgeIndex e) const;
  std::vector<EdgeIndex> members() const;

  bool operator==(const StateSubset&) const = default;

 private:
  std::uint64_t bits_ = 0;
  std::size_t width_ = 0;
};

/// Betti data of the spanning subgraph [G:S].
struct StateStats {
  std::size_t b0 = 0;
  std::size_t b1 = 0;
  /// Vertex sets of the components, each sorted, listed by minimal vertex.
  std::vector<std::vector<VertexId>> components;
  /// component_of[v] is the index of v's component in `components`.
  std::vector<std::size_t> component_of;
};

/// Throws std::invalid_argument if S.width() != |E(G)|.
StateStats state_stats(const Multigraph& g, const StateSubset& s);

enum class EdgeKind { loop, isthmus, ordinary };

EdgeKind classify_edge(const Multigraph& g, EdgeIndex e);

enum class ReduceMode { remove, contract };

/// G - e (remove) or G / e (contract). Contraction merges the larger endpoint
/// into the smaller one and renumbers the vertices above it downward; edges
/// parallel to e become loops. Surviving edges keep their relative order.
Multigraph reduce(const Multigraph& g, EdgeIndex e, ReduceMode mode);

inline Multigraph delete_edge(const Multigraph& g, EdgeIndex e) {
  return reduce(g, e, ReduceMode::remove);
}
inline Multigraph contract_edge(const Multigraph& g, EdgeIndex e) {
  return reduce(g, e, ReduceMode::contract);
}

/// Same graph with edges relabelled: new edge k is old edge sigma[k].
Multigraph permute_edges(const Multigraph& g, std::span<const std::size_t> sigma);

/// Spanning subgraph keeping the edges of `gamma` in their induced order.
Multigraph edge_subgraph(const Multigraph& g, const StateSubset& gamma);

/// Disjoint union: h's vertices are shifted by |V(g)| and its edges follow g's.
Multigraph disjoint_union(const Multigraph& g, const Multigraph& h);

/// Identify vertex `g_vertex` of g with vertex `h_vertex` of h (the one-point
/// union H . K). Edges of g come first.
Multigraph wedge(const Multigraph& g, VertexId g_vertex, const Multigraph& h, VertexId h_vertex);

std::size_t component_count(const Multigraph& g);

}  // namespace yamada
