#include "yamada/families.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace yamada {

Multigraph path_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  return Multigraph(n + 1, std::move(edges));
}

Multigraph star_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) edges.push_back({0, static_cast<VertexId>(i)});
  return Multigraph(n + 1, std::move(edges));
}

Multigraph bouquet(std::size_t n) { return Multigraph(1, std::vector<Edge>(n, Edge{0, 0})); }

Multigraph multiedge(std::size_t n) { return Multigraph(2, std::vector<Edge>(n, Edge{0, 1})); }

Multigraph cycle_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cycle_graph: n must be positive");
  std::vector<Edge> edges;
  if (n == 1) return Multigraph(1, {Edge{0, 0}});
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
  }
  // Endpoints stored with u <= v, so P_2 is (0,1),(0,1).
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  return Multigraph(n, std::move(edges));
}

Multigraph edgeless(std::size_t n) { return Multigraph(n, {}); }

}  // namespace yamada
