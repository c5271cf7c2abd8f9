#pragma once

#include <cstddef>

#include "yamada/multigraph.hpp"

namespace yamada {

/// T_n: the path 0 - 1 - ... - n.
Multigraph path_tree(std::size_t n);
/// The star K_{1,n}, another tree with n edges.
Multigraph star_tree(std::size_t n);
/// L_n: one vertex with n loops.
Multigraph bouquet(std::size_t n);
/// D_n: two vertices joined by n parallel edges.
Multigraph multiedge(std::size_t n);
/// P_n: simple cycle with n edges (P_1 is a loop, P_2 the bigon).
Multigraph cycle_graph(std::size_t n);
/// n isolated vertices.
Multigraph edgeless(std::size_t n);

}  // namespace yamada
