#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "yamada/cube.hpp"
#include "yamada/multigraph.hpp"

namespace yamada {

/// Verdict of one structural check. A failing report always has a witness.
struct CheckReport {
  std::string name;
  bool passed = false;
  std::string witness;
};

/// graded_euler(C) == chi(H) == g(G; t, w).
CheckReport check_euler(const Multigraph& g, std::size_t max_edges = kDefaultMaxEdges);

/// Cohomology tables (free ranks and torsion) of G and G_sigma coincide.
/// Throws std::invalid_argument if sigma is not a permutation of the edges.
CheckReport check_permutation_invariance(const Multigraph& g, std::span<const std::size_t> sigma,
                                         std::size_t max_edges = kDefaultMaxEdges);

/// phi and psi are chain maps, psi phi = id on C_T, the induced map of psi phi
/// is the identity on H_T (x) Q, and H_T <= H_Y rank by rank.
CheckReport check_retraction(const Multigraph& g, std::size_t max_edges = kDefaultMaxEdges);

/// h(G) = h(G/e) - x^-1 h(G-e) at every ordinary edge; vacuous pass if none.
CheckReport check_deletion_contraction(const Multigraph& g);

/// The projection onto the spanning subgraph with edges gamma commutes with
/// the differentials of both variants.
CheckReport check_projection(const Multigraph& g, const StateSubset& gamma,
                             std::size_t max_edges = kDefaultMaxEdges);

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

/// Every multigraph on at most `max_vertices` vertices with at most
/// `max_edges` edges, one per multiset of endpoint pairs (no isomorphism
/// reduction). Edges are listed in nondecreasing pair order.
std::vector<NamedGraph> small_multigraphs(std::size_t max_vertices, std::size_t max_edges);

/// small_multigraphs(3, 4), T_n, L_n, D_n, P_n for n <= 4, the bigon and the
/// triangle.
std::vector<NamedGraph> curated_corpus();

}  // namespace yamada
