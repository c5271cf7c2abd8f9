#include "yamada/verify.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <string>

#include "yamada/families.hpp"
#include "yamada/homology.hpp"
#include "yamada/invariants.hpp"

namespace yamada {

namespace {

CheckReport pass(std::string name) { return {std::move(name), true, {}}; }

CheckReport fail(std::string name, std::string witness) {
  if (witness.empty()) witness = "unspecified failure";
  return {std::move(name), false, std::move(witness)};
}

std::string describe(const CohomologySummand& s) {
  std::ostringstream os;
  os << "H^" << s.height << " at (" << s.bidegree.j << "," << s.bidegree.k << "): rank " << s.free_rank;
  if (!s.torsion.empty()) {
    os << ", torsion";
    for (const auto& t : s.torsion) os << ' ' << t.get_str();
  }
  return os.str();
}

std::string first_table_difference(const CohomologyTable& a, const CohomologyTable& b) {
  const std::size_t n = std::max(a.summands.size(), b.summands.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.summands.size()) return "only in permuted graph: " + describe(b.summands[i]);
    if (i >= b.summands.size()) return "only in original graph: " + describe(a.summands[i]);
    if (!(a.summands[i] == b.summands[i])) {
      return "original " + describe(a.summands[i]) + " vs permuted " + describe(b.summands[i]);
    }
  }
  return "tables differ in height count";
}

}  // namespace

CheckReport check_euler(const Multigraph& g, std::size_t max_edges) {
  const std::string name = "euler";
  try {
    BuildOptions options;
    options.max_edges = max_edges;
    const BigradedComplex cx = build_complex(g, Variant::yamada, options);
    const Laurent chains = graded_euler(cx);
    const Laurent homology = poincare(cohomology(cx)).euler;
    const Laurent expected = g_polynomials(g).g;
    if (chains == homology && homology == expected) return pass(name);
    return fail(name, "chains: " + to_string(chains, "t", "w") + "; cohomology: " + to_string(homology, "t", "w") +
                          "; g: " + to_string(expected, "t", "w"));
  } catch (const std::logic_error& e) {
    return fail(name, e.what());
  }
}

CheckReport check_permutation_invariance(const Multigraph& g, std::span<const std::size_t> sigma,
                                         std::size_t max_edges) {
  const Multigraph permuted = permute_edges(g, sigma);
  const std::string name = "permutation_invariance";
  BuildOptions options;
  options.max_edges = max_edges;
  for (Variant v : {Variant::yamada, Variant::tutte}) {
    const CohomologyTable original = cohomology(build_complex(g, v, options));
    const CohomologyTable relabelled = cohomology(build_complex(permuted, v, options));
    if (!(original == relabelled)) {
      return fail(name, std::string(to_string(v)) + " variant: " + first_table_difference(original, relabelled));
    }
  }
  return pass(name);
}

CheckReport check_retraction(const Multigraph& g, std::size_t max_edges) {
  const std::string name = "retraction";
  BuildOptions options;
  options.max_edges = max_edges;
  const BigradedComplex cy = build_complex(g, Variant::yamada, options);
  const BigradedComplex ct = build_complex(g, Variant::tutte, options);
  const PhiPsi maps = phi_psi(ct.layout(), cy.layout());

  if (auto defect = chain_map_defect(ct, cy, maps.phi)) return fail(name, "phi: " + defect->description);
  if (auto defect = chain_map_defect(cy, ct, maps.psi)) return fail(name, "psi: " + defect->description);

  const ChainMap round_trip = compose(maps.psi, maps.phi);
  for (std::size_t i = 0; i < round_trip.size(); ++i) {
    const SparseMatrix id = SparseMatrix::identity(ct.layout().dimension(i));
    if (auto diff = first_difference(round_trip[i], id)) {
      std::ostringstream os;
      os << "psi phi != id at height " << i << ", entry (" << diff->row << "," << diff->col << ")";
      return fail(name, os.str());
    }
  }

  const CohomologyTable ht = cohomology(ct);
  const CohomologyTable hy = cohomology(cy);
  const InducedRanks induced = induced_map_ranks(ct, ct, round_trip);
  const InducedRanks defect = induced_map_ranks(ct, ct, subtract(round_trip, identity_map(ct)));
  for (const auto& [key, rank] : induced) {
    const auto& [i, d] = key;
    std::ostringstream where;
    where << " at H^" << i << " (" << d.j << "," << d.k << ")";
    if (rank != ht.free_rank(i, d)) {
      return fail(name, "induced psi phi has rank " + std::to_string(rank) + " instead of " +
                            std::to_string(ht.free_rank(i, d)) + where.str());
    }
    if (defect.at(key) != 0) return fail(name, "induced psi phi differs from the identity" + where.str());
  }
  for (const auto& s : ht.summands) {
    if (s.free_rank > hy.free_rank(s.height, s.bidegree)) {
      return fail(name, "H_T exceeds H_Y: " + describe(s) + " but H_Y rank " +
                            std::to_string(hy.free_rank(s.height, s.bidegree)));
    }
  }
  return pass(name);
}

CheckReport check_deletion_contraction(const Multigraph& g) {
  const std::string name = "deletion_contraction";
  const Laurent h = yamada_state_sum(g);
  const Laurent x_inverse = Laurent::x().inverse();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (classify_edge(g, e) != EdgeKind::ordinary) continue;
    const Laurent rhs = yamada_state_sum(contract_edge(g, e)) - x_inverse * yamada_state_sum(delete_edge(g, e));
    if (h != rhs) {
      return fail(name, "edge " + std::to_string(e) + ": h(G) = " + to_string(h) +
                            " but h(G/e) - x^-1 h(G-e) = " + to_string(rhs));
    }
  }
  return pass(name);
}

CheckReport check_projection(const Multigraph& g, const StateSubset& gamma, std::size_t max_edges) {
  const std::string name = "projection";
  if (gamma.width() != g.edge_count()) throw std::invalid_argument("projection: edge subset width mismatch");
  BuildOptions options;
  options.max_edges = max_edges;
  const Multigraph sub = edge_subgraph(g, gamma);
  for (Variant v : {Variant::yamada, Variant::tutte}) {
    const BigradedComplex whole = build_complex(g, v, options);
    const BigradedComplex part = build_complex(sub, v, options);
    const ProjectionMap p = projection_map(whole.layout(), gamma);
    if (auto defect = chain_map_defect(whole, part, p.maps)) {
      return fail(name, std::string(to_string(v)) + " variant: " + defect->description);
    }
  }
  return pass(name);
}

std::vector<NamedGraph> small_multigraphs(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<NamedGraph> out;
  for (std::size_t n = 0; n <= max_vertices; ++n) {
    std::vector<Edge> pairs;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u; v < n; ++v) pairs.push_back({u, v});
    }
    for (std::size_t m = 0; m <= max_edges; ++m) {
      if (m > 0 && pairs.empty()) break;
      // Nondecreasing index sequences of length m over `pairs`.
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        std::vector<Edge> edges;
        std::ostringstream label;
        label << "V" << n;
        for (std::size_t k : pick) {
          edges.push_back(pairs[k]);
          label << " " << pairs[k].u << "-" << pairs[k].v;
        }
        out.push_back({label.str(), Multigraph(n, std::move(edges))});
        std::size_t pos = m;
        while (pos > 0 && pick[pos - 1] + 1 == pairs.size()) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t k = pos; k < m; ++k) pick[k] = pick[pos - 1];
      }
    }
  }
  return out;
}

std::vector<NamedGraph> curated_corpus() {
  std::vector<NamedGraph> out = small_multigraphs(3, 4);
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::string k = std::to_string(n);
    out.push_back({"T" + k, path_tree(n)});
    out.push_back({"L" + k, bouquet(n)});
    out.push_back({"D" + k, multiedge(n)});
    out.push_back({"P" + k, cycle_graph(n)});
  }
  out.push_back({"bigon", multiedge(2)});
  out.push_back({"triangle", cycle_graph(3)});
  return out;
}

}  // namespace yamada
