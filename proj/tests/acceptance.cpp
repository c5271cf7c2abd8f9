// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "yamada/cube.hpp"
#include "yamada/families.hpp"
#include "yamada/homology.hpp"
#include "yamada/invariants.hpp"
#include "yamada/smith.hpp"
#include "yamada/verify.hpp"

using namespace yamada;

namespace {

// Empty string on success, otherwise the first failure.
using Criterion = std::function<std::string()>;

std::string summand_text(const CohomologySummand& s) {
  std::ostringstream os;
  os << "H^" << s.height << "(" << s.bidegree.j << "," << s.bidegree.k << ") rank " << s.free_rank
     << (s.torsion.empty() ? "" : " +torsion");
  return os.str();
}

std::string compare_table(const CohomologyTable& got, const std::vector<CohomologySummand>& want) {
  if (got.summands == want) return {};
  std::string msg = "got";
  for (const auto& s : got.summands) msg += " [" + summand_text(s) + "]";
  return msg;
}

CohomologySummand z(std::size_t i, int j, int k, std::size_t rank = 1) { return {i, {j, k}, rank, {}}; }

std::string golden_yamada() {
  const CohomologyTable t = cohomology(build_complex(multiedge(2), Variant::yamada));
  if (t.height_count != 3) return "expected three heights";
  return compare_table(t, {z(0, 1, 0), z(0, 2, 0), z(2, 0, 1), z(2, 1, 1, 3), z(2, 2, 0), z(2, 2, 1, 3), z(2, 3, 0),
                           z(2, 3, 1)});
}

std::string golden_tutte() {
  const CohomologyTable t = cohomology(build_complex(multiedge(2), Variant::tutte));
  return compare_table(t, {z(0, 1, 0), z(0, 2, 0), z(2, 0, 1), z(2, 1, 1)});
}

std::string euler_identity(const std::vector<NamedGraph>& corpus) {
  const Laurent t = Laurent::x();
  const Laurent w = Laurent::y();
  const Laurent p2 = t + 2 * pow(t, 2) + pow(t, 3) + w + 3 * t * w + 3 * pow(t, 2) * w + pow(t, 3) * w;
  if (p2 != -pow(1 + t, 2) + pow(1 + t, 3) * (1 + w)) return "closed form of the bigon value disagrees";
  const BigradedComplex bigon = build_complex(multiedge(2), Variant::yamada);
  if (graded_euler(bigon) != p2 || poincare(cohomology(bigon)).euler != p2 || g_polynomials(multiedge(2)).g != p2) {
    return "bigon value differs from t+2t^2+t^3+w+3tw+3t^2w+t^3w";
  }
  for (const auto& ng : corpus) {
    const BigradedComplex cx = build_complex(ng.graph, Variant::yamada);
    const Laurent chains = graded_euler(cx);
    const Laurent homology = poincare(cohomology(cx)).euler;
    const Laurent g = g_polynomials(ng.graph).g;
    const Laurent reference = oracle::euler_of_chains(ng.graph, true);
    if (chains != g || homology != g || g != reference) return ng.name + ": " + to_string(chains, "t", "w");
  }
  return {};
}

std::string complexes_well_formed(const std::vector<NamedGraph>& corpus) {
  BuildOptions options;
  options.verify = false;
  for (const auto& ng : corpus) {
    for (Variant v : {Variant::yamada, Variant::tutte}) {
      if (auto defect = find_complex_defect(build_complex(ng.graph, v, options))) {
        return ng.name + " (" + std::string(to_string(v)) + "): " + defect->description;
      }
    }
  }
  return {};
}

std::string edge_order(const std::vector<NamedGraph>& corpus) {
  std::vector<const NamedGraph*> candidates;
  for (const auto& ng : corpus) {
    if (ng.graph.edge_count() >= 2) candidates.push_back(&ng);
  }
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const NamedGraph& ng = *candidates[pick(rng)];
    const auto sigma = oracle::random_permutation(rng, ng.graph.edge_count());
    const CheckReport r = check_permutation_invariance(ng.graph, sigma);
    if (!r.passed) return ng.name + ": " + r.witness;
  }
  return {};
}

std::string retraction(const std::vector<NamedGraph>& corpus) {
  for (const auto& ng : corpus) {
    const CheckReport r = check_retraction(ng.graph);
    if (!r.passed) return ng.name + ": " + r.witness;
  }
  return {};
}

Multigraph family_graph(GraphFamily f, int n) {
  switch (f) {
    case GraphFamily::tree: return path_tree(n);
    case GraphFamily::bouquet: return bouquet(n);
    case GraphFamily::multiedge: return multiedge(n);
    case GraphFamily::cycle: return cycle_graph(n);
  }
  return {};
}

std::string polynomials(const std::vector<NamedGraph>& corpus) {
  const InvariantParams yr = specialization(PolynomialKind::yamada);
  for (const auto& ng : corpus) {
    const Laurent h = yamada_state_sum(ng.graph);
    if (h != eval_del_con(ng.graph, yr)) return ng.name + ": state sum and recursion differ";
    if (h != oracle::yamada_h(ng.graph)) return ng.name + ": state sum differs from reference enumeration";
  }
  for (GraphFamily f : {GraphFamily::tree, GraphFamily::bouquet, GraphFamily::multiedge, GraphFamily::cycle}) {
    for (int n = 1; n <= 5; ++n) {
      const Multigraph g = family_graph(f, n);
      const Laurent closed = closed_form(f, n, yr);
      if (closed != yamada_state_sum(g) || closed != eval_del_con(g, yr)) {
        return "closed form mismatch for family " + std::to_string(static_cast<int>(f)) + ", n = " + std::to_string(n);
      }
    }
  }
  const Laurent xy1 = Laurent::x() * Laurent::y() - 1;
  if (yamada_state_sum(multiedge(2)) != xy1) return "h(P2) != xy - 1";
  if (yamada_state_sum(Multigraph(3, {{0, 1}, {1, 2}, {0, 2}})) != xy1) return "h(triangle) != xy - 1";
  if (yamada_state_sum(bouquet(1)) != xy1) return "h(L1) != xy - 1";
  if (!yamada_state_sum(path_tree(1)).is_zero()) return "h(T1) != 0";
  return {};
}

std::string chromatic(const std::vector<NamedGraph>& corpus) {
  const InvariantParams cr = specialization(PolynomialKind::chromatic);
  for (const auto& ng : corpus) {
    if (ng.graph.vertex_count() > 6) continue;
    const Laurent p = eval_del_con(ng.graph, cr);
    for (unsigned k = 0; k <= 5; ++k) {
      if (evaluate(p, Rational(k), 0) != Rational(oracle::proper_colourings(ng.graph, k))) {
        return ng.name + " at lambda = " + std::to_string(k);
      }
    }
  }
  return {};
}

std::string smith() {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  std::uniform_int_distribution<long> entry(-20, 20);
  for (int i = 0; i < 100; ++i) {
    IntMatrix a(dim(rng), dim(rng));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = entry(rng);
    }
    const SNFResult s = smith_normal_form(a);
    const std::string where = "matrix " + std::to_string(i);
    if (!(s.U * a * s.V == s.D)) return where + ": U A V != D";
    if (abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1) return where + ": transform not unimodular";
    for (std::size_t r = 0; r < s.D.rows(); ++r) {
      for (std::size_t c = 0; c < s.D.cols(); ++c) {
        if (r != c && s.D(r, c) != 0) return where + ": D not diagonal";
      }
    }
    for (std::size_t k = 0; k < s.invariant_factors.size(); ++k) {
      if (s.invariant_factors[k] <= 0 || s.D(k, k) != s.invariant_factors[k]) return where + ": bad diagonal";
      if (k > 0 && s.invariant_factors[k] % s.invariant_factors[k - 1] != 0) return where + ": divisibility";
    }
    for (std::size_t k = s.invariant_factors.size(); k < std::min(s.D.rows(), s.D.cols()); ++k) {
      if (s.D(k, k) != 0) return where + ": nonzero past the rank";
    }
  }
  return {};
}

std::string deletion_contraction(const std::vector<NamedGraph>& corpus) {
  const Laurent x_inv = Laurent::x().inverse();
  for (const auto& ng : corpus) {
    const CheckReport r = check_deletion_contraction(ng.graph);
    if (!r.passed) return ng.name + ": " + r.witness;
    const Laurent h = oracle::yamada_h(ng.graph);
    for (EdgeIndex e = 0; e < ng.graph.edge_count(); ++e) {
      if (classify_edge(ng.graph, e) != EdgeKind::ordinary) continue;
      const Laurent rhs =
          oracle::yamada_h(contract_edge(ng.graph, e)) - x_inv * oracle::yamada_h(delete_edge(ng.graph, e));
      if (h != rhs) return ng.name + ", edge " + std::to_string(e) + ": reference enumeration disagrees";
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<NamedGraph> corpus = curated_corpus();
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"golden bigon cohomology, yamada variant", golden_yamada},
      {"golden bigon cohomology, tutte variant", golden_tutte},
      {"Euler characteristic equals g on the corpus", [&] { return euler_identity(corpus); }},
      {"d^2 = 0 and bidegree preservation on the corpus", [&] { return complexes_well_formed(corpus); }},
      {"edge-order invariance on 20 random pairs", [&] { return edge_order(corpus); }},
      {"retraction psi phi = id and H_T <= H_Y on the corpus", [&] { return retraction(corpus); }},
      {"polynomial cross-validation", [&] { return polynomials(corpus); }},
      {"chromatic polynomial vs brute-force colourings", [&] { return chromatic(corpus); }},
      {"Smith normal form self-check on 100 random matrices", smith},
      {"deletion-contraction for h at every ordinary edge", [&] { return deletion_contraction(corpus); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      error = criteria[i].second();
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (error.empty() ? "PASS" : "FAIL") << "  [" << (i + 1) << "] " << criteria[i].first << " (" << ms
              << " ms)";
    if (!error.empty()) {
      std::cout << ": " << error;
      ++failures;
    }
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
