#include "yamada/cli.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "yamada/homology.hpp"
#include "yamada/invariants.hpp"
#include "yamada/serialize.hpp"
#include "yamada/verify.hpp"

namespace yamada {

namespace {

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size() || v < 0) throw std::invalid_argument("bad index '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

StateSubset subset_from_indices(const std::vector<std::size_t>& ids, std::size_t width) {
  std::uint64_t bits = 0;
  for (std::size_t e : ids) {
    if (e >= width) throw std::invalid_argument("subgraph edge index " + std::to_string(e) + " out of range");
    bits |= std::uint64_t{1} << e;
  }
  return StateSubset(bits, width);
}

struct Options {
  std::size_t max_edges = kDefaultMaxEdges;
  std::string input;
  bool json = false;
  std::string which;
  long negami_t = 1;
  std::string variant = "yamada";
  std::optional<std::size_t> height;
  bool all = false;
  bool euler = false;
  bool permutation = false;
  bool retraction = false;
  bool deletion_contraction = false;
  bool projection = false;
  std::string perm;
  std::optional<std::string> subgraph;
};

Multigraph load(const Options& o) {
  Multigraph g = read_graph_file(o.input);
  if (g.edge_count() > o.max_edges) {
    throw std::invalid_argument("input has " + std::to_string(g.edge_count()) + " edges; --max-edges is " +
                                std::to_string(o.max_edges));
  }
  return g;
}

int run_poly(const Options& o, std::ostream& out) {
  const Multigraph g = load(o);
  if (o.which == "g") {
    const GPolynomials gp = g_polynomials(g);
    if (o.json) {
      out << Json{{"g_tilde", polynomial_to_json(gp.g_tilde)}, {"g", polynomial_to_json(gp.g)}}.dump() << '\n';
    } else {
      out << "g_tilde: " << to_string(gp.g_tilde) << '\n' << "g: " << to_string(gp.g, "t", "w") << '\n';
    }
    return 0;
  }
  const PolynomialKind kind = parse_polynomial_kind(o.which);
  const Laurent p = kind == PolynomialKind::yamada ? yamada_state_sum(g)
                                                   : eval_del_con(g, specialization(kind, o.negami_t));
  if (o.json) {
    out << polynomial_to_json(p).dump() << '\n';
  } else {
    out << to_string(p) << '\n';
  }
  return 0;
}

int run_cohomology(const Options& o, std::ostream& out) {
  const Multigraph g = load(o);
  BuildOptions build;
  build.max_edges = o.max_edges;
  const CohomologyTable table = cohomology(build_complex(g, parse_variant(o.variant), build));
  if (o.json) {
    out << cohomology_to_json(table).dump() << '\n';
  } else {
    out << format_cohomology(table);
  }
  return 0;
}

int run_check(const Options& o, std::ostream& out) {
  const Multigraph g = load(o);
  const bool none = !(o.euler || o.permutation || o.retraction || o.deletion_contraction || o.projection);
  const bool all = o.all || none;

  std::vector<std::size_t> sigma;
  if (o.perm.empty()) {
    for (std::size_t k = g.edge_count(); k > 0; --k) sigma.push_back(k - 1);
  } else {
    sigma = parse_index_list(o.perm);
  }
  StateSubset gamma;
  if (o.subgraph) {
    gamma = subset_from_indices(parse_index_list(*o.subgraph), g.edge_count());
  } else {
    // Default: every edge but the last.
    const std::size_t n = g.edge_count();
    gamma = StateSubset(n == 0 ? 0 : (std::uint64_t{1} << (n - 1)) - 1, n);
  }

  std::vector<CheckReport> reports;
  if (all || o.deletion_contraction) reports.push_back(check_deletion_contraction(g));
  if (all || o.euler) reports.push_back(check_euler(g, o.max_edges));
  if (all || o.permutation) reports.push_back(check_permutation_invariance(g, sigma, o.max_edges));
  if (all || o.projection) reports.push_back(check_projection(g, gamma, o.max_edges));
  if (all || o.retraction) reports.push_back(check_retraction(g, o.max_edges));

  out << reports_to_json(reports).dump(2) << '\n';
  for (const auto& r : reports) {
    if (!r.passed) return 2;
  }
  return 0;
}

int run_dump(const Options& o, std::ostream& out) {
  const Multigraph g = load(o);
  BuildOptions build;
  build.max_edges = o.max_edges;
  const BigradedComplex cx = build_complex(g, parse_variant(o.variant), build);
  out << dump_to_json(cx, o.height).dump() << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph polynomials and the bigraded cohomology categorifying the Yamada polynomial"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-edges", o.max_edges, "Refuse graphs with more edges")->capture_default_str();

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "Graph JSON file")->required();
    sub->fallthrough();
  };

  CLI::App* poly = app.add_subcommand("poly", "Evaluate a graph polynomial");
  add_input(poly);
  poly->add_option("--which", o.which, "Polynomial to compute")
      ->required()
      ->check(CLI::IsMember({"yamada", "g", "tutte", "chromatic", "flow", "negami"}));
  poly->add_option("--negami-t", o.negami_t, "Value of Negami's t (1 or -1)")->capture_default_str();
  poly->add_flag("--json", o.json, "Emit polynomial JSON");

  CLI::App* coh = app.add_subcommand("cohomology", "Integer cohomology per bidegree");
  add_input(coh);
  coh->add_option("--variant", o.variant, "yamada or tutte")
      ->capture_default_str()
      ->check(CLI::IsMember({"yamada", "tutte"}));
  coh->add_flag("--json", o.json, "Emit cohomology JSON");

  CLI::App* check = app.add_subcommand("check", "Verify the structural theorems on a graph");
  add_input(check);
  check->add_flag("--all", o.all, "Run every check (default when none is selected)");
  check->add_flag("--euler", o.euler, "Euler characteristic identity");
  check->add_flag("--permutation", o.permutation, "Edge-order invariance of cohomology");
  check->add_flag("--retraction", o.retraction, "phi/psi retraction of the Tutte-variant complex");
  check->add_flag("--deletion-contraction", o.deletion_contraction, "Deletion-contraction for h");
  check->add_flag("--projection", o.projection, "Projection onto a subgraph is a chain map");
  check->add_option("--perm", o.perm, "Edge permutation as comma-separated indices (default: reversal)");
  check->add_option("--subgraph", o.subgraph, "Subgraph edge indices (default: all but the last edge)");

  CLI::App* dump = app.add_subcommand("dump", "Differential blocks as JSON");
  add_input(dump);
  dump->add_option("--variant", o.variant, "yamada or tutte")
      ->capture_default_str()
      ->check(CLI::IsMember({"yamada", "tutte"}));
  dump->add_option("--height", o.height, "Only the differential leaving this height");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*poly) return run_poly(o, out);
    if (*coh) return run_cohomology(o, out);
    if (*check) return run_check(o, out);
    if (*dump) return run_dump(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace yamada
