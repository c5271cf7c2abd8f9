#include "yamada/serialize.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace yamada {

Multigraph parse_graph_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("graph JSON: top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer()) {
    throw std::invalid_argument("graph JSON: \"vertices\" must be an integer");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw std::invalid_argument("graph JSON: \"edges\" must be an array");
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw std::invalid_argument("graph JSON: each edge must be a pair of integers");
    }
    edges.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
  }
  return Multigraph::build(doc["vertices"].get<std::int64_t>(), edges);
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_json(buffer.str());
}

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

Json polynomial_to_json(const Laurent& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"x", e.x}, {"y", e.y}, {"c", c.get_str()}});
  return {{"terms", terms}};
}

Laurent polynomial_from_json(const Json& j) {
  Laurent p;
  for (const auto& t : j.at("terms")) {
    p += Laurent::monomial(Integer(t.at("c").get<std::string>()), t.at("x").get<int>(), t.at("y").get<int>());
  }
  return p;
}

Json cohomology_to_json(const CohomologyTable& table) {
  Json groups = Json::array();
  for (std::size_t i = 0; i < table.height_count; ++i) {
    Json summands = Json::array();
    for (const auto& s : table.summands) {
      if (s.height != i) continue;
      Json torsion = Json::array();
      for (const auto& t : s.torsion) torsion.push_back(t.fits_slong_p() ? Json(t.get_si()) : Json(t.get_str()));
      summands.push_back({{"bidegree", {s.bidegree.j, s.bidegree.k}}, {"free_rank", s.free_rank}, {"torsion", torsion}});
    }
    groups.push_back({{"i", i}, {"summands", summands}});
  }
  return {{"variant", std::string(to_string(table.variant))},
          {"groups", groups},
          {"euler", polynomial_to_json(poincare(table).euler)}};
}

Json dump_to_json(const BigradedComplex& cx, std::optional<std::size_t> height) {
  Json blocks = Json::array();
  const auto& layout = cx.layout();
  for (std::size_t i = 0; i + 1 < cx.height_count(); ++i) {
    if (height && *height != i) continue;
    std::set<Bidegree> degrees;
    for (const auto& d : layout.bidegrees(i)) degrees.insert(d);
    for (const auto& d : layout.bidegrees(i + 1)) degrees.insert(d);
    for (const Bidegree& d : degrees) {
      const SparseMatrix block = cx.differential_block(i, d);
      Json entries = Json::array();
      for (const MatrixEntry& e : block.entries()) entries.push_back({e.row, e.col, e.value});
      blocks.push_back({{"i", i},
                        {"bidegree", {d.j, d.k}},
                        {"rows", block.rows()},
                        {"cols", block.cols()},
                        {"entries", entries}});
    }
  }
  return blocks;
}

Json reports_to_json(const std::vector<CheckReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) {
    out.push_back({{"check", r.name}, {"verdict", r.passed ? "pass" : "fail"}, {"witness", r.witness}});
  }
  return out;
}

std::string format_cohomology(const CohomologyTable& table) {
  std::ostringstream os;
  os << "variant: " << to_string(table.variant) << '\n';
  os << std::left << std::setw(4) << "i" << std::setw(12) << "bidegree" << std::setw(6) << "rank" << "torsion\n";
  for (const auto& s : table.summands) {
    std::ostringstream degree;
    degree << '(' << s.bidegree.j << ',' << s.bidegree.k << ')';
    std::string torsion = "-";
    if (!s.torsion.empty()) {
      torsion.clear();
      for (const auto& t : s.torsion) torsion += (torsion.empty() ? "Z/" : " Z/") + t.get_str();
    }
    os << std::left << std::setw(4) << s.height << std::setw(12) << degree.str() << std::setw(6) << s.free_rank
       << torsion << '\n';
  }
  os << "euler: " << to_string(poincare(table).euler, "t", "w") << '\n';
  return os.str();
}

}  // namespace yamada
