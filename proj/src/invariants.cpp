#include "yamada/invariants.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace yamada {

void InvariantParams::validate() const {
  if (!C.is_unit()) throw std::domain_error("coefficient C must be a unit, got " + to_string(C));
}

PolynomialKind parse_polynomial_kind(std::string_view name) {
  if (name == "tutte") return PolynomialKind::tutte;
  if (name == "chromatic") return PolynomialKind::chromatic;
  if (name == "flow") return PolynomialKind::flow;
  if (name == "negami") return PolynomialKind::negami;
  if (name == "yamada") return PolynomialKind::yamada;
  throw std::invalid_argument("unknown polynomial '" + std::string(name) + "'");
}

std::string_view to_string(PolynomialKind kind) {
  switch (kind) {
    case PolynomialKind::tutte: return "tutte";
    case PolynomialKind::chromatic: return "chromatic";
    case PolynomialKind::flow: return "flow";
    case PolynomialKind::negami: return "negami";
    case PolynomialKind::yamada: return "yamada";
  }
  return "unknown";
}

InvariantParams specialization(PolynomialKind kind, long negami_t) {
  const Laurent x = Laurent::x();
  const Laurent y = Laurent::y();
  switch (kind) {
    case PolynomialKind::tutte:
      return {1, 1, 1, x, y};
    case PolynomialKind::chromatic:
      return {-1, 1, x.inverse(), x * (x - 1), 0};
    case PolynomialKind::flow:
      return {1, -1, 1, 0, x - 1};
    case PolynomialKind::negami: {
      if (negami_t != 1 && negami_t != -1) {
        throw std::domain_error("negami: t = " + std::to_string(negami_t) +
                                " makes C = 1/t a non-unit; only t = 1 or t = -1 is supported");
      }
      const Laurent t(negami_t);
      return {x, y, t.inverse(), t * (x + t * y), t * (x + y)};
    }
    case PolynomialKind::yamada:
      return {1, -x.inverse(), x.inverse(), 0, x * y - 1};
  }
  throw std::invalid_argument("unknown polynomial kind");
}

InvariantParams specialization(std::string_view name, long negami_t) {
  return specialization(parse_polynomial_kind(name), negami_t);
}

namespace {

// Multiplicity of each (|S|, b0, b1) over all states of g.
std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Integer> state_census(const Multigraph& g) {
  const std::size_t n = g.edge_count();
  if (n > kMaxStateWidth) {
    throw std::invalid_argument("state enumeration limited to " + std::to_string(kMaxStateWidth) + " edges");
  }
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Integer> census;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const StateSubset s(bits, n);
    const StateStats st = state_stats(g, s);
    census[{s.size(), st.b0, st.b1}] += 1;
  }
  return census;
}

Laurent eval_recursive(const Multigraph& g, const InvariantParams& p, const Laurent& c_inverse) {
  if (g.edge_count() == 0) return pow(c_inverse, static_cast<int>(g.vertex_count()));
  const EdgeIndex e = g.edge_count() - 1;
  switch (classify_edge(g, e)) {
    case EdgeKind::loop:
      return p.C * p.E * eval_recursive(delete_edge(g, e), p, c_inverse);
    case EdgeKind::isthmus:
      return p.C * p.D * eval_recursive(contract_edge(g, e), p, c_inverse);
    case EdgeKind::ordinary:
      return p.A * eval_recursive(contract_edge(g, e), p, c_inverse) +
             p.B * eval_recursive(delete_edge(g, e), p, c_inverse);
  }
  return {};
}

}  // namespace

Laurent yamada_state_sum(const Multigraph& g) {
  const int n = static_cast<int>(g.edge_count());
  Laurent h;
  for (const auto& [key, multiplicity] : state_census(g)) {
    const auto [size, b0, b1] = key;
    // (-x)^(|S|-|E|) x^b0 y^b1
    const int shift = static_cast<int>(size) - n;
    const Integer sign = (shift % 2 == 0) ? 1 : -1;
    h += Laurent::monomial(sign * multiplicity, shift + static_cast<int>(b0), static_cast<int>(b1));
  }
  return h;
}

GPolynomials g_polynomials(const Multigraph& g) {
  GPolynomials out;
  out.g_tilde = pow(-Laurent::x(), static_cast<int>(g.edge_count())) * yamada_state_sum(g);
  if (out.g_tilde.has_negative_exponents()) {
    throw std::logic_error("g_tilde has a negative exponent: " + to_string(out.g_tilde));
  }
  out.g = substitute_shift(out.g_tilde);
  return out;
}

Laurent eval_del_con(const Multigraph& g, const InvariantParams& params) {
  params.validate();
  return eval_recursive(g, params, params.C.inverse());
}

Laurent closed_form(GraphFamily family, int n, const InvariantParams& p) {
  if (n < 1) throw std::invalid_argument("closed_form: n must be positive");
  p.validate();
  switch (family) {
    case GraphFamily::tree:
      return pow(p.C, n - 1) * pow(p.D, n);
    case GraphFamily::bouquet:
      return pow(p.C, n - 1) * pow(p.E, n);
    case GraphFamily::multiedge:
      return pow(p.B, n - 1) * p.D + p.A * p.E * geometric_sum(p.B, p.C * p.E, n);
    case GraphFamily::cycle:
      return pow(p.A, n - 1) * p.E + p.B * p.D * geometric_sum(p.A, p.C * p.D, n);
  }
  throw std::invalid_argument("unknown graph family");
}

Integer chromatic_count(const Multigraph& g, unsigned lambda) {
  if (lambda > 8 || g.vertex_count() > 8) {
    throw std::invalid_argument("chromatic_count: brute force limited to lambda <= 8 and |V| <= 8");
  }
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return 0;
  }
  const std::size_t n = g.vertex_count();
  if (lambda == 0) return n == 0 ? 1 : 0;
  std::vector<unsigned> colour(n, 0);
  Integer count = 0;
  while (true) {
    bool proper = true;
    for (const Edge& e : g.edges()) {
      if (colour[e.u] == colour[e.v]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    std::size_t i = 0;
    while (i < n && ++colour[i] == lambda) colour[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace yamada
