#include "yamada/cube.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <sstream>
#include <stdexcept>

namespace yamada {

Variant parse_variant(std::string_view name) {
  if (name == "yamada") return Variant::yamada;
  if (name == "tutte") return Variant::tutte;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "' (expected yamada or tutte)");
}

std::string_view to_string(Variant v) { return v == Variant::yamada ? "yamada" : "tutte"; }

namespace {

constexpr std::size_t kMaxSummandDimension = std::size_t{1} << 32;

std::size_t checked_power(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (r > kMaxSummandDimension / base) throw std::length_error("chain module dimension too large");
    r *= base;
  }
  return r;
}

StateSummand make_summand(const Multigraph& g, const StateSubset& s, Variant variant,
                          const CubeAlgebras& algebras) {
  StateSummand out;
  out.state = s;
  out.stats = state_stats(g, s);
  out.edge_slots = variant == Variant::yamada ? s.size() : 0;
  out.dimension = checked_power(algebras.m.rank(), out.edge_slots + out.stats.b0);
  const std::size_t cycles = checked_power(algebras.n.rank(), out.stats.b1);
  if (out.dimension > kMaxSummandDimension / cycles) throw std::length_error("chain module dimension too large");
  out.dimension *= cycles;
  return out;
}

BasisVector decode_local(const StateSummand& summand, const CubeAlgebras& algebras, std::size_t local) {
  BasisVector v;
  v.state = summand.state;
  const auto rm = algebras.m.rank();
  const auto rn = algebras.n.rank();
  v.edge_labels.resize(summand.edge_slots);
  v.comp_labels.resize(summand.stats.b0);
  v.cycle_labels.resize(summand.stats.b1);
  for (auto& label : v.edge_labels) {
    label = static_cast<std::uint32_t>(local % rm);
    local /= rm;
  }
  for (auto& label : v.comp_labels) {
    label = static_cast<std::uint32_t>(local % rm);
    local /= rm;
  }
  for (auto& label : v.cycle_labels) {
    label = static_cast<std::uint32_t>(local % rn);
    local /= rn;
  }
  return v;
}

std::size_t encode_local(const StateSummand& summand, const CubeAlgebras& algebras, const BasisVector& v) {
  if (v.edge_labels.size() != summand.edge_slots || v.comp_labels.size() != summand.stats.b0 ||
      v.cycle_labels.size() != summand.stats.b1) {
    throw std::invalid_argument("basis vector does not fit the summand layout");
  }
  const auto rm = algebras.m.rank();
  const auto rn = algebras.n.rank();
  std::size_t index = 0;
  for (auto it = v.cycle_labels.rbegin(); it != v.cycle_labels.rend(); ++it) index = index * rn + *it;
  for (auto it = v.comp_labels.rbegin(); it != v.comp_labels.rend(); ++it) index = index * rm + *it;
  for (auto it = v.edge_labels.rbegin(); it != v.edge_labels.rend(); ++it) index = index * rm + *it;
  return index;
}

Bidegree labels_degree(const BasisVector& v, const CubeAlgebras& algebras) {
  Bidegree d;
  for (auto l : v.edge_labels) d = d + algebras.m.degrees[l];
  for (auto l : v.comp_labels) d = d + algebras.m.degrees[l];
  for (auto l : v.cycle_labels) d = d + algebras.n.degrees[l];
  return d;
}

// d_xi from C^S (src) to C^(S + e) (dst), in local coordinates.
SparseMatrix edge_map(const Multigraph& g, const StateSummand& src, const StateSummand& dst, EdgeIndex e,
                      Variant variant, const CubeAlgebras& algebras) {
  SparseMatrix out(dst.dimension, src.dimension);
  const Edge& edge = g.edge(e);
  const std::size_t a = src.stats.component_of[edge.u];
  const std::size_t b = src.stats.component_of[edge.v];
  const bool same_component = a == b;
  const std::size_t lo = std::min(a, b);
  const std::size_t hi = std::max(a, b);
  const std::size_t insert_at = src.state.count_below(e);
  const auto unit_m = static_cast<std::uint32_t>(algebras.m.unit_index);
  const auto unit_n = static_cast<std::uint32_t>(algebras.n.unit_index);

  // Where each old component lands in the canonical order of S + e.
  std::vector<std::size_t> target_slot(src.stats.b0);
  for (std::size_t c = 0; c < src.stats.b0; ++c) {
    target_slot[c] = dst.stats.component_of[src.stats.components[c].front()];
  }

  for (std::size_t local = 0; local < src.dimension; ++local) {
    const BasisVector x = decode_local(src, algebras, local);
    BasisVector y;
    y.state = dst.state;
    y.edge_labels = x.edge_labels;
    if (variant == Variant::yamada) {
      y.edge_labels.insert(y.edge_labels.begin() + static_cast<std::ptrdiff_t>(insert_at), unit_m);
    }
    y.comp_labels.assign(dst.stats.b0, 0);
    if (same_component) {
      for (std::size_t c = 0; c < src.stats.b0; ++c) y.comp_labels[target_slot[c]] = x.comp_labels[c];
      y.cycle_labels = x.cycle_labels;
      y.cycle_labels.push_back(unit_n);
      out.add(encode_local(dst, algebras, y), local, 1);
      continue;
    }
    y.cycle_labels = x.cycle_labels;
    for (std::size_t c = 0; c < src.stats.b0; ++c) {
      if (c != lo && c != hi) y.comp_labels[target_slot[c]] = x.comp_labels[c];
    }
    const auto& product = algebras.m.product[x.comp_labels[lo]][x.comp_labels[hi]];
    for (std::size_t z = 0; z < product.size(); ++z) {
      if (product[z] == 0) continue;
      y.comp_labels[target_slot[lo]] = static_cast<std::uint32_t>(z);
      out.add(encode_local(dst, algebras, y), local, product[z]);
    }
  }
  return out;
}

}  // namespace

CubeLayout::CubeLayout(const Multigraph& g, Variant variant, CubeAlgebras algebras, std::size_t max_edges)
    : graph_(g), variant_(variant), algebras_(std::move(algebras)) {
  const std::size_t n = g.edge_count();
  if (n > max_edges || n > kMaxStateWidth) {
    throw std::invalid_argument("graph has " + std::to_string(n) + " edges; the cube is limited to " +
                                std::to_string(std::min(max_edges, kMaxStateWidth)));
  }
  algebras_.m.validate();
  algebras_.n.validate();

  heights_.resize(n + 1);
  const std::uint64_t state_count = std::uint64_t{1} << n;
  state_index_.resize(state_count);
  for (std::uint64_t bits = 0; bits < state_count; ++bits) {
    const StateSubset s(bits, n);
    Height& h = heights_[s.size()];
    state_index_[bits] = {s.size(), h.summands.size()};
    h.summands.push_back(make_summand(g, s, variant_, algebras_));
  }
  for (Height& h : heights_) {
    for (StateSummand& summand : h.summands) {
      summand.offset = h.dimension;
      h.dimension += summand.dimension;
      for (std::size_t local = 0; local < summand.dimension; ++local) {
        h.degrees.push_back(labels_degree(decode_local(summand, algebras_, local), algebras_));
      }
    }
    for (std::size_t i = 0; i < h.degrees.size(); ++i) h.classes[h.degrees[i]].push_back(i);
  }
}

std::size_t CubeLayout::dimension(std::size_t height) const {
  return height < heights_.size() ? heights_[height].dimension : 0;
}

const std::vector<StateSummand>& CubeLayout::summands(std::size_t height) const {
  return heights_.at(height).summands;
}

const StateSummand& CubeLayout::summand(const StateSubset& s) const {
  if (s.width() != graph_.edge_count()) throw std::invalid_argument("state width mismatch");
  const auto [h, idx] = state_index_.at(s.bits());
  return heights_[h].summands[idx];
}

BasisVector CubeLayout::decode(const StateSummand& summand, std::size_t local) const {
  if (local >= summand.dimension) throw std::out_of_range("local basis index out of range");
  return decode_local(summand, algebras_, local);
}

std::size_t CubeLayout::encode(const StateSummand& summand, const BasisVector& v) const {
  return encode_local(summand, algebras_, v);
}

Bidegree CubeLayout::bidegree(const BasisVector& v) const { return labels_degree(v, algebras_); }

std::vector<Bidegree> CubeLayout::bidegrees(std::size_t height) const {
  std::vector<Bidegree> out;
  if (height >= heights_.size()) return out;
  for (const auto& [d, ids] : heights_[height].classes) out.push_back(d);
  return out;
}

const std::vector<std::size_t>& CubeLayout::basis_at(std::size_t height, Bidegree d) const {
  static const std::vector<std::size_t> kEmpty;
  if (height >= heights_.size()) return kEmpty;
  auto it = heights_[height].classes.find(d);
  return it == heights_[height].classes.end() ? kEmpty : it->second;
}

Laurent CubeLayout::qdim(std::size_t height) const {
  Laurent q;
  if (height >= heights_.size()) return q;
  for (const auto& [d, ids] : heights_[height].classes) {
    q += Laurent::monomial(static_cast<long>(ids.size()), d.j, d.k);
  }
  return q;
}

std::vector<BasisVector> chain_module(const Multigraph& g, const StateSubset& s, Variant variant,
                                      const CubeAlgebras& algebras) {
  const StateSummand summand = make_summand(g, s, variant, algebras);
  std::vector<BasisVector> out;
  out.reserve(summand.dimension);
  for (std::size_t local = 0; local < summand.dimension; ++local) {
    out.push_back(decode_local(summand, algebras, local));
  }
  return out;
}

SparseMatrix per_edge_map(const CubeLayout& layout, const StateSubset& s, EdgeIndex e) {
  if (s.contains(e)) throw std::invalid_argument("per_edge_map: edge already in the state");
  return edge_map(layout.graph(), layout.summand(s), layout.summand(s.with(e)), e, layout.variant(),
                  layout.algebras());
}

SparseMatrix per_edge_map(const Multigraph& g, const StateSubset& s, EdgeIndex e, Variant variant,
                          const CubeAlgebras& algebras) {
  if (s.contains(e)) throw std::invalid_argument("per_edge_map: edge already in the state");
  if (e >= g.edge_count()) throw std::out_of_range("per_edge_map: edge index out of range");
  algebras.m.validate();
  algebras.n.validate();
  return edge_map(g, make_summand(g, s, variant, algebras), make_summand(g, s.with(e), variant, algebras), e,
                  variant, algebras);
}

int edge_sign(std::span<const CubeCoordinate> xi) {
  std::size_t stars = 0;
  std::size_t ones_before = 0;
  for (CubeCoordinate c : xi) {
    if (c == CubeCoordinate::star) {
      ++stars;
    } else if (c == CubeCoordinate::one && stars == 0) {
      ++ones_before;
    }
  }
  if (stars != 1) throw std::invalid_argument("cube edge label needs exactly one '*'");
  return ones_before % 2 == 0 ? 1 : -1;
}

int edge_sign(std::string_view xi) {
  std::vector<CubeCoordinate> coords;
  for (char c : xi) {
    switch (c) {
      case '0': coords.push_back(CubeCoordinate::zero); break;
      case '1': coords.push_back(CubeCoordinate::one); break;
      case '*': coords.push_back(CubeCoordinate::star); break;
      case '(': case ')': case ',': case ' ': break;
      default: throw std::invalid_argument(std::string("invalid cube edge label character '") + c + "'");
    }
  }
  return edge_sign(coords);
}

BigradedComplex::BigradedComplex(CubeLayout layout, std::vector<SparseMatrix> differentials)
    : layout_(std::move(layout)), differentials_(std::move(differentials)) {
  if (differentials_.size() + 1 != layout_.height_count()) {
    throw std::invalid_argument("complex needs one differential per pair of adjacent heights");
  }
  for (std::size_t i = 0; i < differentials_.size(); ++i) {
    if (differentials_[i].rows() != layout_.dimension(i + 1) || differentials_[i].cols() != layout_.dimension(i)) {
      throw std::invalid_argument("differential " + std::to_string(i) + " has the wrong shape");
    }
  }
}

SparseMatrix BigradedComplex::differential(std::size_t i) const {
  if (i < differentials_.size()) return differentials_[i];
  return SparseMatrix(layout_.dimension(i + 1), layout_.dimension(i));
}

SparseMatrix BigradedComplex::differential_block(std::size_t i, Bidegree d) const {
  const auto& rows = layout_.basis_at(i + 1, d);
  const auto& cols = layout_.basis_at(i, d);
  if (i >= differentials_.size()) return SparseMatrix(rows.size(), cols.size());
  return differentials_[i].submatrix(rows, cols);
}

BigradedComplex build_complex(const Multigraph& g, Variant variant, const BuildOptions& options) {
  CubeLayout layout(g, variant, options.algebras, options.max_edges);
  const std::size_t n = g.edge_count();
  std::vector<SparseMatrix> differentials;
  differentials.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseMatrix d(layout.dimension(i + 1), layout.dimension(i));
    for (const StateSummand& src : layout.summands(i)) {
      for (EdgeIndex e = 0; e < n; ++e) {
        if (src.state.contains(e)) continue;
        const StateSummand& dst = layout.summand(src.state.with(e));
        const int sign = src.state.count_below(e) % 2 == 0 ? 1 : -1;
        const SparseMatrix local = edge_map(g, src, dst, e, variant, layout.algebras());
        for (std::size_t c = 0; c < local.cols(); ++c) {
          for (const auto& [r, v] : local.column(c)) d.add(dst.offset + r, src.offset + c, sign * v);
        }
      }
    }
    differentials.push_back(std::move(d));
  }
  BigradedComplex cx(std::move(layout), std::move(differentials));
  if (options.verify) {
    if (auto defect = find_complex_defect(cx)) throw std::logic_error(defect->description);
  }
  return cx;
}

std::optional<ComplexDefect> find_complex_defect(const BigradedComplex& cx) {
  const auto& layout = cx.layout();
  for (std::size_t i = 0; i < cx.differentials().size(); ++i) {
    for (const MatrixEntry& en : cx.differentials()[i].entries()) {
      const Bidegree from = layout.degree(i, en.col);
      const Bidegree to = layout.degree(i + 1, en.row);
      if (from != to) {
        std::ostringstream os;
        os << "d^" << i << " entry (" << en.row << "," << en.col << ") maps bidegree (" << from.j << ","
           << from.k << ") to (" << to.j << "," << to.k << ")";
        return ComplexDefect{os.str()};
      }
    }
  }
  for (std::size_t i = 0; i + 1 < cx.differentials().size(); ++i) {
    const SparseMatrix dd = cx.differentials()[i + 1] * cx.differentials()[i];
    if (!dd.is_zero()) {
      const MatrixEntry en = dd.entries().front();
      std::ostringstream os;
      os << "d^" << (i + 1) << " d^" << i << " is nonzero: entry (" << en.row << "," << en.col
         << ") = " << en.value;
      return ComplexDefect{os.str()};
    }
  }
  return std::nullopt;
}

Laurent graded_euler(const BigradedComplex& cx) {
  Laurent chi;
  for (std::size_t i = 0; i < cx.height_count(); ++i) {
    const Laurent q = cx.layout().qdim(i);
    if (i % 2 == 0) {
      chi += q;
    } else {
      chi -= q;
    }
  }
  return chi;
}

namespace {

SparseMatrix map_or_zero(const ChainMap& f, std::size_t i, std::size_t rows, std::size_t cols) {
  if (i < f.size()) return f[i];
  return SparseMatrix(rows, cols);
}

}  // namespace

std::optional<ChainMapDefect> chain_map_defect(const BigradedComplex& src, const BigradedComplex& dst,
                                               const ChainMap& f) {
  const auto& ls = src.layout();
  const auto& ld = dst.layout();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].rows() != ld.dimension(i) || f[i].cols() != ls.dimension(i)) {
      return ChainMapDefect{i, {}, "map at height " + std::to_string(i) + " has the wrong shape"};
    }
    for (const MatrixEntry& en : f[i].entries()) {
      if (ls.degree(i, en.col) != ld.degree(i, en.row)) {
        return ChainMapDefect{i, en, "map at height " + std::to_string(i) + " does not preserve bidegree"};
      }
    }
  }
  const std::size_t top = std::max(src.height_count(), dst.height_count());
  for (std::size_t i = 0; i < top; ++i) {
    const SparseMatrix next = map_or_zero(f, i + 1, ld.dimension(i + 1), ls.dimension(i + 1));
    const SparseMatrix here = map_or_zero(f, i, ld.dimension(i), ls.dimension(i));
    const SparseMatrix lhs = next * src.differential(i);
    const SparseMatrix rhs = dst.differential(i) * here;
    if (auto diff = first_difference(lhs, rhs)) {
      std::ostringstream os;
      os << "f d != d f at height " << i << ": entry (" << diff->row << "," << diff->col << ") differs by "
         << diff->value;
      return ChainMapDefect{i, *diff, os.str()};
    }
  }
  return std::nullopt;
}

ProjectionMap projection_map(const CubeLayout& source, const StateSubset& gamma) {
  const Multigraph& g = source.graph();
  if (gamma.width() != g.edge_count()) throw std::invalid_argument("projection: edge subset width mismatch");
  ProjectionMap out;
  out.gamma = gamma;
  out.subgraph = edge_subgraph(g, gamma);
  const CubeLayout target(out.subgraph, source.variant(), source.algebras(), out.subgraph.edge_count());

  // Position of each edge of Gamma in the subgraph's edge order.
  std::vector<std::size_t> position(g.edge_count(), 0);
  std::size_t next = 0;
  for (EdgeIndex e : gamma.members()) position[e] = next++;

  for (std::size_t i = 0; i < source.height_count(); ++i) {
    SparseMatrix p(target.dimension(i), source.dimension(i));
    for (const StateSummand& summand : source.summands(i)) {
      if ((summand.state.bits() & ~gamma.bits()) != 0) continue;
      std::uint64_t bits = 0;
      for (EdgeIndex e : summand.state.members()) bits |= std::uint64_t{1} << position[e];
      const StateSummand& image = target.summand(StateSubset(bits, out.subgraph.edge_count()));
      if (image.dimension != summand.dimension) throw std::logic_error("projection: summand dimensions differ");
      for (std::size_t local = 0; local < summand.dimension; ++local) {
        p.add(image.offset + local, summand.offset + local, 1);
      }
    }
    out.maps.push_back(std::move(p));
  }
  return out;
}

ProjectionMap projection_map(const Multigraph& g, const StateSubset& gamma, Variant variant,
                             const CubeAlgebras& algebras) {
  return projection_map(CubeLayout(g, variant, algebras, g.edge_count()), gamma);
}

PhiPsi phi_psi(const CubeLayout& tutte, const CubeLayout& yamada) {
  if (tutte.variant() != Variant::tutte || yamada.variant() != Variant::yamada) {
    throw std::invalid_argument("phi_psi: expected a tutte layout and a yamada layout");
  }
  if (!(tutte.graph() == yamada.graph())) throw std::invalid_argument("phi_psi: layouts of different graphs");
  const CubeAlgebras& alg = yamada.algebras();
  if (alg.m.labels != tutte.algebras().m.labels || alg.m.unit_index != tutte.algebras().m.unit_index ||
      alg.n.labels != tutte.algebras().n.labels) {
    throw std::invalid_argument("phi_psi: layouts use different algebras");
  }
  if (!alg.m.counit) throw std::invalid_argument("phi_psi: the edge algebra has no counit eta");
  const auto& eta = *alg.m.counit;
  const auto unit = static_cast<std::uint32_t>(alg.m.unit_index);

  PhiPsi out;
  for (std::size_t i = 0; i < yamada.height_count(); ++i) {
    SparseMatrix phi(yamada.dimension(i), tutte.dimension(i));
    SparseMatrix psi(tutte.dimension(i), yamada.dimension(i));
    const auto& ts = tutte.summands(i);
    const auto& ys = yamada.summands(i);
    for (std::size_t s = 0; s < ts.size(); ++s) {
      const StateSummand& t = ts[s];
      const StateSummand& y = ys[s];
      for (std::size_t local = 0; local < t.dimension; ++local) {
        BasisVector v = tutte.decode(t, local);
        v.edge_labels.assign(y.edge_slots, unit);
        phi.add(y.offset + yamada.encode(y, v), t.offset + local, 1);
      }
      for (std::size_t local = 0; local < y.dimension; ++local) {
        BasisVector v = yamada.decode(y, local);
        std::int64_t coefficient = 1;
        for (auto label : v.edge_labels) coefficient *= eta[label];
        if (coefficient == 0) continue;
        v.edge_labels.clear();
        psi.add(t.offset + tutte.encode(t, v), y.offset + local, coefficient);
      }
    }
    out.phi.push_back(std::move(phi));
    out.psi.push_back(std::move(psi));
  }
  return out;
}

}  // namespace yamada
