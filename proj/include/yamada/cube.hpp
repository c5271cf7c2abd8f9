#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "yamada/algebra.hpp"
#include "yamada/laurent.hpp"
#include "yamada/multigraph.hpp"
#include "yamada/sparse_matrix.hpp"

namespace yamada {

/// yamada: C^S = M^|S| (x) M^b0 (x) N^b1.
/// tutte:  C^S = M^b0 (x) N^b1, i.e. the edge factors are dropped.
enum class Variant { yamada, tutte };

Variant parse_variant(std::string_view name);
std::string_view to_string(Variant v);

/// The module M used for edge and component factors and N used for cycle
/// factors. Defaults are A = Z[t]/(t^2) and B = Z[w]/(w^2).
struct CubeAlgebras {
  AlgebraSpec m = AlgebraSpec::dual_numbers_t();
  AlgebraSpec n = AlgebraSpec::dual_numbers_w();
};

inline constexpr std::size_t kDefaultMaxEdges = 12;

/// A pure tensor of basis elements in C^S. Labels index the basis of M (edge
/// and component slots) or N (cycle slots). Edge slots follow ascending edge
/// index, component slots the canonical component order, and cycle slots are
/// appended one per added cycle.
struct BasisVector {
  StateSubset state;
  std::vector<std::uint32_t> edge_labels;
  std::vector<std::uint32_t> comp_labels;
  std::vector<std::uint32_t> cycle_labels;

  bool operator==(const BasisVector&) const = default;
};

/// The summand C^S inside C^|S|.
struct StateSummand {
  StateSubset state;
  StateStats stats;
  /// Position of the summand's first basis vector in the height's basis.
  std::size_t offset = 0;
  std::size_t dimension = 0;
  std::size_t edge_slots = 0;
};

/// Basis bookkeeping of the cube of states: states at each height in
/// ascending bitmask order, each expanded into its tensor basis (local index
/// is mixed-radix, first slot least significant), plus bidegree classes.
class CubeLayout {
 public:
  CubeLayout(const Multigraph& g, Variant variant, CubeAlgebras algebras = {},
             std::size_t max_edges = kDefaultMaxEdges);

  const Multigraph& graph() const { return graph_; }
  Variant variant() const { return variant_; }
  const CubeAlgebras& algebras() const { return algebras_; }

  /// Heights run over 0..|E|.
  std::size_t height_count() const { return heights_.size(); }
  /// Zero for heights outside 0..|E|.
  std::size_t dimension(std::size_t height) const;
  const std::vector<StateSummand>& summands(std::size_t height) const;
  const StateSummand& summand(const StateSubset& s) const;

  BasisVector decode(const StateSummand& summand, std::size_t local) const;
  std::size_t encode(const StateSummand& summand, const BasisVector& v) const;
  Bidegree bidegree(const BasisVector& v) const;

  Bidegree degree(std::size_t height, std::size_t index) const { return heights_.at(height).degrees.at(index); }
  /// Bidegrees occurring at this height, ascending.
  std::vector<Bidegree> bidegrees(std::size_t height) const;
  /// Basis indices of bidegree d at this height, ascending (empty if none).
  const std::vector<std::size_t>& basis_at(std::size_t height, Bidegree d) const;

  /// Graded dimension of C^height.
  Laurent qdim(std::size_t height) const;

 private:
  struct Height {
    std::vector<StateSummand> summands;
    std::size_t dimension = 0;
    std::vector<Bidegree> degrees;
    std::map<Bidegree, std::vector<std::size_t>> classes;
  };

  Multigraph graph_;
  Variant variant_;
  CubeAlgebras algebras_;
  std::vector<Height> heights_;
  /// (height, summand index) per state bitmask.
  std::vector<std::pair<std::size_t, std::size_t>> state_index_;
};

/// The basis of C^S in local-index order.
std::vector<BasisVector> chain_module(const Multigraph& g, const StateSubset& s, Variant variant,
                                      const CubeAlgebras& algebras = {});

/// Unsigned per-edge map d_xi : C^S -> C^(S + e) in local coordinates.
SparseMatrix per_edge_map(const CubeLayout& layout, const StateSubset& s, EdgeIndex e);
SparseMatrix per_edge_map(const Multigraph& g, const StateSubset& s, EdgeIndex e, Variant variant,
                          const CubeAlgebras& algebras = {});

enum class CubeCoordinate : char { zero = '0', one = '1', star = '*' };

/// (-1)^(number of 1s before the star). Throws unless exactly one star.
int edge_sign(std::span<const CubeCoordinate> xi);
/// Same, parsing a label such as "(*,1)", "*,0,0" or "1*".
int edge_sign(std::string_view xi);

struct BuildOptions {
  CubeAlgebras algebras;
  std::size_t max_edges = kDefaultMaxEdges;
  /// Check d^2 = 0 and bidegree preservation after assembly.
  bool verify = true;
};

/// The bigraded cochain complex 0 -> C^0 -> ... -> C^n -> 0.
class BigradedComplex {
 public:
  BigradedComplex(CubeLayout layout, std::vector<SparseMatrix> differentials);

  const CubeLayout& layout() const { return layout_; }
  Variant variant() const { return layout_.variant(); }
  std::size_t height_count() const { return layout_.height_count(); }

  /// d^i : C^i -> C^(i+1). For i outside 0..n-1 a zero map of the right shape.
  SparseMatrix differential(std::size_t i) const;
  const std::vector<SparseMatrix>& differentials() const { return differentials_; }

  /// d^i restricted to bidegree d: rows basis_at(i+1, d), columns basis_at(i, d).
  SparseMatrix differential_block(std::size_t i, Bidegree d) const;

 private:
  CubeLayout layout_;
  std::vector<SparseMatrix> differentials_;
};

/// Throws std::invalid_argument above the edge limit and std::logic_error if
/// verification is on and fails.
BigradedComplex build_complex(const Multigraph& g, Variant variant, const BuildOptions& options = {});

struct ComplexDefect {
  std::string description;
};

/// First violation of d^(i+1) d^i = 0 or of bidegree preservation, if any.
std::optional<ComplexDefect> find_complex_defect(const BigradedComplex& cx);

/// sum_i (-1)^i qdim C^i.
Laurent graded_euler(const BigradedComplex& cx);

/// One matrix per source height.
using ChainMap = std::vector<SparseMatrix>;

struct ChainMapDefect {
  std::size_t height = 0;
  MatrixEntry entry;
  std::string description;
};

/// First height i where f^(i+1) d_src^i != d_dst^i f^i, or where f moves
/// bidegree.
std::optional<ChainMapDefect> chain_map_defect(const BigradedComplex& src, const BigradedComplex& dst,
                                               const ChainMap& f);

struct ProjectionMap {
  Multigraph subgraph;
  StateSubset gamma;
  /// p^i : C^i(G) -> C^i(Gamma) for i = 0..|E(G)|.
  ChainMap maps;
};

/// p(x) = x on summands with S inside Gamma, 0 elsewhere. Gamma keeps all
/// vertices of G and inherits the edge order.
ProjectionMap projection_map(const CubeLayout& source, const StateSubset& gamma);
ProjectionMap projection_map(const Multigraph& g, const StateSubset& gamma, Variant variant = Variant::yamada,
                             const CubeAlgebras& algebras = {});

struct PhiPsi {
  /// phi^i : C_T^i -> C_Y^i, u in every edge slot.
  ChainMap phi;
  /// psi^i : C_Y^i -> C_T^i, eta in every edge slot.
  ChainMap psi;
};

/// Requires layouts of the same graph and algebras, one per variant, and a
/// counit on M (std::invalid_argument otherwise).
PhiPsi phi_psi(const CubeLayout& tutte, const CubeLayout& yamada);

}  // namespace yamada
