#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "yamada/cube.hpp"
#include "yamada/laurent.hpp"
#include "yamada/smith.hpp"

namespace yamada {

struct CohomologySummand {
  std::size_t height = 0;
  Bidegree bidegree;
  std::size_t free_rank = 0;
  /// Invariant factors greater than 1, ascending in the divisibility chain.
  std::vector<Integer> torsion;

  bool operator==(const CohomologySummand&) const = default;
};

/// H^i at each bidegree; only nonzero groups are stored, sorted by (i, j, k).
struct CohomologyTable {
  Variant variant = Variant::yamada;
  std::size_t height_count = 0;
  std::vector<CohomologySummand> summands;

  std::size_t free_rank(std::size_t height, Bidegree d) const;
  std::vector<Integer> torsion(std::size_t height, Bidegree d) const;
  bool has_torsion() const;

  bool operator==(const CohomologyTable&) const = default;
};

/// Blockwise cohomology: per bidegree, free rank = dim C - rank d^i - rank
/// d^(i-1) and torsion = invariant factors of d^(i-1) above 1.
CohomologyTable cohomology(const BigradedComplex& cx);

struct Poincare {
  /// P_i = sum over bidegrees of free_rank t^j w^k.
  std::vector<Laurent> per_height;
  /// sum_i (-1)^i P_i
  Laurent euler;
};

Poincare poincare(const CohomologyTable& table);

/// (height, bidegree) -> rank of the induced map on H (x) Q.
using InducedRanks = std::map<std::pair<std::size_t, Bidegree>, std::size_t>;

/// Rank of H^i(f) (x) Q for a chain map f: src -> dst, i.e. the dimension of
/// f(cocycles) + coboundaries modulo coboundaries. One entry per bidegree
/// occurring in the source at each height.
/// Throws std::invalid_argument if f is not a chain map.
InducedRanks induced_map_ranks(const BigradedComplex& src, const BigradedComplex& dst, const ChainMap& f);

/// Composition g . f of two chain maps, height by height.
ChainMap compose(const ChainMap& g, const ChainMap& f);
/// Identity chain map of a complex.
ChainMap identity_map(const BigradedComplex& cx);
/// f - g, height by height.
ChainMap subtract(const ChainMap& f, const ChainMap& g);

}  // namespace yamada
