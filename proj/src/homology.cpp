#include "yamada/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace yamada {

std::size_t CohomologyTable::free_rank(std::size_t height, Bidegree d) const {
  for (const auto& s : summands) {
    if (s.height == height && s.bidegree == d) return s.free_rank;
  }
  return 0;
}

std::vector<Integer> CohomologyTable::torsion(std::size_t height, Bidegree d) const {
  for (const auto& s : summands) {
    if (s.height == height && s.bidegree == d) return s.torsion;
  }
  return {};
}

bool CohomologyTable::has_torsion() const {
  return std::any_of(summands.begin(), summands.end(), [](const auto& s) { return !s.torsion.empty(); });
}

CohomologyTable cohomology(const BigradedComplex& cx) {
  const CubeLayout& layout = cx.layout();
  CohomologyTable table;
  table.variant = cx.variant();
  table.height_count = cx.height_count();
  // Invariant factors of d^(i-1) per bidegree, carried over from the previous height.
  std::map<Bidegree, std::vector<Integer>> incoming;
  for (std::size_t i = 0; i < cx.height_count(); ++i) {
    std::map<Bidegree, std::vector<Integer>> outgoing;
    for (const Bidegree& d : layout.bidegrees(i)) {
      const std::size_t dim = layout.basis_at(i, d).size();
      std::vector<Integer>& out = outgoing[d];
      if (i + 1 < cx.height_count()) out = invariant_factors(cx.differential_block(i, d));
      const std::vector<Integer>& in = incoming[d];
      std::vector<Integer> torsion;
      for (const Integer& f : in) {
        if (f > 1) torsion.push_back(f);
      }
      const std::size_t free = dim - out.size() - in.size();
      if (free > 0 || !torsion.empty()) table.summands.push_back({i, d, free, std::move(torsion)});
    }
    incoming = std::move(outgoing);
  }
  return table;
}

Poincare poincare(const CohomologyTable& table) {
  Poincare out;
  out.per_height.assign(table.height_count, Laurent());
  for (const auto& s : table.summands) {
    if (s.height >= out.per_height.size()) out.per_height.resize(s.height + 1);
    out.per_height[s.height] += Laurent::monomial(static_cast<long>(s.free_rank), s.bidegree.j, s.bidegree.k);
  }
  for (std::size_t i = 0; i < out.per_height.size(); ++i) {
    if (i % 2 == 0) {
      out.euler += out.per_height[i];
    } else {
      out.euler -= out.per_height[i];
    }
  }
  return out;
}

namespace {

void place(SparseMatrix& into, const SparseMatrix& block, std::size_t row0, std::size_t col0) {
  for (const MatrixEntry& e : block.entries()) into.add(row0 + e.row, col0 + e.col, e.value);
}

}  // namespace

// With N(x, y) = (f x + d' y, d x) on C^i (+) C'^(i-1), the image of f on
// cocycles plus the coboundaries of the target has dimension rank N - rank d,
// so the induced rank is rank N - rank d - rank d'.
InducedRanks induced_map_ranks(const BigradedComplex& src, const BigradedComplex& dst, const ChainMap& f) {
  if (f.size() != src.height_count()) throw std::invalid_argument("chain map needs one matrix per source height");
  if (auto defect = chain_map_defect(src, dst, f)) {
    throw std::invalid_argument("not a chain map: " + defect->description);
  }
  const CubeLayout& ls = src.layout();
  const CubeLayout& ld = dst.layout();
  InducedRanks ranks;
  for (std::size_t i = 0; i < src.height_count(); ++i) {
    for (const Bidegree& d : ls.bidegrees(i)) {
      const SparseMatrix fi = f[i].submatrix(ld.basis_at(i, d), ls.basis_at(i, d));
      const SparseMatrix ds = src.differential_block(i, d);
      const SparseMatrix dd = i == 0 ? SparseMatrix(ld.basis_at(0, d).size(), 0) : dst.differential_block(i - 1, d);
      SparseMatrix n(fi.rows() + ds.rows(), fi.cols() + dd.cols());
      place(n, fi, 0, 0);
      place(n, dd, 0, fi.cols());
      place(n, ds, fi.rows(), 0);
      ranks[{i, d}] = matrix_rank(n) - matrix_rank(ds) - matrix_rank(dd);
    }
  }
  return ranks;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (g.size() != f.size()) throw std::invalid_argument("compose: chain maps have different lengths");
  ChainMap out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(g[i] * f[i]);
  return out;
}

ChainMap identity_map(const BigradedComplex& cx) {
  ChainMap out;
  for (std::size_t i = 0; i < cx.height_count(); ++i) out.push_back(SparseMatrix::identity(cx.layout().dimension(i)));
  return out;
}

ChainMap subtract(const ChainMap& f, const ChainMap& g) {
  if (g.size() != f.size()) throw std::invalid_argument("subtract: chain maps have different lengths");
  ChainMap out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f[i] - g[i]);
  return out;
}

}  // namespace yamada
