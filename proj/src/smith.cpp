#include "yamada/smith.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace yamada {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values)
    : IntMatrix(rows, cols) {
  if (values.size() != rows * cols) throw std::invalid_argument("IntMatrix: wrong number of values");
  std::size_t i = 0;
  for (long v : values) data_[i++] = v;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_sparse(const SparseMatrix& s) {
  IntMatrix m(s.rows(), s.cols());
  for (std::size_t c = 0; c < s.cols(); ++c) {
    for (const auto& [r, v] : s.column(c)) m(r, c) = static_cast<long>(v);
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(source, c) != 0) (*this)(target, c) += factor * (*this)(source, c);
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    if ((*this)(r, source) != 0) (*this)(r, target) += factor * (*this)(r, source);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::hcat(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.rows() != rhs.rows()) throw std::invalid_argument("hcat: row counts differ");
  IntMatrix out(lhs.rows(), lhs.cols() + rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) out(r, c) = lhs(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, lhs.cols() + c) = rhs(r, c);
  }
  return out;
}

IntMatrix IntMatrix::columns(const std::vector<std::size_t>& ids) const {
  IntMatrix out(rows_, ids.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < ids.size(); ++c) out(r, c) = (*this)(r, ids.at(c));
  }
  return out;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Integer& a = lhs(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols(); ++c) {
        if (rhs(k, c) != 0) out(r, c) += a * rhs(k, c);
      }
    }
  }
  return out;
}

namespace {

struct Reducer {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  bool track;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    if (track) u.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    if (track) v.swap_cols(a, b);
  }
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& f) {
    d.add_row_multiple(target, source, f);
    if (track) u.add_row_multiple(target, source, f);
  }
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& f) {
    d.add_col_multiple(target, source, f);
    if (track) v.add_col_multiple(target, source, f);
  }
  void negate_row(std::size_t r) {
    d.negate_row(r);
    if (track) u.negate_row(r);
  }

  // Smallest nonzero |entry| in the trailing submatrix starting at (t, t).
  bool pick_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < d.rows(); ++r) {
      for (std::size_t c = t; c < d.cols(); ++c) {
        const Integer& x = d(r, c);
        if (x == 0) continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          pr = r;
          pc = c;
          found = true;
          if (best == 1) return true;
        }
      }
    }
    return found;
  }

  // Reduce row and column t against the pivot; true when both are clear.
  bool clear_cross(std::size_t t) {
    bool clear = true;
    Integer q;
    for (std::size_t r = t + 1; r < d.rows(); ++r) {
      if (d(r, t) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
      add_row_multiple(r, t, -q);
      if (d(r, t) != 0) clear = false;
    }
    for (std::size_t c = t + 1; c < d.cols(); ++c) {
      if (d(t, c) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
      add_col_multiple(c, t, -q);
      if (d(t, c) != 0) clear = false;
    }
    return clear;
  }

  // Move the smallest nonzero entry of row t / column t onto the diagonal.
  void repivot_cross(std::size_t t) {
    std::size_t best_r = t;
    std::size_t best_c = t;
    Integer best = abs(d(t, t));
    for (std::size_t r = t + 1; r < d.rows(); ++r) {
      if (d(r, t) != 0 && (best == 0 || abs(d(r, t)) < best)) {
        best = abs(d(r, t));
        best_r = r;
        best_c = t;
      }
    }
    for (std::size_t c = t + 1; c < d.cols(); ++c) {
      if (d(t, c) != 0 && (best == 0 || abs(d(t, c)) < best)) {
        best = abs(d(t, c));
        best_r = t;
        best_c = c;
      }
    }
    swap_rows(t, best_r);
    swap_cols(t, best_c);
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a, bool with_transforms) {
  Reducer red{a, with_transforms ? IntMatrix::identity(a.rows()) : IntMatrix(),
              with_transforms ? IntMatrix::identity(a.cols()) : IntMatrix(), with_transforms};
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    std::size_t pr = 0;
    std::size_t pc = 0;
    if (!red.pick_pivot(t, pr, pc)) break;
    red.swap_rows(t, pr);
    red.swap_cols(t, pc);
    while (true) {
      if (!red.clear_cross(t)) {
        red.repivot_cross(t);
        continue;
      }
      // Enforce d_t | every remaining entry by folding an offending row in.
      bool divisible = true;
      for (std::size_t r = t + 1; r < red.d.rows() && divisible; ++r) {
        for (std::size_t c = t + 1; c < red.d.cols(); ++c) {
          if (red.d(r, c) != 0 && !mpz_divisible_p(red.d(r, c).get_mpz_t(), red.d(t, t).get_mpz_t())) {
            red.add_row_multiple(t, r, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (red.d(t, t) < 0) red.negate_row(t);
  }

  SNFResult out;
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(red.d(i, i));
  out.D = std::move(red.d);
  out.U = std::move(red.u);
  out.V = std::move(red.v);
  return out;
}

std::size_t matrix_rank(IntMatrix a) {
  std::size_t rank = 0;
  Integer previous = 1;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t pivot = a.rows();
    for (std::size_t r = rank; r < a.rows(); ++r) {
      if (a(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == a.rows()) continue;
    a.swap_rows(rank, pivot);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      for (std::size_t k = c + 1; k < a.cols(); ++k) {
        a(r, k) = a(rank, c) * a(r, k) - a(r, c) * a(rank, k);
        mpz_divexact(a(r, k).get_mpz_t(), a(r, k).get_mpz_t(), previous.get_mpz_t());
      }
      a(r, c) = 0;
    }
    previous = a(rank, c);
    ++rank;
  }
  return rank;
}

Integer determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        a(r, c) = a(k, k) * a(r, c) - a(r, k) * a(k, c);
        mpz_divexact(a(r, c).get_mpz_t(), a(r, c).get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * previous);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const SNFResult snf = smith_normal_form(a, true);
  std::vector<std::size_t> ids;
  for (std::size_t c = snf.rank(); c < a.cols(); ++c) ids.push_back(c);
  return snf.V.columns(ids);
}

namespace {

// Row-major sparse copy with column occupancy, for unit-pivot elimination.
struct SparseReducer {
  std::vector<std::map<std::size_t, Integer>> rows;
  std::vector<std::set<std::size_t>> cols;

  explicit SparseReducer(const SparseMatrix& a) : rows(a.rows()), cols(a.cols()) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      for (const auto& [r, v] : a.column(c)) {
        rows[r].emplace(c, v);
        cols[c].insert(r);
      }
    }
  }

  void eliminate(std::size_t pr, std::size_t pc) {
    const Integer p = rows[pr].at(pc);
    const std::vector<std::size_t> targets(cols[pc].begin(), cols[pc].end());
    for (std::size_t r : targets) {
      if (r == pr) continue;
      const Integer factor = rows[r].at(pc) * p;
      for (const auto& [c, v] : rows[pr]) {
        auto [it, inserted] = rows[r].try_emplace(c, 0);
        it->second -= factor * v;
        if (it->second == 0) {
          rows[r].erase(it);
          cols[c].erase(r);
        } else if (inserted) {
          cols[c].insert(r);
        }
      }
    }
    for (const auto& [c, v] : rows[pr]) cols[c].erase(pr);
    rows[pr].clear();
  }

  // One sweep over columns, sparsest first; returns the number of pivots taken.
  std::size_t sweep() {
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!cols[c].empty()) order.push_back(c);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return cols[a].size() < cols[b].size(); });
    std::size_t pivots = 0;
    for (std::size_t c : order) {
      std::size_t best = rows.size();
      for (std::size_t r : cols[c]) {
        const Integer& v = rows[r].at(c);
        if ((v == 1 || v == -1) && (best == rows.size() || rows[r].size() < rows[best].size())) best = r;
      }
      if (best == rows.size()) continue;
      eliminate(best, c);
      ++pivots;
    }
    return pivots;
  }
};

}  // namespace

std::vector<Integer> invariant_factors(const SparseMatrix& a) {
  SparseReducer red(a);
  std::size_t units = 0;
  while (std::size_t n = red.sweep()) units += n;

  std::vector<std::size_t> live_rows;
  std::vector<std::size_t> col_index(a.cols(), a.cols());
  std::size_t live_cols = 0;
  for (std::size_t r = 0; r < red.rows.size(); ++r) {
    if (red.rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& [c, v] : red.rows[r]) {
      if (col_index[c] == a.cols()) col_index[c] = live_cols++;
    }
  }
  std::vector<Integer> out(units, Integer(1));
  if (live_rows.empty()) return out;
  IntMatrix rest(live_rows.size(), live_cols);
  for (std::size_t i = 0; i < live_rows.size(); ++i) {
    for (const auto& [c, v] : red.rows[live_rows[i]]) rest(i, col_index[c]) = v;
  }
  for (Integer& f : smith_normal_form(rest, false).invariant_factors) out.push_back(std::move(f));
  return out;
}

}  // namespace yamada
