#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "yamada/laurent.hpp"
#include "yamada/sparse_matrix.hpp"

namespace yamada {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_sparse(const SparseMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

  /// Columns side by side; both operands need the same row count.
  static IntMatrix hcat(const IntMatrix& lhs, const IntMatrix& rhs);
  IntMatrix columns(const std::vector<std::size_t>& ids) const;

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... .
struct SNFResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  /// The nonzero diagonal entries of D, all positive.
  std::vector<Integer> invariant_factors;

  std::size_t rank() const { return invariant_factors.size(); }
};

/// Smith normal form by repeated minimal-pivot reduction. With
/// `with_transforms` false, U and V are left empty.
SNFResult smith_normal_form(const IntMatrix& a, bool with_transforms = true);

/// Exact rank (fraction-free elimination).
std::size_t matrix_rank(IntMatrix a);

/// Determinant by fraction-free (Bareiss) elimination; the matrix must be square.
Integer determinant(IntMatrix a);

/// Z-basis of the integer kernel {v : A v = 0}, as the columns of the result.
IntMatrix kernel_basis(const IntMatrix& a);

/// Nonzero invariant factors of a sparse matrix, ascending in the divisibility
/// chain. Unit pivots are eliminated in place first; only what is left goes
/// through the dense reduction.
std::vector<Integer> invariant_factors(const SparseMatrix& a);

inline std::size_t matrix_rank(const SparseMatrix& a) { return invariant_factors(a).size(); }

}  // namespace yamada
