#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace yamada {

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t value = 0;

  bool operator==(const MatrixEntry&) const = default;
};

/// Sparse integer matrix stored by columns; acts on column vectors, so a map
/// C^i -> C^(i+1) has dim C^(i+1) rows and dim C^i columns.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  /// Adds value at (row, col); entries cancelling to zero are dropped.
  void add(std::size_t row, std::size_t col, std::int64_t value);
  std::int64_t at(std::size_t row, std::size_t col) const;

  const std::map<std::size_t, std::int64_t>& column(std::size_t col) const { return columns_.at(col); }

  /// All nonzero entries sorted by (row, col).
  std::vector<MatrixEntry> entries() const;
  std::size_t nonzero_count() const;
  bool is_zero() const { return nonzero_count() == 0; }

  /// Restriction to the given row and column index lists.
  SparseMatrix submatrix(const std::vector<std::size_t>& row_ids, const std::vector<std::size_t>& col_ids) const;

  friend SparseMatrix operator*(const SparseMatrix& lhs, const SparseMatrix& rhs);
  friend SparseMatrix operator-(const SparseMatrix& lhs, const SparseMatrix& rhs);
  friend bool operator==(const SparseMatrix& lhs, const SparseMatrix& rhs) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::map<std::size_t, std::int64_t>> columns_;
};

/// First entry where lhs and rhs differ, if any (shapes must agree).
std::optional<MatrixEntry> first_difference(const SparseMatrix& lhs, const SparseMatrix& rhs);

}  // namespace yamada
