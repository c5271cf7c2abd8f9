#include "yamada/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace yamada {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("sparse matrix entry overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("sparse matrix entry overflow");
  return r;
}

}  // namespace

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.add(i, i, 1);
  return m;
}

void SparseMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
  if (row >= rows_ || col >= columns_.size()) throw std::out_of_range("sparse matrix index out of range");
  if (value == 0) return;
  auto& column = columns_[col];
  auto [it, inserted] = column.try_emplace(row, value);
  if (!inserted) {
    it->second = checked_add(it->second, value);
    if (it->second == 0) column.erase(it);
  }
}

std::int64_t SparseMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= columns_.size()) throw std::out_of_range("sparse matrix index out of range");
  const auto& column = columns_[col];
  auto it = column.find(row);
  return it == column.end() ? 0 : it->second;
}

std::vector<MatrixEntry> SparseMatrix::entries() const {
  std::vector<MatrixEntry> out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& [r, v] : columns_[c]) out.push_back({r, c, v});
  }
  std::sort(out.begin(), out.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return out;
}

std::size_t SparseMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& column : columns_) n += column.size();
  return n;
}

SparseMatrix SparseMatrix::submatrix(const std::vector<std::size_t>& row_ids,
                                     const std::vector<std::size_t>& col_ids) const {
  std::map<std::size_t, std::size_t> row_position;
  for (std::size_t i = 0; i < row_ids.size(); ++i) row_position[row_ids[i]] = i;
  SparseMatrix out(row_ids.size(), col_ids.size());
  for (std::size_t c = 0; c < col_ids.size(); ++c) {
    for (const auto& [r, v] : columns_.at(col_ids[c])) {
      auto it = row_position.find(r);
      if (it != row_position.end()) out.add(it->second, c, v);
    }
  }
  return out;
}

SparseMatrix operator*(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("sparse matrix product: shape mismatch");
  SparseMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    for (const auto& [k, v] : rhs.columns_[c]) {
      for (const auto& [r, w] : lhs.columns_[k]) out.add(r, c, checked_mul(w, v));
    }
  }
  return out;
}

SparseMatrix operator-(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw std::invalid_argument("sparse matrix difference: shape mismatch");
  }
  SparseMatrix out = lhs;
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    for (const auto& [r, v] : rhs.columns_[c]) out.add(r, c, -v);
  }
  return out;
}

std::optional<MatrixEntry> first_difference(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  const auto diff = (lhs - rhs).entries();
  if (diff.empty()) return std::nullopt;
  return diff.front();
}

}  // namespace yamada
