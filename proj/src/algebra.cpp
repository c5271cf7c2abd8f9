#include "yamada/algebra.hpp"

#include <stdexcept>

namespace yamada {

namespace {

using Vector = std::vector<std::int64_t>;

// (sum_c x_c basis_c) * basis_b
Vector multiply_right(const AlgebraSpec& a, const Vector& x, std::size_t b) {
  Vector out(a.rank(), 0);
  for (std::size_t c = 0; c < a.rank(); ++c) {
    if (x[c] == 0) continue;
    for (std::size_t d = 0; d < a.rank(); ++d) out[d] += x[c] * a.product[c][b][d];
  }
  return out;
}

// basis_a * (sum_c x_c basis_c)
Vector multiply_left(const AlgebraSpec& a, std::size_t lhs, const Vector& x) {
  Vector out(a.rank(), 0);
  for (std::size_t c = 0; c < a.rank(); ++c) {
    if (x[c] == 0) continue;
    for (std::size_t d = 0; d < a.rank(); ++d) out[d] += x[c] * a.product[lhs][c][d];
  }
  return out;
}

}  // namespace

void AlgebraSpec::validate() const {
  const std::size_t r = rank();
  if (r == 0) throw std::invalid_argument("algebra: rank must be positive");
  if (degrees.size() != r) throw std::invalid_argument("algebra: one bidegree per basis element required");
  if (product.size() != r) throw std::invalid_argument("algebra: product table has wrong shape");
  for (const auto& row : product) {
    if (row.size() != r) throw std::invalid_argument("algebra: product table has wrong shape");
    for (const auto& v : row) {
      if (v.size() != r) throw std::invalid_argument("algebra: product table has wrong shape");
    }
  }
  if (unit_index >= r) throw std::invalid_argument("algebra: unit index out of range");
  if (degrees[unit_index] != Bidegree{}) throw std::invalid_argument("algebra: u(1) must have bidegree (0,0)");

  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      for (std::size_t c = 0; c < r; ++c) {
        if (product[a][b][c] != 0 && degrees[c] != degrees[a] + degrees[b]) {
          throw std::invalid_argument("algebra: product is not bidegree-additive at " + labels[a] +
                                      "*" + labels[b]);
        }
      }
      for (std::size_t c = 0; c < r; ++c) {
        // (a b) c == a (b c)
        if (multiply_right(*this, product[a][b], c) != multiply_left(*this, a, product[b][c])) {
          throw std::invalid_argument("algebra: product is not associative at (" + labels[a] + "," +
                                      labels[b] + "," + labels[c] + ")");
        }
      }
    }
  }
  if (counit) {
    if (counit->size() != r) throw std::invalid_argument("algebra: counit has wrong length");
    if ((*counit)[unit_index] != 1) throw std::invalid_argument("algebra: eta(u(1)) must equal 1");
  }
}

Laurent AlgebraSpec::qdim() const {
  Laurent q;
  for (const Bidegree& d : degrees) q += Laurent::monomial(1, d.j, d.k);
  return q;
}

AlgebraSpec AlgebraSpec::truncated_polynomial(std::size_t n, Bidegree degree, const std::string& name) {
  if (n == 0) throw std::invalid_argument("truncated_polynomial: n must be positive");
  AlgebraSpec a;
  for (std::size_t i = 0; i < n; ++i) {
    a.labels.push_back(i == 0 ? "1" : (i == 1 ? name : name + "^" + std::to_string(i)));
    a.degrees.push_back({degree.j * static_cast<int>(i), degree.k * static_cast<int>(i)});
  }
  a.product.assign(n, std::vector<Vector>(n, Vector(n, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n && j < n; ++j) a.product[i][j][i + j] = 1;
  }
  a.unit_index = 0;
  Vector eta(n, 0);
  eta[0] = 1;
  a.counit = eta;
  return a;
}

AlgebraSpec AlgebraSpec::dual_numbers_t() { return truncated_polynomial(2, {1, 0}, "t"); }

AlgebraSpec AlgebraSpec::dual_numbers_w() {
  AlgebraSpec b = truncated_polynomial(2, {0, 1}, "w");
  b.counit.reset();
  return b;
}

}  // namespace yamada
