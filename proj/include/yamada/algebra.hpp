#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "yamada/laurent.hpp"

namespace yamada {

/// Bidegree (j, k): j counts t-degree, k counts w-degree.
struct Bidegree {
  int j = 0;
  int k = 0;

  auto operator<=>(const Bidegree&) const = default;
  Bidegree operator+(const Bidegree& o) const { return {j + o.j, k + o.k}; }
};

/// A free bigraded Z-module of finite rank with a multiplication on basis
/// elements, a unit map u: Z -> M (image is a basis element) and an optional
/// counit eta: M -> Z.
struct AlgebraSpec {
  std::vector<std::string> labels;
  std::vector<Bidegree> degrees;
  /// product[a][b] is the coefficient vector of basis_a * basis_b.
  std::vector<std::vector<std::vector<std::int64_t>>> product;
  std::size_t unit_index = 0;
  std::optional<std::vector<std::int64_t>> counit;

  std::size_t rank() const { return labels.size(); }

  /// Checks shapes, associativity and bidegree additivity of the product, the
  /// unit in bidegree (0, 0), and eta(u(1)) = 1. Throws std::invalid_argument.
  void validate() const;

  /// Graded dimension sum over the basis of t^j w^k.
  Laurent qdim() const;

  /// A = Z[t]/(t^2), deg t = (1, 0), u(1) = 1, eta(1) = 1, eta(t) = 0.
  static AlgebraSpec dual_numbers_t();
  /// B = Z[w]/(w^2), deg w = (0, 1), u(1) = 1.
  static AlgebraSpec dual_numbers_w();
  /// Z[s]/(s^n) with deg s = degree; used to exercise the general cube.
  static AlgebraSpec truncated_polynomial(std::size_t n, Bidegree degree, const std::string& name);
};

}  // namespace yamada
