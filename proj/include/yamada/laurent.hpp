#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace yamada {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent pair of a monomial x^x * y^y.
struct Exponent {
  int x = 0;
  int y = 0;

  auto operator<=>(const Exponent&) const = default;
};

/// Exact bivariate Laurent polynomial with arbitrary-precision integer
/// coefficients.
///
/// Terms are kept in a map ordered lexicographically by (x, y) exponent; no
/// zero coefficient is ever stored, so two polynomials are equal iff their term
/// maps are equal. The same type is used for polynomials in (x, y) and for
/// graded dimensions in (t, w); the variable names only matter when printing.
class Laurent {
 public:
  using TermMap = std::map<Exponent, Integer>;

  Laurent() = default;
  Laurent(long value);  // NOLINT(google-explicit-constructor)
  Laurent(const Integer& value);  // NOLINT(google-explicit-constructor)

  static Laurent monomial(const Integer& coefficient, int x_exp, int y_exp);
  static Laurent x() { return monomial(1, 1, 0); }
  static Laurent y() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int x_exp, int y_exp) const;

  /// True for a single term with coefficient +1 or -1.
  bool is_unit() const;
  /// Multiplicative inverse of a unit; throws std::domain_error otherwise.
  Laurent inverse() const;

  bool has_negative_exponents() const;
  int min_x_exponent() const;
  int min_y_exponent() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other);

  friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
  friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
  friend Laurent operator*(const Laurent& lhs, const Laurent& rhs);
  friend bool operator==(const Laurent& lhs, const Laurent& rhs) = default;

 private:
  void add_term(const Exponent& e, const Integer& c);

  TermMap terms_;
};

/// p^n. Negative n is allowed only when p is a unit.
Laurent pow(const Laurent& base, int exponent);

/// p(1 + t, 1 + w) for a polynomial without negative exponents.
Laurent substitute_shift(const Laurent& p);

/// Exact value of p at (x0, y0).
Rational evaluate(const Laurent& p, const Rational& x0, const Rational& y0);

/// sum_{k=0}^{n-2} a^k b^{n-2-k}; zero for n = 1.
Laurent geometric_sum(const Laurent& a, const Laurent& b, int n);

/// Human-readable form with the leading (highest) term first, e.g.
/// "x^3*y - x^2".
std::string to_string(const Laurent& p, std::string_view x_name = "x",
                      std::string_view y_name = "y");

}  // namespace yamada
