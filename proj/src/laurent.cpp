#include "yamada/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace yamada {

Laurent::Laurent(long value) : Laurent(Integer(value)) {}

Laurent::Laurent(const Integer& value) {
  if (value != 0) terms_.emplace(Exponent{0, 0}, value);
}

Laurent Laurent::monomial(const Integer& coefficient, int x_exp, int y_exp) {
  Laurent p;
  p.add_term({x_exp, y_exp}, coefficient);
  return p;
}

Integer Laurent::coefficient(int x_exp, int y_exp) const {
  auto it = terms_.find({x_exp, y_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

bool Laurent::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

Laurent Laurent::inverse() const {
  if (!is_unit()) throw std::domain_error("Laurent::inverse: not a unit: " + to_string(*this));
  const auto& [e, c] = *terms_.begin();
  return monomial(c, -e.x, -e.y);
}

bool Laurent::has_negative_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.x < 0 || t.first.y < 0; });
}

int Laurent::min_x_exponent() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e.x);
  return terms_.empty() ? 0 : m;
}

int Laurent::min_y_exponent() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e.y);
  return terms_.empty() ? 0 : m;
}

void Laurent::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& lhs, const Laurent& rhs) {
  Laurent r;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      r.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
    }
  }
  return r;
}

Laurent& Laurent::operator*=(const Laurent& other) {
  *this = *this * other;
  return *this;
}

Laurent pow(const Laurent& base, int exponent) {
  if (exponent < 0) {
    if (!base.is_unit()) {
      throw std::domain_error("pow: negative power of a non-unit: " + to_string(base));
    }
    return pow(base.inverse(), -exponent);
  }
  Laurent result(1);
  Laurent square = base;
  auto n = static_cast<unsigned>(exponent);
  while (n != 0) {
    if (n & 1U) result *= square;
    n >>= 1U;
    if (n != 0) square *= square;
  }
  return result;
}

namespace {

// Coefficients of (1 + s)^n for n >= 0.
std::vector<Integer> binomial_row(int n) {
  std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    mpz_bin_uiui(row[static_cast<std::size_t>(k)].get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
  }
  return row;
}

Rational rational_pow(const Rational& base, int exponent) {
  Rational b = base;
  if (exponent < 0) {
    b = 1 / b;
    exponent = -exponent;
  }
  Rational r(1);
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  r.canonicalize();
  return r;
}

void append_power(std::ostringstream& os, std::string_view name, int exp, bool& first_factor) {
  if (exp == 0) return;
  if (!first_factor) os << '*';
  os << name;
  if (exp != 1) os << '^' << exp;
  first_factor = false;
}

}  // namespace

Laurent substitute_shift(const Laurent& p) {
  if (p.has_negative_exponents()) {
    throw std::domain_error("substitute_shift: negative exponent in " + to_string(p));
  }
  Laurent r;
  for (const auto& [e, c] : p.terms()) {
    const auto bx = binomial_row(e.x);
    const auto by = binomial_row(e.y);
    for (int i = 0; i <= e.x; ++i) {
      for (int j = 0; j <= e.y; ++j) {
        r += Laurent::monomial(c * bx[static_cast<std::size_t>(i)] * by[static_cast<std::size_t>(j)], i, j);
      }
    }
  }
  return r;
}

Rational evaluate(const Laurent& p, const Rational& x0, const Rational& y0) {
  if (x0 == 0 && p.min_x_exponent() < 0) {
    throw std::domain_error("evaluate: x = 0 with negative x-exponent");
  }
  if (y0 == 0 && p.min_y_exponent() < 0) {
    throw std::domain_error("evaluate: y = 0 with negative y-exponent");
  }
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) {
    sum += Rational(c) * rational_pow(x0, e.x) * rational_pow(y0, e.y);
  }
  return sum;
}

Laurent geometric_sum(const Laurent& a, const Laurent& b, int n) {
  if (n < 1) throw std::invalid_argument("geometric_sum: n must be positive");
  Laurent sum;
  Laurent a_power(1);
  for (int k = 0; k <= n - 2; ++k) {
    sum += a_power * pow(b, n - 2 - k);
    a_power *= a;
  }
  return sum;
}

std::string to_string(const Laurent& p, std::string_view x_name, std::string_view y_name) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (first_term) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first_term = false;
    const bool constant = e.x == 0 && e.y == 0;
    bool first_factor = true;
    if (constant || magnitude != 1) {
      os << magnitude.get_str();
      first_factor = false;
    }
    append_power(os, x_name, e.x, first_factor);
    append_power(os, y_name, e.y, first_factor);
  }
  return os.str();
}

}  // namespace yamada
