#pragma once

#include <string_view>

#include "yamada/laurent.hpp"
#include "yamada/multigraph.hpp"

namespace yamada {

/// Coefficients of a deletion-contraction invariant f:
///   f(G) = A f(G/e) + B f(G-e)   for e neither loop nor isthmus,
///   f(H.K) = C f(H) f(K)         for a one-point union,
///   f(T1) = D,  f(L1) = E.
/// C has to be a unit of the Laurent ring.
struct InvariantParams {
  Laurent A;
  Laurent B;
  Laurent C;
  Laurent D;
  Laurent E;

  /// Throws std::domain_error if C is not a unit.
  void validate() const;
};

enum class PolynomialKind { tutte, chromatic, flow, negami, yamada };

PolynomialKind parse_polynomial_kind(std::string_view name);
std::string_view to_string(PolynomialKind kind);

/// Coefficient row for a classical invariant. Chromatic and flow use x as
/// lambda. Negami's third variable t is fixed to `negami_t`; since C = 1/t has
/// to be a unit of Z[x^+-1, y^+-1], only t = 1 and t = -1 are accepted.
InvariantParams specialization(PolynomialKind kind, long negami_t = 1);
InvariantParams specialization(std::string_view name, long negami_t = 1);

/// h(G; x, y) = sum_S (-x)^(|S|-|E|) x^b0([G:S]) y^b1([G:S]).
Laurent yamada_state_sum(const Multigraph& g);

struct GPolynomials {
  /// (-x)^|E| h(G; x, y), a polynomial in x and y.
  Laurent g_tilde;
  /// g_tilde(1 + t, 1 + w), printed in (t, w).
  Laurent g;
};

GPolynomials g_polynomials(const Multigraph& g);

/// Recursive deletion-contraction evaluation.
///
/// The edgeless graph on n vertices evaluates to C^-n, which makes f
/// multiplicative over disjoint unions and gives f(T1) = C D f(K1) = D. Loops
/// and isthmi are split off as one-point unions with L1 and T1:
///   loop e:    f(G) = C E f(G - e)
///   isthmus e: f(G) = C D f(G / e)
Laurent eval_del_con(const Multigraph& g, const InvariantParams& params);

enum class GraphFamily { tree, bouquet, multiedge, cycle };

/// Closed forms for T_n, L_n, D_n and P_n (n >= 1), with the fractions in D_n
/// and P_n expanded via geometric_sum.
Laurent closed_form(GraphFamily family, int n, const InvariantParams& params);

/// Number of proper colourings with `lambda` colours by brute force; requires
/// lambda <= 8 and |V| <= 8.
Integer chromatic_count(const Multigraph& g, unsigned lambda);

}  // namespace yamada
