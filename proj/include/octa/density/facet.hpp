#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "octa/density/recursion.hpp"
#include "octa/exactmath/laurent.hpp"

namespace octa {

/// [n]_x = (x^n - x^-n) / (x - x^-1), exponents n-1, n-3, ..., 1-n.
struct BracketPoly {
  int n = 0;
  std::map<int, Rational> coeff;

  explicit BracketPoly(int n_) : n(n_) {
    const int a = std::abs(n);
    const Rational sign = n < 0 ? -1 : 1;
    for (int e = a - 1; e >= 1 - a; e -= 2) coeff[e] = sign;
  }
};

inline LaurentGrid bracket_product(int nx, int ny, const Rational& scale = 1) {
  LaurentGrid g;
  BracketPoly bx(nx), by(ny);
  for (const auto& [ex, cx] : bx.coeff) {
    for (const auto& [ey, cy] : by.coeff) grid_add(g, {ex, ey}, scale * cx * cy);
  }
  return g;
}

enum class FacetVariant { U_4k_minus_1, U_4k_minus_3, V_4k_minus_1, V_4k_minus_3 };

inline FacetVariant parse_facet_variant(const std::string& s) {
  if (s == "U_4k-1") return FacetVariant::U_4k_minus_1;
  if (s == "U_4k-3") return FacetVariant::U_4k_minus_3;
  if (s == "V_4k-1") return FacetVariant::V_4k_minus_1;
  if (s == "V_4k-3") return FacetVariant::V_4k_minus_3;
  throw std::invalid_argument("unknown facet variant " + s);
}

/// z-order 4k-1 or 4k-3 of the variant.
inline int facet_layer(FacetVariant v, int k) {
  return (v == FacetVariant::U_4k_minus_1 || v == FacetVariant::V_4k_minus_1) ? 4 * k - 1 : 4 * k - 3;
}

/// Bracket closed forms for the sigma = 0 facet:
///   U_{4k-1} = [2k][2k] - [2k-1][2k-1]
///   U_{4k-3} = tau ([2k-2][2k] - [2k-3][2k-1]) + (1-tau) ([2k][2k-2] - [2k-1][2k-3])
///   V_{4k-1} = tau ([2k-1][2k+1] - [2k-2][2k]) + (1-tau) ([2k+1][2k-1] - [2k][2k-2])
///   V_{4k-3} = [2k-1][2k-1] - [2k-2][2k-2]
/// with the first bracket in x and the second in y.
inline LaurentGrid facet_formula(FacetVariant v, int k, const Rational& tau) {
  if (k < 1) throw std::invalid_argument("facet_formula needs k >= 1");
  const Rational one = 1, minus = -1, ct = Rational(1) - tau;
  switch (v) {
    case FacetVariant::U_4k_minus_1:
      return bracket_product(2 * k, 2 * k) + bracket_product(2 * k - 1, 2 * k - 1, minus);
    case FacetVariant::U_4k_minus_3:
      return bracket_product(2 * k - 2, 2 * k, tau) + bracket_product(2 * k - 3, 2 * k - 1, -tau) +
             bracket_product(2 * k, 2 * k - 2, ct) + bracket_product(2 * k - 1, 2 * k - 3, -ct);
    case FacetVariant::V_4k_minus_1:
      return bracket_product(2 * k - 1, 2 * k + 1, tau) + bracket_product(2 * k - 2, 2 * k, -tau) +
             bracket_product(2 * k + 1, 2 * k - 1, ct) + bracket_product(2 * k, 2 * k - 2, -ct);
    case FacetVariant::V_4k_minus_3:
      return bracket_product(2 * k - 1, 2 * k - 1, one) + bracket_product(2 * k - 2, 2 * k - 2, minus);
  }
  throw std::logic_error("unknown facet variant");
}

/// Parity projection of a layer pair: with A = rho^{(0,0)} and B = rho^{(1,1)}/(xy),
/// U keeps the even-even part of A and the odd-odd part of B, V the odd-odd
/// part of A and the even-even part of B.
inline LaurentGrid facet_projection(const DensityGrid& a, const DensityGrid& b, bool u_variant) {
  if (a.eps() != 0 || a.eta() != 0 || b.eps() != 1 || b.eta() != 1 || a.k() != b.k()) {
    throw std::invalid_argument("facet_projection needs rho^(0,0) and rho^(1,1) layers of equal k");
  }
  if (!a.is_exact() || !b.is_exact()) throw std::invalid_argument("facet_projection needs exact grids");
  LaurentGrid g;
  const int r = a.k() + 1;
  for (int i = -r; i <= r; ++i) {
    for (int j = -r; j <= r; ++j) {
      const bool ii = floor_mod(i, 2) == 0, jj = floor_mod(j, 2) == 0;
      if (ii != jj) continue;
      const bool from_a = u_variant ? ii : !ii;
      grid_add(g, {i, j}, from_a ? a.value(i, j) : b.value(i + 1, j + 1));
    }
  }
  return g;
}

}  // namespace octa
