#pragma once

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

#include "octa/exactmath/laurent.hpp"
#include "octa/exactmath/ratfunc.hpp"

namespace octa {

namespace detail {

/// p(x, y, z) as z-power -> Laurent grid in (x, y).
inline std::map<int, LaurentGrid> split_by_z(const MPoly& p, std::pair<int, int> shift) {
  if (p.num_vars() != 3) throw std::invalid_argument("series_extract needs polynomials in exactly x, y, z");
  std::map<int, LaurentGrid> out;
  for (const auto& [e, c] : p.terms()) grid_add(out[e[2]], {e[0] + shift.first, e[1] + shift.second}, c);
  return out;
}

}  // namespace detail

/// Coefficients of z^0 .. z^order of f as Laurent grids in (x, y), truncated to
/// |i|, |j| <= order. The lowest z-coefficient of the denominator must be a
/// single monomial so that the expansion is a power series in z with Laurent
/// coefficients.
inline std::vector<LaurentGrid> series_extract(const RatFunc& f, int order, int guard = 32) {
  if (order < 0) throw std::invalid_argument("negative series order");
  if (order > guard) throw std::out_of_range("series order beyond the guard");
  if (f.vars() != std::vector<std::string>{"x", "y", "z"}) {
    throw std::invalid_argument("series_extract needs a function of (x, y, z)");
  }
  const auto& pre = f.prefactor();
  auto num = detail::split_by_z(f.numerator(), {pre[0], pre[1]});
  auto den = detail::split_by_z(f.denominator(), {0, 0});
  const int k0 = den.begin()->first;
  const LaurentGrid& lead = den.begin()->second;
  if (lead.size() != 1) throw std::domain_error("lowest z-coefficient of the denominator is not a monomial");
  const auto [lead_e, lead_c] = *lead.begin();
  const Rational lead_inv = Rational(1) / lead_c;
  const std::pair<int, int> lead_shift{-lead_e.first, -lead_e.second};

  // f = z^(pre_z - k0) * q(z), q = N / (D z^-k0) as a power series.
  const int offset = pre[2] - k0;
  const int nmax = order - offset;
  std::vector<LaurentGrid> out(static_cast<std::size_t>(order + 1));
  std::vector<LaurentGrid> q;
  for (int n = 0; n <= nmax; ++n) {
    LaurentGrid acc;
    if (auto it = num.find(n); it != num.end()) acc = it->second;
    for (const auto& [k, dk] : den) {
      const int back = n - (k - k0);
      if (k == k0 || back < 0) continue;
      acc = acc + scaled(dk * q[static_cast<std::size_t>(back)], -1);
    }
    q.push_back(scaled(acc, lead_inv, lead_shift));
    const int power = n + offset;
    if (power < 0) {
      if (!q.back().empty()) throw std::domain_error("series has negative z powers");
      continue;
    }
    for (const auto& [e, c] : q.back()) {
      if (std::abs(e.first) <= order && std::abs(e.second) <= order) out[static_cast<std::size_t>(power)][e] = c;
    }
  }
  return out;
}

}  // namespace octa
