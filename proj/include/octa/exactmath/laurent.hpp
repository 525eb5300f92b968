#pragma once

#include <map>
#include <utility>

#include "octa/exactmath/rational.hpp"

namespace octa {

/// Sparse Laurent polynomial in (x, y): exponent pair -> coefficient, zeros dropped.
using LaurentGrid = std::map<std::pair<int, int>, Rational>;

inline void grid_add(LaurentGrid& g, std::pair<int, int> e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = g.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) g.erase(it);
  }
}

inline LaurentGrid operator+(LaurentGrid a, const LaurentGrid& b) {
  for (const auto& [e, c] : b) grid_add(a, e, c);
  return a;
}

inline LaurentGrid operator*(const LaurentGrid& a, const LaurentGrid& b) {
  LaurentGrid out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) grid_add(out, {ea.first + eb.first, ea.second + eb.second}, ca * cb);
  }
  return out;
}

inline LaurentGrid scaled(LaurentGrid g, const Rational& s, std::pair<int, int> shift = {0, 0}) {
  LaurentGrid out;
  if (s == 0) return out;
  for (auto& [e, c] : g) out.emplace(std::pair{e.first + shift.first, e.second + shift.second}, c * s);
  return out;
}

}  // namespace octa
