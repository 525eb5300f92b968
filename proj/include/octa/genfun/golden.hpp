#pragma once

#include <string>
#include <vector>

#include "octa/exactmath/parse.hpp"

namespace octa::golden {

inline const std::vector<std::string>& symbolic_vars() {
  static const std::vector<std::string> v{"x", "y", "z", "sigma", "tau"};
  return v;
}

/// The printed m = 2 denominator, alpha = 16 sigma (1 - sigma) tau (1 - tau).
inline MPoly denominator_2x2() {
  return parse_mpoly(
      "sigma (1-sigma) tau (1-tau) (x^2-y^2)^2 (x^2 y^2-1)^2 z^4"
      " - x^2 y^2 (x y-z^2)(y-x z^2)(x-y z^2)(1-x y z^2)",
      symbolic_vars());
}

/// The printed numerator of rho^(0,0) for m = 2.
inline MPoly numerator_2x2() {
  return parse_mpoly(
      "x y z ((-x^2 y^2 (1 - z^2) ( z (x (1 - x y z^2) + y (x y - z^2)) + x y (1 - z^4)))"
      " - x y (x - y) (1 - x y) z^2 (x (1 - x y z^2) + y (x y - z^2)) sigma"
      " + x^2 y^2 (x - y) (1 - x y) z (1 - z^4) tau"
      " + x y (x^2 - y^2) (1 - x^2 y^2) z^2 (1 - z^2) sigma tau"
      " - (x - y) (x^2 - y^2) (1 - x y) (1 - x^2 y^2) z^3 sigma tau (1 - tau))",
      symbolic_vars());
}

}  // namespace octa::golden
