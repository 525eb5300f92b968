#pragma once

#include <string>

#include "octa/arctic/blowup.hpp"
#include "octa/arctic/curve.hpp"
#include "octa/exactmath/algebra.hpp"
#include "octa/genfun/system.hpp"

namespace octa {

/// denominator -> blow-up -> discriminant for a numeric spec.
/// Uniform weights of any period are the period-1 weights.
inline ArcticCurve arctic_curve(const SystemSpec& spec) {
  if (spec.is_uniform() && spec.m > 1) return arctic_curve(SystemSpec::uniform());
  return dual_curve(blowup_leading(denominator(spec)));
}

/// The symbolic m = 2 denominator rewritten in alpha = 16 sigma (1-sigma) tau (1-tau).
/// It is affine in alpha: D = D|_{alpha=0} + alpha (D|_{alpha=1} - D|_{alpha=0}),
/// with alpha = 0 at sigma = 0 and alpha = 1 at sigma = tau = 1/2. The rewrite is
/// checked by substituting alpha back.
inline MPoly fortress_denominator() {
  MPoly d = denominator(SystemSpec::symbolic_two_by_two());
  const std::vector<std::string> xyz{"x", "y", "z"}, xyza{"x", "y", "z", "alpha"};
  auto at = [&](const Rational& s, const Rational& t) {
    return d.partial_evaluate("sigma", s).partial_evaluate("tau", t).trimmed().lift(xyza);
  };
  MPoly d0 = at(0, make_rational(1, 2)), d1 = at(make_rational(1, 2), make_rational(1, 2));
  MPoly da = d0 + MPoly::variable(xyza, "alpha") * (d1 - d0);
  const std::vector<std::string> sym = d.vars();
  MPoly s = MPoly::variable(sym, "sigma"), t = MPoly::variable(sym, "tau");
  MPoly one = MPoly::constant(1, sym);
  MPoly alpha = s * (one - s) * t * (one - t) * Rational(16);
  if (substitute(da, {{"alpha", alpha}}).lift(sym) != d) {
    throw std::logic_error("m = 2 denominator does not depend on sigma, tau through alpha alone");
  }
  return da;
}

/// The fortress curve computed symbolically in alpha, as P(u, v, alpha).
inline ArcticCurve fortress_curve() { return dual_curve(blowup_leading(fortress_denominator())); }

/// The symbolic fortress curve specialized at alpha. Degenerate values such as
/// alpha = 1, where the numeric discriminant vanishes, are covered this way.
inline ArcticCurve fortress_curve(const Rational& alpha) {
  ArcticCurve c = fortress_curve();
  c.P = detail::canonical_curve(c.P.partial_evaluate("alpha", alpha).trimmed().lift(std::vector<std::string>{"u", "v"}));
  c.provenance = "computed(alpha=" + to_string(alpha) + ")";
  return c;
}

}  // namespace octa
