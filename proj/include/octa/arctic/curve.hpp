#pragma once

#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "octa/arctic/blowup.hpp"
#include "octa/arctic/golden_data.hpp"
#include "octa/exactmath/algebra.hpp"
#include "octa/exactmath/gcd.hpp"
#include "octa/exactmath/parse.hpp"
#include "octa/exactmath/serialize.hpp"

namespace octa {

/// P(u, v), possibly with parameters after u and v. Content 1, positive
/// lex-leading coefficient, no monomial factor.
struct ArcticCurve {
  MPoly P;
  std::string provenance;      // "computed" or "golden(<name>)"
  MPoly raw_resultant;         // computed curves only
  std::vector<MPoly> stripped; // factors removed from the raw resultant

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["P"] = octa::to_json(P);
    j["provenance"] = provenance;
    j["total_degree"] = P.total_degree();
    if (!raw_resultant.is_zero()) {
      nlohmann::ordered_json s = nlohmann::ordered_json::array();
      for (const auto& f : stripped) s.push_back(f.to_string());
      j["stripped_factors"] = s;
    }
    return j;
  }
};

namespace detail {

inline MPoly canonical_curve(const MPoly& p) {
  if (p.is_zero()) return p;
  return unit_normal_form(p);
}

/// Convergents of x with denominators up to max_den.
inline std::vector<Rational> convergents(double x, long max_den) {
  std::vector<Rational> out;
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double f = x;
  for (int it = 0; it < 40; ++it) {
    const double a = std::floor(f);
    if (std::abs(a) > 1e15) break;
    Integer ai(static_cast<long>(a));
    Integer h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    Rational r(h2, k2);
    r.canonicalize();
    out.push_back(r);
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (f - a < 1e-12) break;
    f = 1.0 / (f - a);
  }
  return out;
}

/// Rational roots of a nonzero univariate polynomial, without multiplicity.
/// Small coefficients use the rational root test. Otherwise, real roots of the
/// squarefree part are bracketed in double precision and their continued
/// fraction convergents are checked exactly. That case only finds roots with
/// moderate height, which covers the line directions met in practice.
inline std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> out;
  if (p.degree() < 1) return out;
  std::vector<Rational> c = p.coeffs();
  std::size_t lo = 0;
  while (c[lo] == 0) ++lo;
  if (lo > 0) out.push_back(0);
  UPoly q(std::vector<Rational>(c.begin() + static_cast<long>(lo), c.end()));
  if (q.degree() < 1) return out;
  std::vector<Rational> dq;
  for (std::size_t i = 1; i < q.coeffs().size(); ++i) dq.push_back(q.coeffs()[i] * static_cast<long>(i));
  q = UPoly::divmod(q, UPoly::gcd(q, UPoly(dq))).first;
  c = q.coeffs();
  Integer l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer a0 = abs(Integer(c.front() * l)), an = abs(Integer(c.back() * l));
  const Integer limit("1000000000000", 10);
  std::vector<Rational> cand;
  if (a0 <= limit && an <= limit) {
    auto divisors = [](const Integer& n) {
      std::vector<Integer> d;
      for (Integer i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
          d.push_back(i);
          if (i * i != n) d.push_back(n / i);
        }
      }
      return d;
    };
    for (const auto& a : divisors(a0)) {
      for (const auto& b : divisors(an)) {
        for (int sgn : {1, -1}) {
          Rational r(a * sgn, b);
          r.canonicalize();
          cand.push_back(r);
        }
      }
    }
  } else {
    std::vector<double> d;
    const double scale = std::max(std::abs(c.back().get_d()), 1e-300);
    for (const auto& x : c) d.push_back(x.get_d() / scale);
    double bound = 1;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) bound = std::max(bound, 1 + std::abs(d[i]));
    bound = std::min(bound, 1e6);
    auto f = [&](double x) {
      double acc = 0;
      for (auto it = d.rbegin(); it != d.rend(); ++it) acc = acc * x + *it;
      return acc;
    };
    const int n = 200000;
    double x0 = -bound, f0 = f(x0);
    for (int i = 1; i <= n; ++i) {
      double x1 = -bound + 2 * bound * i / n, f1 = f(x1);
      if (f0 == 0 || f0 * f1 < 0) {
        double lo_x = x0, hi_x = x1;
        for (int it = 0; it < 200 && f0 != 0; ++it) {
          double mid = 0.5 * (lo_x + hi_x);
          if ((f(lo_x) < 0) == (f(mid) < 0)) {
            lo_x = mid;
          } else {
            hi_x = mid;
          }
        }
        for (const auto& r : convergents(f0 == 0 ? x0 : 0.5 * (lo_x + hi_x), 1000000)) cand.push_back(r);
      }
      x0 = x1, f0 = f1;
    }
  }
  for (const auto& r : cand) {
    if (std::find(out.begin(), out.end(), r) != out.end()) continue;
    if (q.evaluate(r) == 0) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> parameters_of_curve(const MPoly& p) {
  std::vector<std::string> out;
  for (const auto& v : p.vars()) {
    if (v != "u" && v != "v") out.push_back(v);
  }
  return out;
}

/// gcd of the coefficients of p as a polynomial in `main`.
inline MPoly content_in(const MPoly& p, const std::vector<std::string>& main) {
  std::vector<std::size_t> idx;
  for (const auto& v : main) idx.push_back(p.index_of(v));
  std::map<Exponents, MPoly> coeffs;
  for (const auto& [e, c] : p.terms()) {
    Exponents key, rest = e;
    for (auto i : idx) {
      key.push_back(e[i]);
      rest[i] = 0;
    }
    auto [it, _] = coeffs.try_emplace(key, MPoly(p.vars()));
    it->second.add_term(rest, c);
  }
  MPoly g(p.vars());
  for (const auto& [k, c] : coeffs) {
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

/// Divides out factors that involve only the parameters (variables other than u, v).
inline MPoly strip_parameter_content(const MPoly& p, std::vector<MPoly>& removed) {
  if (parameters_of_curve(p).empty() || p.is_zero()) return p;
  MPoly g = content_in(p, {"u", "v"});
  if (g.is_constant()) return p;
  removed.push_back(g.trimmed());
  return *divide_exact(p, g);
}

/// Rational directions u - r v (and v itself) dividing the top homogeneous
/// component; every line component a u + b v = c has one of them.
inline std::vector<std::pair<Rational, bool>> line_directions(const MPoly& p) {
  auto parts = homogeneous_components(p, std::vector<std::string>{"u", "v"});
  MPoly top = parts.back();
  const auto params = parameters_of_curve(p);
  std::vector<std::pair<Rational, bool>> out;  // (r, false): u - r v; (0, true): v
  UPoly g;
  bool v_divides = true;
  for (int probe = 0; probe < 2; ++probe) {
    MPoly s = top;
    for (std::size_t k = 0; k < params.size(); ++k) {
      s = s.partial_evaluate(params[k], make_rational(7 + 5 * static_cast<long>(k) + 3 * probe, 11 + probe));
    }
    v_divides = v_divides && s.partial_evaluate("v", 0).is_zero();
    UPoly us = to_upoly(s.partial_evaluate("v", 1).trimmed().lift(std::vector<std::string>{"u"}), "u");
    g = probe == 0 ? us.monic() : UPoly::gcd(g, us);
  }
  for (const auto& r : rational_roots(g)) out.push_back({r, false});
  if (v_divides) out.push_back({0, true});
  return out;
}

/// Divides out every component that is a polynomial in one linear form
/// u - r v (or v) with rational r, that is, unions of parallel lines. Lines of
/// irrational slope are kept. The monomial part is removed as well.
inline MPoly strip_line_components(const MPoly& p, std::vector<MPoly>& removed) {
  MPoly q = p;
  Exponents m = q.monomial_gcd();
  if (std::any_of(m.begin(), m.end(), [](int e) { return e != 0; })) {
    removed.push_back(MPoly::monomial(q.vars(), m));
    q = q.shifted_down(m);
  }
  if (q.total_degree() == 0) return q;
  const auto vars = q.vars();
  const MPoly u = MPoly::variable(vars, "u"), v = MPoly::variable(vars, "v");
  for (const auto& [r, is_v] : line_directions(q)) {
    // coordinates l = u - r v, w = v (or l = v, w = u)
    std::vector<std::string> lw{"l", "w"};
    for (const auto& s : parameters_of_curve(q)) lw.push_back(s);
    const MPoly l = MPoly::variable(lw, "l"), w = MPoly::variable(lw, "w");
    MPoly rotated = is_v ? substitute(q, {{"u", w}, {"v", l}}) : substitute(q, {{"u", l + w * r}, {"v", w}});
    MPoly c = content_in(rotated.lift(lw), {"w"});
    if (c.degree("l") < 1) continue;
    MPoly back = substitute(c, {{"l", is_v ? v : u + v * (-r)}, {"w", u}}).lift(vars);
    auto d = divide_exact(q, back);
    if (!d) throw std::logic_error("line component does not divide");
    removed.push_back(back.trimmed());
    q = *d;
  }
  return q;
}

}  // namespace detail

/// Discriminant locus of the leading form: Res_x(H(x,1), dH/dx(x,1)) divided by
/// the x-leading coefficient of H(x,1), with parameter-only factors and line
/// components of rational slope removed. All removed factors are kept in
/// `stripped`, and `raw_resultant` holds the undivided resultant.
inline ArcticCurve dual_curve(const LeadingForm& h) {
  MPoly hy = h.H.partial_evaluate("y", 1);
  if (hy.is_zero()) throw std::domain_error("leading form vanishes at y = 1");
  if (hy.degree("x") < 2) throw std::domain_error("leading form has degree < 2 in x");
  MPoly res = resultant(hy, hy.derivative("x"), "x");
  std::vector<std::string> out{"u", "v"};
  for (const auto& v : h.H.vars()) {
    if (v != "x" && v != "y" && v != "u" && v != "v") out.push_back(v);
  }
  ArcticCurve c;
  c.provenance = "computed";
  c.raw_resultant = res.lift(out);
  if (c.raw_resultant.is_zero()) {
    throw std::domain_error("discriminant vanishes identically: the leading form has a repeated factor");
  }
  MPoly lc = hy.coefficient_in("x", hy.degree("x")).lift(out);
  auto disc = divide_exact(c.raw_resultant, lc);
  if (!disc) throw std::logic_error("leading coefficient does not divide the resultant");
  c.stripped.push_back(lc);
  MPoly p = detail::strip_parameter_content(*disc, c.stripped);
  p = detail::strip_line_components(p, c.stripped);
  c.P = detail::canonical_curve(p);
  return c;
}

/// Named curve data. `fortress` takes a rational alpha, or std::nullopt for
/// the symbolic family in (u, v, alpha).
inline ArcticCurve golden_curve(const std::string& name, std::optional<Rational> alpha = std::nullopt) {
  const std::vector<std::string> uv{"u", "v"};
  ArcticCurve c;
  c.provenance = "golden(" + name + ")";
  if (name == "arctic_circle") {
    c.P = parse_mpoly("2 (u^2 + v^2) - 1", uv);
  } else if (name == "fortress") {
    const std::vector<std::string> uva{"u", "v", "alpha"};
    MPoly p = parse_mpoly(
        "(1-alpha)^3 + 16 alpha^2 (u^8+v^8) + 8 (4-5 alpha) alpha (u^6+v^6)"
        " + 32 (alpha^2 + 2 (2-alpha)^2) u^4 v^4"
        " + ((4-alpha)^2 - 24 alpha) (1-alpha) (u^4+v^4) + 8 (6 alpha^2 - (4-alpha)^2) u^2 v^2 (u^2+v^2)"
        " + 2 (48 - (4-alpha)^2) (1-alpha) u^2 v^2 - 2 (1-alpha)^2 (4-alpha) (u^2+v^2)"
        " + 64 (2-alpha) alpha u^2 v^2 (u^4+v^4)",
        uva);
    c.P = alpha ? p.partial_evaluate("alpha", *alpha).trimmed().lift(uv) : p;
  } else if (name == "appendix_m3") {
    c.P = parse_mpoly(golden::kAppendixM3, uv);
  } else if (name == "appendix_m4") {
    c.P = parse_mpoly(golden::kAppendixM4, uv);
  } else {
    throw std::invalid_argument("unknown golden curve '" + name + "'");
  }
  c.P = detail::canonical_curve(c.P);
  return c;
}

/// Result of comparing a computed curve with a reference.
struct CurveComparison {
  bool unit_equivalent = false;
  bool computed_divides_golden = false;
  bool golden_divides_computed = false;
  std::optional<Rational> unit;          // golden = unit * computed, both as given
  MPoly quotient;                        // the exact quotient when one divides the other
  std::vector<std::string> quotient_samples;  // quotient at 10 seeded rational points

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["unit_equivalent"] = unit_equivalent;
    j["computed_divides_golden"] = computed_divides_golden;
    j["golden_divides_computed"] = golden_divides_computed;
    if (unit) {
      j["unit"] = to_string(*unit);
    } else {
      j["unit"] = nullptr;
    }
    j["quotient"] = quotient.to_string();
    j["quotient_samples"] = quotient_samples;
    return j;
  }
};

inline CurveComparison compare_curves(const MPoly& computed, const MPoly& golden, unsigned seed = 1) {
  CurveComparison r;
  std::vector<std::string> all = computed.vars();
  for (const auto& v : golden.vars()) {
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  }
  MPoly a = computed.lift(all), b = golden.lift(all);
  r.unit_equivalent = unit_equivalent(a, b);
  r.unit = rational_ratio(b, a);
  if (auto q = divide_exact(b, a)) {
    r.computed_divides_golden = true;
    r.quotient = *q;
  }
  if (auto q = divide_exact(a, b)) {
    r.golden_divides_computed = true;
    r.quotient = *q;
  }
  if (r.computed_divides_golden || r.golden_divides_computed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    for (int i = 0; i < 10; ++i) {
      std::vector<Rational> pt;
      for (std::size_t k = 0; k < all.size(); ++k) pt.push_back(make_rational(num(rng), den(rng)));
      r.quotient_samples.push_back(to_string(r.quotient.evaluate(pt)));
    }
  }
  return r;
}

}  // namespace octa
