#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "octa/exactmath/mpoly.hpp"
#include "octa/exactmath/upoly.hpp"

namespace octa {

namespace detail {

/// Exponent vector with entry k cleared.
inline Exponents without(const Exponents& e, std::size_t k) {
  Exponents r = e;
  r[k] = 0;
  return r;
}

/// p as a polynomial in the variables other than k, with coefficients in Q[var_k].
inline std::map<Exponents, UPoly> split_main(const MPoly& p, std::size_t k) {
  std::map<Exponents, std::vector<Rational>> dense;
  for (const auto& [e, c] : p.terms()) {
    auto& v = dense[without(e, k)];
    if (static_cast<int>(v.size()) <= e[k]) v.resize(static_cast<std::size_t>(e[k] + 1));
    v[static_cast<std::size_t>(e[k])] = c;
  }
  std::map<Exponents, UPoly> out;
  for (auto& [e, v] : dense) out.emplace(e, UPoly(std::move(v)));
  return out;
}

inline MPoly join_main(const std::map<Exponents, UPoly>& parts, std::size_t k, const std::vector<std::string>& vars) {
  MPoly out(vars);
  for (const auto& [e, u] : parts) {
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
      if (u.coeffs()[i] == 0) continue;
      Exponents f = e;
      f[k] = static_cast<int>(i);
      out.add_term(std::move(f), u.coeffs()[i]);
    }
  }
  return out;
}

inline MPoly times_upoly(const MPoly& p, const UPoly& u, std::size_t k) {
  auto parts = split_main(p, k);
  for (auto& [e, c] : parts) c = c * u;
  return join_main(parts, k, p.vars());
}

inline std::vector<std::size_t> occurring(const MPoly& a, const MPoly& b) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    bool used = false;
    for (const MPoly* p : {&a, &b}) {
      for (const auto& [e, c] : p->terms()) used = used || e[i] != 0;
    }
    if (used) out.push_back(i);
  }
  return out;
}

inline MPoly gcd_rec(const MPoly& a, const MPoly& b);

/// Brown-style dense gcd: evaluate variable k, recurse, interpolate.
inline MPoly gcd_eval(const MPoly& a, const MPoly& b, std::size_t k) {
  const auto& vars = a.vars();
  auto sa = split_main(a, k), sb = split_main(b, k);
  // content in Q[var_k]
  UPoly ca, cb;
  for (const auto& [e, u] : sa) ca = UPoly::gcd(ca, u);
  for (const auto& [e, u] : sb) cb = UPoly::gcd(cb, u);
  const UPoly c = UPoly::gcd(ca, cb);
  for (auto& [e, u] : sa) u = UPoly::divmod(u, ca).first;
  for (auto& [e, u] : sb) u = UPoly::divmod(u, cb).first;
  const MPoly pa = join_main(sa, k, vars), pb = join_main(sb, k, vars);
  const UPoly lca = sa.rbegin()->second, lcb = sb.rbegin()->second;
  const UPoly gamma = UPoly::gcd(lca, lcb);
  const int bound = gamma.degree() + std::min(pa.degree(vars[k]), pb.degree(vars[k]));

  std::optional<Exponents> lead;
  std::vector<Rational> nodes;
  std::vector<MPoly> images;
  for (long step = 1; step < 100000; ++step) {
    const Rational x = make_rational(step % 2 ? (step + 1) / 2 : -(step / 2), 1) + make_rational(1, 7);
    if (lca.evaluate(x) == 0 || lcb.evaluate(x) == 0) continue;
    MPoly g = gcd_rec(pa.partial_evaluate(vars[k], x), pb.partial_evaluate(vars[k], x));
    const Exponents lm = g.leading_term().first;
    if (lead && lm > *lead) continue;  // unlucky point
    if (!lead || lm < *lead) {
      lead = lm;
      nodes.clear();
      images.clear();
    }
    nodes.push_back(x);
    images.push_back(g * (gamma.evaluate(x) / g.leading_term().second));
    if (static_cast<int>(nodes.size()) <= bound) continue;

    std::map<Exponents, std::vector<Rational>> values;
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (const auto& [e, cf] : images[i].terms()) {
        auto& v = values[e];
        v.resize(images.size());
        v[i] = cf;
      }
    }
    std::map<Exponents, UPoly> parts;
    for (auto& [e, v] : values) {
      v.resize(images.size());
      parts.emplace(e, UPoly(interpolate_1d(nodes, v)));
    }
    UPoly cont;
    for (const auto& [e, u] : parts) cont = UPoly::gcd(cont, u);
    for (auto& [e, u] : parts) u = UPoly::divmod(u, cont).first;
    MPoly h = join_main(parts, k, vars);
    if (divide_exact(pa, h) && divide_exact(pb, h)) return times_upoly(h, c, k);
  }
  throw std::runtime_error("polynomial gcd: no lucky evaluation points");
}

inline MPoly gcd_rec(const MPoly& a, const MPoly& b) {
  const auto& vars = a.vars();
  if (a.is_zero()) return b.is_zero() ? b : b.primitive();
  if (b.is_zero()) return a.primitive();
  Exponents ma = a.monomial_gcd(), mb = b.monomial_gcd();
  Exponents m(ma.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(ma[i], mb[i]);
  MPoly ra = a.shifted_down(ma), rb = b.shifted_down(mb);
  const MPoly mono = MPoly::monomial(vars, m);
  if (ra.is_constant() || rb.is_constant()) return mono;
  auto occ = occurring(ra, rb);
  if (occ.size() == 1) {
    const std::size_t k = occ[0];
    UPoly g = UPoly::gcd(split_main(ra, k).begin()->second, split_main(rb, k).begin()->second);
    return times_upoly(mono, g, k);
  }
  // the variable of lowest degree is cheapest to interpolate
  std::size_t k = occ[0];
  for (auto i : occ) {
    if (std::max(ra.degree(vars[i]), rb.degree(vars[i])) < std::max(ra.degree(vars[k]), rb.degree(vars[k]))) k = i;
  }
  if (ra.degree(vars[k]) == 0 || rb.degree(vars[k]) == 0) {
    // one side is free of var_k: the gcd divides every var_k-coefficient of the other
    const MPoly& free = ra.degree(vars[k]) == 0 ? ra : rb;
    const MPoly& other = ra.degree(vars[k]) == 0 ? rb : ra;
    MPoly g = free;
    for (const auto& c : other.coefficients_in(vars[k])) {
      if (!c.is_zero()) g = gcd_rec(g, c);
      if (g.is_constant()) break;
    }
    return mono * g.primitive();
  }
  return mono * gcd_eval(ra, rb, k).primitive();
}

}  // namespace detail

/// Greatest common divisor over Q, normalized with content 1 and positive
/// leading coefficient. Both polynomials must share one variable list.
inline MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("gcd: variable-list mismatch");
  MPoly g = detail::gcd_rec(a, b);
  return g.is_zero() ? g : g.primitive();
}

}  // namespace octa
