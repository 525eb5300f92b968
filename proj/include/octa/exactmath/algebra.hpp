#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "octa/exactmath/determinant.hpp"
#include "octa/exactmath/mpoly.hpp"
#include "octa/exactmath/upoly.hpp"

namespace octa {

using Binding = std::variant<MPoly, Rational>;

/// Composes p with the given bindings. The result's variables are p's unbound
/// variables (in p's order) followed by any new variables from the bindings
/// (in order of first appearance).
inline MPoly substitute(const MPoly& p, const std::map<std::string, Binding>& bindings) {
  for (const auto& [name, b] : bindings) {
    if (!p.has_var(name)) throw std::invalid_argument("substitute: '" + name + "' is not a variable of p");
  }
  std::vector<std::string> out_vars;
  for (const auto& v : p.vars()) {
    if (!bindings.count(v)) out_vars.push_back(v);
  }
  // Bindings in p's variable order for a deterministic result list.
  for (const auto& v : p.vars()) {
    auto it = bindings.find(v);
    if (it == bindings.end()) continue;
    if (const auto* poly = std::get_if<MPoly>(&it->second)) {
      for (const auto& w : poly->vars()) {
        if (std::find(out_vars.begin(), out_vars.end(), w) == out_vars.end()) out_vars.push_back(w);
      }
    }
  }
  const std::size_t n = p.num_vars();
  std::vector<MPoly> images(n);
  std::vector<bool> bound(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = bindings.find(p.vars()[i]);
    if (it == bindings.end()) {
      images[i] = MPoly::variable(out_vars, p.vars()[i]);
    } else {
      bound[i] = true;
      if (const auto* poly = std::get_if<MPoly>(&it->second)) {
        images[i] = poly->is_constant() ? MPoly::constant(poly->constant_value(), out_vars) : poly->lift(out_vars);
      } else {
        images[i] = MPoly::constant(std::get<Rational>(it->second), out_vars);
      }
    }
  }
  std::vector<std::vector<MPoly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i].push_back(MPoly::constant(1, out_vars));
  MPoly result(out_vars);
  for (const auto& [e, c] : p.terms()) {
    MPoly term = MPoly::constant(c, out_vars);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      term = term * pw[static_cast<std::size_t>(e[i])];
    }
    result += term;
  }
  return result;
}

/// Sylvester matrix of p and q in `var`: deg q rows of p's coefficients on
/// top, then deg p rows of q's, leading coefficients first. Entries live in
/// Q[remaining variables].
inline Matrix<MPoly> sylvester_matrix(const MPoly& p, const MPoly& q, std::string_view var) {
  std::vector<std::string> vars = p.vars();
  if (p.vars() != q.vars()) throw std::invalid_argument("sylvester_matrix: variable-list mismatch");
  const int dp = p.degree(var), dq = q.degree(var);
  if (dp <= 0 || dq <= 0) throw std::invalid_argument("resultant needs positive degree in '" + std::string(var) + "'");
  std::vector<std::string> rest;
  for (const auto& v : vars) {
    if (v != var) rest.push_back(v);
  }
  auto drop = [&](const MPoly& c) { return c.lift(rest); };
  auto pc = p.coefficients_in(var);
  auto qc = q.coefficients_in(var);
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  Matrix<MPoly> s(n, n, MPoly(rest));
  for (int r = 0; r < dq; ++r) {
    for (int k = 0; k <= dp; ++k) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = drop(pc[static_cast<std::size_t>(dp - k)]);
  }
  for (int r = 0; r < dp; ++r) {
    for (int k = 0; k <= dq; ++k) s(static_cast<std::size_t>(dq + r), static_cast<std::size_t>(r + k)) = drop(qc[static_cast<std::size_t>(dq - k)]);
  }
  return s;
}

enum class DetStrategy { automatic, fraction_free, interpolation };

/// Res_var(p, q) as the Sylvester determinant (p's rows on top). The result is
/// a polynomial in the remaining variables.
inline MPoly resultant(const MPoly& p, const MPoly& q, std::string_view var,
                       DetStrategy strategy = DetStrategy::automatic) {
  Matrix<MPoly> s = sylvester_matrix(p, q, var);
  if (strategy == DetStrategy::automatic) {
    strategy = s.rows() >= 6 && s(0, 0).num_vars() > 0 ? DetStrategy::interpolation : DetStrategy::fraction_free;
  }
  if (strategy == DetStrategy::fraction_free) return det_fraction_free(s);
  return det_by_interpolation(s, row_degree_bounds(s));
}

/// Homogeneous components of p with respect to the listed variables; entry d
/// collects the terms of degree d in them.
inline std::vector<MPoly> homogeneous_components(const MPoly& p, const std::vector<std::string>& in) {
  std::vector<std::size_t> idx;
  for (const auto& v : in) idx.push_back(p.index_of(v));
  std::vector<MPoly> parts;
  for (const auto& [e, c] : p.terms()) {
    int d = 0;
    for (auto i : idx) d += e[i];
    while (static_cast<int>(parts.size()) <= d) parts.emplace_back(p.vars());
    parts[static_cast<std::size_t>(d)].add_term(e, c);
  }
  return parts;
}

/// p as a univariate polynomial; every other variable must be absent.
inline UPoly to_upoly(const MPoly& p, std::string_view var) {
  if (p.is_zero()) return {};
  std::size_t k = p.has_var(var) ? p.index_of(var) : p.num_vars();
  std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree(var), 0) + 1));
  for (const auto& [e, coef] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != k && e[i] != 0) throw std::invalid_argument("to_upoly: polynomial is not univariate");
    }
    c[static_cast<std::size_t>(k < e.size() ? e[k] : 0)] = coef;
  }
  return UPoly(std::move(c));
}

inline MPoly from_upoly(const UPoly& u, const std::vector<std::string>& vars, std::string_view var) {
  MPoly out(vars);
  std::size_t k = out.index_of(var);
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
    Exponents e(vars.size(), 0);
    e[k] = static_cast<int>(i);
    out.add_term(std::move(e), u.coeffs()[i]);
  }
  return out;
}

}  // namespace octa
