#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "octa/exactmath/determinant.hpp"
#include "octa/exactmath/ratfunc.hpp"
#include "octa/exactmath/serialize.hpp"
#include "octa/tsystem/closed_form.hpp"

namespace octa {

/// Convex weights of the density system, lambda_i = L_{i,-i,0} and
/// mu_i = L_{i+2,-i+1,1}. For 2x2 data sigma = L_{1,0,1} = mu_1 and
/// tau = R_{0,0,0} = lambda_1; symbolic mode (m = 2 only) keeps sigma and tau
/// as indeterminates.
struct SystemSpec {
  int m = 1;
  std::vector<Rational> lambda, mu;
  bool symbolic = false;

  static SystemSpec uniform() { return weights({Rational(1, 2)}, {Rational(1, 2)}); }

  /// Weights in [0, 1]; interior families must satisfy prod (1/w - 1) = 1.
  static SystemSpec weights(std::vector<Rational> lambda, std::vector<Rational> mu) {
    SystemSpec s;
    s.m = static_cast<int>(lambda.size());
    s.lambda = std::move(lambda);
    s.mu = std::move(mu);
    s.validate();
    return s;
  }

  static SystemSpec two_by_two(const Rational& sigma, const Rational& tau) {
    return weights({1 - tau, tau}, {1 - sigma, sigma});
  }

  static SystemSpec symbolic_two_by_two() {
    SystemSpec s;
    s.m = 2;
    s.symbolic = true;
    return s;
  }

  static SystemSpec toroidal(const ToroidalData& data) {
    ToroidalDerived d(data);
    return weights(d.lambda, d.mu);
  }

  void validate() const {
    if (symbolic) {
      if (m != 2) throw std::invalid_argument("symbolic weights are only supported for m = 2");
      return;
    }
    if (m < 1 || lambda.size() != static_cast<std::size_t>(m) || mu.size() != lambda.size()) {
      throw std::invalid_argument("lambda and mu need m >= 1 entries each");
    }
    bool interior = true;
    for (const auto* seq : {&lambda, &mu}) {
      for (const auto& w : *seq) {
        if (w < 0 || w > 1) throw std::invalid_argument("weights must lie in [0, 1]");
        if (w == 0 || w == 1) interior = false;
      }
    }
    if (interior && (convexity_product(lambda) != 1 || convexity_product(mu) != 1)) {
      throw std::invalid_argument("weights violate prod(1/w - 1) = 1");
    }
  }

  bool is_uniform() const {
    if (symbolic) return false;
    auto half = [](const Rational& w) { return w == Rational(1, 2); };
    return std::all_of(lambda.begin(), lambda.end(), half) && std::all_of(mu.begin(), mu.end(), half);
  }

  std::vector<std::string> vars() const {
    if (symbolic) return {"x", "y", "z", "sigma", "tau"};
    return {"x", "y", "z"};
  }

  MPoly lambda_poly(int i) const { return weight_poly(lambda, "tau", i); }
  MPoly mu_poly(int i) const { return weight_poly(mu, "sigma", i); }

  /// Numeric spec obtained by fixing sigma and tau.
  SystemSpec specialize(const Rational& sigma, const Rational& tau) const {
    if (!symbolic) throw std::logic_error("specialize needs a symbolic spec");
    return two_by_two(sigma, tau);
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["symbolic"] = symbolic;
    auto seq = [](const std::vector<Rational>& v) {
      std::vector<std::string> out;
      for (const auto& r : v) out.push_back(to_fraction_string(r));
      return out;
    };
    j["lambda"] = seq(lambda);
    j["mu"] = seq(mu);
    return j;
  }

 private:
  MPoly weight_poly(const std::vector<Rational>& w, const char* name, int i) const {
    const int k = static_cast<int>(floor_mod(i, m));
    if (symbolic) {
      MPoly p = MPoly::variable(vars(), name);
      return k == 1 ? p : MPoly::constant(1, vars()) - p;
    }
    return MPoly::constant(w[static_cast<std::size_t>(k)], vars());
  }
};

/// Linear system A X = b for the density generating functions, with every
/// row multiplied by xyz so that all entries are polynomials.
struct SystemMatrix {
  Matrix<MPoly> A;
  std::vector<MPoly> rhs;
  std::vector<std::string> labels;
  std::vector<std::string> vars;

  std::size_t size() const { return A.rows(); }

  /// Unit right-hand side xyz at `row`.
  std::vector<MPoly> unit_rhs(std::size_t row) const {
    std::vector<MPoly> b(size(), MPoly(vars));
    b.at(row) = MPoly::monomial(vars, xyz_exponents());
    return b;
  }

  Exponents xyz_exponents() const {
    Exponents e(vars.size(), 0);
    e[0] = e[1] = e[2] = 1;
    return e;
  }
};

namespace detail {

/// Cleared Laurent monomials: xyz times z^-1, z, x^-1, x, y^-1, y.
struct ClearedMonomials {
  MPoly zinv, z, xinv, x, yinv, y, xyz;

  explicit ClearedMonomials(const std::vector<std::string>& vars) {
    auto mono = [&](int a, int b, int c) {
      Exponents e(vars.size(), 0);
      e[0] = a;
      e[1] = b;
      e[2] = c;
      return MPoly::monomial(vars, e);
    };
    zinv = mono(1, 1, 0);
    z = mono(1, 1, 2);
    xinv = mono(0, 1, 1);
    x = mono(2, 1, 1);
    yinv = mono(1, 0, 1);
    y = mono(1, 2, 1);
    xyz = mono(1, 1, 1);
  }
};

inline SystemMatrix empty_system(const SystemSpec& spec, std::size_t n, std::vector<std::string> labels) {
  SystemMatrix s;
  s.vars = spec.vars();
  s.A = Matrix<MPoly>(n, n, MPoly(s.vars));
  s.labels = std::move(labels);
  return s;
}

}  // namespace detail

/// The 4m x 4m system in the unknowns (alpha_0..alpha_{m-1}, beta_., gamma_.,
/// delta_.), indices mod m, unit right-hand side at the gamma_0 row. The
/// alpha and beta rows come from the k = 1 layer and carry mu, the gamma and
/// delta rows come from the k = 0 layer and carry lambda:
///   z^-1 alpha_i + z beta_i - m_i (x^-1 gamma_{i+1} + x delta_i) - (1-m_i)(y^-1 gamma_i + y delta_{i+1}) = 0
///   z^-1 beta_i + z alpha_i - (1-m_i)(x^-1 delta_{i+1} + x gamma_i) - m_i (y^-1 delta_i + y gamma_{i+1}) = 0
///   z^-1 gamma_i + z delta_i - l_i (x^-1 alpha_i + x beta_{i-1}) - (1-l_i)(y^-1 alpha_{i-1} + y beta_i) = [i = 0]
///   z^-1 delta_i + z gamma_i - (1-l_i)(x^-1 beta_i + x alpha_{i-1}) - l_i (y^-1 beta_{i-1} + y alpha_i) = 0
inline SystemMatrix build_system(const SystemSpec& spec) {
  spec.validate();
  const int m = spec.m;
  std::vector<std::string> labels;
  for (const char* name : {"alpha", "beta", "gamma", "delta"}) {
    for (int i = 0; i < m; ++i) labels.push_back(std::string(name) + "_" + std::to_string(i));
  }
  SystemMatrix s = detail::empty_system(spec, static_cast<std::size_t>(4 * m), std::move(labels));
  detail::ClearedMonomials c(s.vars);
  const MPoly one = MPoly::constant(1, s.vars);
  auto idx = [m](int block, int i) { return static_cast<std::size_t>(block * m + floor_mod(i, m)); };
  enum { A = 0, B = 1, G = 2, D = 3 };
  for (int i = 0; i < m; ++i) {
    const MPoly wa = spec.mu_poly(i), wac = one - wa;
    const MPoly wg = spec.lambda_poly(i), wgc = one - wg;
    auto add = [&](int row_block, int col_block, int col_i, const MPoly& v) {
      s.A(idx(row_block, i), idx(col_block, col_i)) += v;
    };
    add(A, A, i, c.zinv);
    add(A, B, i, c.z);
    add(A, G, i + 1, -(wa * c.xinv));
    add(A, D, i, -(wa * c.x));
    add(A, G, i, -(wac * c.yinv));
    add(A, D, i + 1, -(wac * c.y));

    add(B, B, i, c.zinv);
    add(B, A, i, c.z);
    add(B, D, i + 1, -(wac * c.xinv));
    add(B, G, i, -(wac * c.x));
    add(B, D, i, -(wa * c.yinv));
    add(B, G, i + 1, -(wa * c.y));

    add(G, G, i, c.zinv);
    add(G, D, i, c.z);
    add(G, A, i, -(wg * c.xinv));
    add(G, B, i - 1, -(wg * c.x));
    add(G, A, i - 1, -(wgc * c.yinv));
    add(G, B, i, -(wgc * c.y));

    add(D, D, i, c.zinv);
    add(D, G, i, c.z);
    add(D, B, i, -(wgc * c.xinv));
    add(D, A, i - 1, -(wgc * c.x));
    add(D, B, i - 1, -(wg * c.yinv));
    add(D, A, i, -(wg * c.y));
  }
  s.rhs = s.unit_rhs(idx(G, 0));
  return s;
}

/// m = 2 system in the sums alpha = alpha_0 + beta_1, beta = beta_0 + alpha_1,
/// gamma = gamma_0 + delta_1, delta = delta_0 + gamma_1:
///   z^-1 alpha + z beta - m_0 (x^-1 + x) delta - m_1 (y^-1 + y) gamma = 0
///   z^-1 beta + z alpha - m_1 (x^-1 + x) gamma - m_0 (y^-1 + y) delta = 0
///   z^-1 gamma + z delta - l_0 (x^-1 + x) alpha - l_1 (y^-1 + y) beta = 1
///   z^-1 delta + z gamma - l_1 (x^-1 + x) beta - l_0 (y^-1 + y) alpha = 0
inline SystemMatrix build_reduced_system(const SystemSpec& spec) {
  spec.validate();
  if (spec.m != 2) throw std::invalid_argument("the reduced system needs m = 2");
  SystemMatrix s = detail::empty_system(spec, 4, {"alpha", "beta", "gamma", "delta"});
  detail::ClearedMonomials c(s.vars);
  const MPoly xs = c.xinv + c.x, ys = c.yinv + c.y;
  const MPoly m0 = spec.mu_poly(0), m1 = spec.mu_poly(1), l0 = spec.lambda_poly(0), l1 = spec.lambda_poly(1);
  enum { A = 0, B = 1, G = 2, D = 3 };
  auto set = [&](int r, int col, const MPoly& v) { s.A(static_cast<std::size_t>(r), static_cast<std::size_t>(col)) = v; };
  set(A, A, c.zinv), set(A, B, c.z), set(A, D, -(m0 * xs)), set(A, G, -(m1 * ys));
  set(B, B, c.zinv), set(B, A, c.z), set(B, G, -(m1 * xs)), set(B, D, -(m0 * ys));
  set(G, G, c.zinv), set(G, D, c.z), set(G, A, -(l0 * xs)), set(G, B, -(l1 * ys));
  set(D, D, c.zinv), set(D, G, c.z), set(D, B, -(l1 * xs)), set(D, A, -(l0 * ys));
  s.rhs = s.unit_rhs(G);
  return s;
}

/// The 2x2-periodic system written directly in the unknowns
/// (rho^(0,0,1), rho^(0,1,0), rho^(1,0,0), rho^(1,1,1)):
///   [ 1/z, (x^2+1)(tau-1)/x, -(y^2+1)tau/y, z ]
///   [ z, (y^2+1)(tau-1)/y, -(x^2+1)tau/x, 1/z ]
///   [ -(y^2+1)sigma/y, 1/z, z, (x^2+1)(sigma-1)/x ]
///   [ -(x^2+1)sigma/x, z, 1/z, (y^2+1)(sigma-1)/y ]
/// with right-hand side (1, 0, 0, 0).
inline SystemMatrix build_direct_2x2_system(const SystemSpec& spec) {
  spec.validate();
  if (spec.m != 2) throw std::invalid_argument("the 2x2 system needs m = 2");
  SystemMatrix s = detail::empty_system(spec, 4, {"rho_001", "rho_010", "rho_100", "rho_111"});
  detail::ClearedMonomials c(s.vars);
  const MPoly one = MPoly::constant(1, s.vars);
  const MPoly sigma = spec.mu_poly(1), tau = spec.lambda_poly(1);
  const MPoly xs = c.xinv + c.x, ys = c.yinv + c.y;  // xyz (x^2+1)/x and xyz (y^2+1)/y
  s.A(0, 0) = c.zinv, s.A(0, 1) = (tau - one) * xs, s.A(0, 2) = -(tau * ys), s.A(0, 3) = c.z;
  s.A(1, 0) = c.z, s.A(1, 1) = (tau - one) * ys, s.A(1, 2) = -(tau * xs), s.A(1, 3) = c.zinv;
  s.A(2, 0) = -(sigma * ys), s.A(2, 1) = c.zinv, s.A(2, 2) = c.z, s.A(2, 3) = (sigma - one) * xs;
  s.A(3, 0) = -(sigma * xs), s.A(3, 1) = c.z, s.A(3, 2) = c.zinv, s.A(3, 3) = (sigma - one) * ys;
  s.rhs = s.unit_rhs(0);
  return s;
}

/// Scalar equation for constant weights 1/2, in the total density rho:
///   (z^-1 + z - (x^-1 + x + y^-1 + y) / 2) rho = 1
inline SystemMatrix build_scalar_system(const SystemSpec& spec) {
  spec.validate();
  if (!spec.is_uniform()) throw std::invalid_argument("the scalar system needs all weights equal to 1/2");
  SystemMatrix s = detail::empty_system(spec, 1, {"rho"});
  detail::ClearedMonomials c(s.vars);
  s.A(0, 0) = c.zinv + c.z - (c.xinv + c.x + c.yinv + c.y) * make_rational(1, 2);
  s.rhs = s.unit_rhs(0);
  return s;
}

/// The system whose determinant governs the singularities: the scalar
/// equation for uniform m = 1, the reduced system for m = 2 and the full
/// one otherwise.
inline SystemMatrix working_system(const SystemSpec& spec) {
  if (spec.m == 1 && spec.is_uniform()) return build_scalar_system(spec);
  return spec.m == 2 ? build_reduced_system(spec) : build_system(spec);
}

/// Exact determinant of a system matrix: fraction-free for size <= 8 or
/// symbolic entries, evaluation-interpolation otherwise.
inline MPoly system_determinant(const SystemMatrix& s) {
  if (s.size() <= 8 || s.vars.size() > 3) return det_fraction_free(s.A);
  return det_by_interpolation(s.A, row_degree_bounds(s.A));
}

/// Canonical denominator: monomial factor removed, content 1, positive
/// lex-leading coefficient.
inline MPoly denominator(const SystemSpec& spec) { return unit_normal_form(system_determinant(working_system(spec))); }

/// Cramer solution X_u = N_u / det with the total N = sum N_u.
struct GenfunSolution {
  SystemMatrix system;
  std::size_t source_row = 0;
  MPoly det;
  std::vector<MPoly> numerators;
  MPoly total_numerator;

  RatFunc component(std::size_t u) const { return RatFunc(numerators.at(u), det); }
  RatFunc total() const { return RatFunc(total_numerator, det); }

  /// A N - det b, entrywise; zero for a correct solution.
  std::vector<MPoly> residual() const {
    std::vector<MPoly> out(system.size(), MPoly(system.vars));
    const MPoly b = MPoly::monomial(system.vars, system.xyz_exponents());
    for (std::size_t r = 0; r < system.size(); ++r) {
      MPoly acc(system.vars);
      for (std::size_t c = 0; c < system.size(); ++c) acc += system.A(r, c) * numerators[c];
      if (r == source_row) acc -= det * b;
      out[r] = acc;
    }
    return out;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["determinant"] = octa::to_json(det);
    nlohmann::ordered_json comps = nlohmann::ordered_json::object();
    for (std::size_t u = 0; u < numerators.size(); ++u) comps[system.labels[u]] = octa::to_json(numerators[u]);
    j["numerators"] = std::move(comps);
    j["source_row"] = source_row;
    j["total_numerator"] = octa::to_json(total_numerator);
    return j;
  }
};

namespace detail {

inline Matrix<MPoly> replace_column(Matrix<MPoly> a, std::size_t col, const std::vector<MPoly>& b) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, col) = b[r];
  return a;
}

}  // namespace detail

/// Solves a system with unit right-hand side at `source_row`.
inline GenfunSolution solve_system(SystemMatrix s, std::size_t source_row) {
  if (source_row >= s.size()) throw std::out_of_range("source row outside the system");
  s.rhs = s.unit_rhs(source_row);
  GenfunSolution sol;
  sol.source_row = source_row;
  const std::size_t n = s.size();
  if (n <= 8 || s.vars.size() > 3) {
    sol.det = det_fraction_free(s.A);
    for (std::size_t u = 0; u < n; ++u) sol.numerators.push_back(det_fraction_free(detail::replace_column(s.A, u, s.rhs)));
  } else {
    // One elimination per grid point yields det and det * x_u for every u.
    const Matrix<MPoly> a = unify_variables(s.A);
    auto eval = [&](std::span<const Rational> point) {
      Matrix<Rational> av = evaluate_matrix(a, point);
      std::vector<Rational> bv(n, Rational(0));
      bv[source_row] = point[0] * point[1] * point[2];
      LinearSolution ls = solve_linear(av, bv);
      std::vector<Rational> out{ls.det};
      for (std::size_t u = 0; u < n; ++u) {
        if (ls.det != 0) {
          out.push_back(ls.det * ls.x[u]);
        } else {
          Matrix<Rational> cu = av;
          for (std::size_t r = 0; r < n; ++r) cu(r, u) = bv[r];
          out.push_back(det_rational(cu));
        }
      }
      return out;
    };
    std::vector<int> bounds = row_degree_bounds(s.A);
    auto polys = interpolate_on_grid(s.vars, bounds, n + 1, eval);
    for (std::size_t probe = 0; probe < 2; ++probe) {
      auto point = off_grid_point(bounds, probe);
      auto expect = eval(point);
      for (std::size_t r = 0; r <= n; ++r) {
        if (polys[r].evaluate(point) != expect[r]) {
          throw std::domain_error("solve_system: degree bound insufficient");
        }
      }
    }
    sol.det = std::move(polys[0]);
    sol.numerators.assign(polys.begin() + 1, polys.end());
  }
  if (sol.det.is_zero()) throw std::domain_error("system determinant vanishes identically");
  sol.total_numerator = MPoly(s.vars);
  for (const auto& p : sol.numerators) sol.total_numerator += p;
  sol.system = std::move(s);
  return sol;
}

/// Generating functions of the working system. The default source is the
/// gamma_0 row, i.e. the density response to the face (0, 0).
inline GenfunSolution solve_genfun(const SystemSpec& spec, std::optional<std::size_t> source_row = std::nullopt) {
  SystemMatrix s = working_system(spec);
  std::size_t fallback = spec.m == 2 ? 2 : static_cast<std::size_t>(2 * spec.m);
  if (s.size() == 1) fallback = 0;
  const std::size_t row = source_row.value_or(fallback);
  return solve_system(std::move(s), row);
}

}  // namespace octa
