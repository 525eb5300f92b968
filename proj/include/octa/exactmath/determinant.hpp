#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "octa/exactmath/matrix.hpp"
#include "octa/exactmath/mpoly.hpp"
#include "octa/exactmath/parallel.hpp"
#include "octa/exactmath/upoly.hpp"

namespace octa {

namespace detail {

inline bool is_zero(const Integer& v) { return v == 0; }
inline bool is_zero(const MPoly& v) { return v.is_zero(); }

inline Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline MPoly exact_quotient(const MPoly& a, const MPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("Bareiss step produced an inexact division");
  return *q;
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant over an integral domain with exact
/// division. Row swaps are used when a pivot vanishes.
template <class T>
T det_bareiss(Matrix<T> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  bool negate = false;
  T prev = T(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::is_zero(m(k, k))) {
      std::size_t r = k + 1;
      while (r < n && detail::is_zero(m(r, k))) ++r;
      if (r == n) return m(k, k) - m(k, k);
      m.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = k == 0 ? std::move(num) : detail::exact_quotient(num, prev);
      }
    }
    prev = m(k, k);
  }
  T result = m(n - 1, n - 1);
  if (negate) result = T(0) - result;
  return result;
}

/// Exact determinant of a rational matrix: rows are scaled to integers and the
/// integer matrix goes through Bareiss.
inline Rational det_rational(const Matrix<Rational>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Integer> im(n, n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) im(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
    scale *= l;
  }
  Rational d(det_bareiss(std::move(im)), scale);
  d.canonicalize();
  return d;
}

/// Determinant of A and, when it is nonzero, the solution of A x = b, by
/// Gaussian elimination over Q.
struct LinearSolution {
  Rational det;
  std::vector<Rational> x;
};

inline LinearSolution solve_linear(Matrix<Rational> a, std::vector<Rational> b) {
  if (!a.is_square() || b.size() != a.rows()) throw std::invalid_argument("solve_linear: shape mismatch");
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return {Rational(0), {}};
    if (p != k) {
      a.swap_rows(p, k);
      std::swap(b[p], b[k]);
      det = -det;
    }
    det *= a(k, k);
    const Rational inv = Rational(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return {det, std::move(x)};
}

/// Common variable list of the matrix entries; constants are lifted onto it.
inline Matrix<MPoly> unify_variables(const Matrix<MPoly>& m) {
  std::vector<std::string> vars;
  bool found = false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const MPoly& e = m(r, c);
      if (e.is_constant()) continue;
      if (!found) {
        vars = e.vars();
        found = true;
      } else if (e.vars() != vars) {
        throw std::invalid_argument("matrix entries do not share one variable list");
      }
    }
  }
  if (!found) {
    for (std::size_t r = 0; r < m.rows() && !found; ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!m(r, c).vars().empty()) {
          vars = m(r, c).vars();
          found = true;
          break;
        }
      }
    }
  }
  return m.map([&](const MPoly& e) { return e.vars() == vars ? e : MPoly::constant(e.constant_value(), vars); });
}

/// Exact determinant via fraction-free elimination over Q[vars].
inline MPoly det_fraction_free(const Matrix<MPoly>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return MPoly::constant(1);
  Matrix<MPoly> u = unify_variables(m);
  std::vector<std::string> vars = u(0, 0).vars();
  // Bareiss needs a one compatible with the entries.
  const std::size_t n = u.rows();
  bool negate = false;
  MPoly prev = MPoly::constant(1, vars);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (u(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && u(r, k).is_zero()) ++r;
      if (r == n) return MPoly(vars);
      u.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly num = u(i, j) * u(k, k) - u(i, k) * u(k, j);
        u(i, j) = k == 0 ? std::move(num) : detail::exact_quotient(num, prev);
      }
    }
    prev = u(k, k);
  }
  MPoly result = u(n - 1, n - 1);
  return negate ? -result : result;
}

/// Evaluates every entry at a point of the common variable list.
inline Matrix<Rational> evaluate_matrix(const Matrix<MPoly>& m, std::span<const Rational> point) {
  return m.map([&](const MPoly& e) { return e.is_constant() ? e.constant_value() : e.evaluate(point); });
}

/// Polynomials p_0..p_{count-1} over `vars` with deg_v p_r <= bounds[v],
/// reconstructed from exact values on the tensor grid of nodes 0, 1, -1, 2, ...
/// `eval(point)` returns all `count` values at one grid point; points are
/// evaluated concurrently.
template <class Eval>
std::vector<MPoly> interpolate_on_grid(const std::vector<std::string>& vars, const std::vector<int>& bounds,
                                       std::size_t count, Eval eval) {
  const std::size_t nv = vars.size();
  if (bounds.size() != nv) throw std::invalid_argument("one degree bound per variable required");
  for (int b : bounds) {
    if (b < 0) throw std::invalid_argument("negative degree bound");
  }
  std::vector<std::size_t> dims(nv);
  std::size_t total = 1;
  for (std::size_t v = 0; v < nv; ++v) {
    dims[v] = static_cast<std::size_t>(bounds[v]) + 1;
    total *= dims[v];
  }
  // values[r * total + flat]
  std::vector<Rational> values(count * total);
  parallel_for(total, [&](std::size_t flat) {
    std::vector<Rational> point(nv);
    std::size_t rest = flat;
    for (std::size_t v = nv; v-- > 0;) {
      point[v] = interpolation_node(rest % dims[v]);
      rest /= dims[v];
    }
    std::vector<Rational> out = eval(std::span<const Rational>(point));
    if (out.size() != count) throw std::logic_error("interpolate_on_grid: wrong number of values");
    for (std::size_t r = 0; r < count; ++r) values[r * total + flat] = std::move(out[r]);
  });

  // Interpolate along each axis in turn; afterwards the values hold monomial
  // coefficients indexed like the grid.
  std::size_t stride = 1;
  for (std::size_t v = nv; v-- > 0;) {
    const std::size_t len = dims[v];
    std::vector<Rational> nodes(len);
    for (std::size_t i = 0; i < len; ++i) nodes[i] = interpolation_node(i);
    const std::size_t fibers = total / len;
    parallel_for(count * fibers, [&](std::size_t job) {
      const std::size_t r = job / fibers, fiber = job % fibers;
      const std::size_t hi = fiber / stride, lo = fiber % stride;
      const std::size_t base = r * total + hi * len * stride + lo;
      std::vector<Rational> fv(len);
      for (std::size_t i = 0; i < len; ++i) fv[i] = values[base + i * stride];
      auto coeffs = interpolate_1d(nodes, fv);
      for (std::size_t i = 0; i < len; ++i) values[base + i * stride] = coeffs[i];
    });
    stride *= len;
  }

  std::vector<MPoly> result(count, MPoly(vars));
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t flat = 0; flat < total; ++flat) {
      const Rational& c = values[r * total + flat];
      if (c == 0) continue;
      Exponents e(nv);
      std::size_t rest = flat;
      for (std::size_t v = nv; v-- > 0;) {
        e[v] = static_cast<int>(rest % dims[v]);
        rest /= dims[v];
      }
      result[r].add_term(std::move(e), c);
    }
  }
  return result;
}

/// Points outside the interpolation grid in every coordinate, for
/// grid-sufficiency checks.
inline std::vector<Rational> off_grid_point(const std::vector<int>& bounds, std::size_t probe) {
  std::vector<Rational> point(bounds.size());
  for (std::size_t v = 0; v < bounds.size(); ++v) {
    point[v] = interpolation_node(static_cast<std::size_t>(bounds[v]) + 1 + probe + v % 2) +
               make_rational(static_cast<long>(probe), 7);
  }
  return point;
}

/// Determinant reconstructed from exact evaluations on the tensor grid of
/// nodes 0, 1, -1, 2, ... (bound_i + 1 nodes per variable), one variable at a
/// time. The result is then checked at off-grid points; a bound that is too
/// small throws std::domain_error instead of returning a wrong polynomial.
inline MPoly det_by_interpolation(const Matrix<MPoly>& m, const std::vector<int>& degree_bounds) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix<MPoly> u = unify_variables(m);
  const std::vector<std::string> vars = m.rows() ? u(0, 0).vars() : std::vector<std::string>{};
  MPoly result = interpolate_on_grid(vars, degree_bounds, 1, [&](std::span<const Rational> point) {
    return std::vector<Rational>{det_rational(evaluate_matrix(u, point))};
  })[0];
  for (std::size_t probe = 0; probe < 3; ++probe) {
    auto point = off_grid_point(degree_bounds, probe);
    if (result.evaluate(point) != det_rational(evaluate_matrix(u, point))) {
      throw std::domain_error("det_by_interpolation: degree bound insufficient for the determinant");
    }
  }
  return result;
}

/// Named-bound convenience overload.
inline MPoly det_by_interpolation(const Matrix<MPoly>& m, const std::map<std::string, int>& bounds) {
  Matrix<MPoly> u = unify_variables(m);
  std::vector<int> b;
  if (m.rows()) {
    for (const auto& v : u(0, 0).vars()) {
      auto it = bounds.find(v);
      if (it == bounds.end()) throw std::invalid_argument("missing degree bound for '" + v + "'");
      b.push_back(it->second);
    }
  }
  return det_by_interpolation(u, b);
}

/// Per-variable degree bound from row maxima: the determinant's degree in v is
/// at most the sum over rows of the largest entry degree in v.
inline std::vector<int> row_degree_bounds(const Matrix<MPoly>& m) {
  Matrix<MPoly> u = unify_variables(m);
  if (u.rows() == 0) return {};
  const auto& vars = u(0, 0).vars();
  std::vector<int> bounds(vars.size(), 0);
  for (std::size_t v = 0; v < vars.size(); ++v) {
    for (std::size_t r = 0; r < u.rows(); ++r) {
      int mx = 0;
      for (std::size_t c = 0; c < u.cols(); ++c) mx = std::max(mx, u(r, c).degree(vars[v]));
      bounds[v] += mx;
    }
  }
  return bounds;
}

}  // namespace octa
