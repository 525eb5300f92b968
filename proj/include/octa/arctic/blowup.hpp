#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "octa/exactmath/mpoly.hpp"
#include "octa/exactmath/serialize.hpp"

namespace octa {

/// Lowest nonvanishing t-coefficient of D(1 + t a, 1 + t b, 1 + t c) together
/// with its order.
struct LeadingForm {
  MPoly H;
  int t_order = 0;

  /// x dH/dx + y dH/dy - t_order H.
  MPoly euler_residual() const {
    MPoly r = MPoly::variable(H.vars(), "x") * H.derivative("x") + MPoly::variable(H.vars(), "y") * H.derivative("y");
    r += -(H * Rational(t_order));
    return r;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["H"] = octa::to_json(H);
    j["t_order"] = t_order;
    return j;
  }
};

namespace detail {

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

/// Variables of D other than x, y, z, in D's order.
inline std::vector<std::string> parameters_of(const MPoly& d) {
  for (const char* v : {"x", "y", "z"}) {
    if (!d.has_var(v)) throw std::invalid_argument(std::string("expected a polynomial in x, y, z; missing ") + v);
  }
  std::vector<std::string> out;
  for (const auto& v : d.vars()) {
    if (v != "x" && v != "y" && v != "z") out.push_back(v);
  }
  return out;
}

/// Expansion of D(1 + t dx, 1 + t dy, 1 + t dz) in powers of t. The directions
/// share one variable list `out`, which must contain D's parameters. Only the
/// coefficient of t^n is ever formed:
///   sum over i + j + l = n of S_ijl dx^i dy^j dz^l,
///   S_ijl = sum over terms c x^a y^b z^c of c C(a,i) C(b,j) C(c,l).
class ShiftExpansion {
 public:
  ShiftExpansion(const MPoly& d, std::vector<MPoly> dirs, std::vector<std::string> out) : out_(std::move(out)) {
    params_ = parameters_of(d);
    for (const auto& p : params_) {
      if (std::find(out_.begin(), out_.end(), p) == out_.end()) throw std::invalid_argument("parameter '" + p + "' lost");
    }
    const std::size_t ix = d.index_of("x"), iy = d.index_of("y"), iz = d.index_of("z");
    for (const auto& [e, c] : d.terms()) {
      Exponents pe(out_.size(), 0);
      for (std::size_t k = 0; k < params_.size(); ++k) {
        pe[static_cast<std::size_t>(std::find(out_.begin(), out_.end(), params_[k]) - out_.begin())] =
            e[d.index_of(params_[k])];
      }
      terms_.push_back({{e[ix], e[iy], e[iz]}, std::move(pe), c});
      max_degree_ = std::max(max_degree_, e[ix] + e[iy] + e[iz]);
    }
    for (auto& p : dirs) dirs_.push_back(p.lift(out_));
  }

  int max_degree() const { return max_degree_; }

  MPoly coefficient(int n) const {
    MPoly out(out_);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) {
        const int l = n - i - j;
        MPoly s(out_);
        for (const auto& t : terms_) {
          Rational w = binomial(t.xyz[0], i) * binomial(t.xyz[1], j) * binomial(t.xyz[2], l);
          if (w != 0) s.add_term(t.params, t.c * w);
        }
        if (s.is_zero()) continue;
        out += s * dirs_[0].pow(static_cast<unsigned>(i)) * dirs_[1].pow(static_cast<unsigned>(j)) *
               dirs_[2].pow(static_cast<unsigned>(l));
      }
    }
    return out;
  }

  /// (order, coefficient) of the lowest nonzero power of t.
  std::pair<int, MPoly> leading() const {
    for (int n = 0; n <= max_degree_; ++n) {
      MPoly c = coefficient(n);
      if (!c.is_zero()) return {n, std::move(c)};
    }
    throw std::domain_error("polynomial vanishes identically along the blow-up");
  }

 private:
  struct Term {
    std::array<int, 3> xyz;
    Exponents params;
    Rational c;
  };
  std::vector<std::string> out_;
  std::vector<std::string> params_;
  std::vector<Term> terms_;
  std::vector<MPoly> dirs_;
  int max_degree_ = 0;
};

}  // namespace detail

/// Substitutes x -> 1 - t x, y -> 1 - t y, z -> 1 + t (u x + v y) and returns
/// the lowest nonvanishing t-coefficient. H is over (x, y, u, v, parameters...).
inline LeadingForm blowup_leading(const MPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("blowup_leading: zero polynomial");
  std::vector<std::string> out{"x", "y", "u", "v"};
  for (const auto& p : detail::parameters_of(d)) {
    if (p == "u" || p == "v") throw std::invalid_argument("parameter name clashes with u, v");
    out.push_back(p);
  }
  MPoly x = MPoly::variable(out, "x"), y = MPoly::variable(out, "y");
  MPoly z = MPoly::variable(out, "u") * x + MPoly::variable(out, "v") * y;
  detail::ShiftExpansion ex(d, {-x, -y, z}, out);
  if (!ex.coefficient(0).is_zero()) throw std::domain_error("D(1,1,1) != 0: the critical point is not on the variety");
  auto [n, h] = ex.leading();
  LeadingForm lf{std::move(h), n};
  if (!lf.euler_residual().is_zero()) throw std::logic_error("leading form is not homogeneous");
  return lf;
}

/// Orders of vanishing of numerator and denominator along x -> 1 - t x,
/// y -> 1 - t y, z -> 1 - t z. A polynomial that is nonzero at (1,1,1) has
/// order 0.
inline std::pair<int, int> vanishing_order_probe(const MPoly& numerator, const MPoly& denominator) {
  auto order = [](const MPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("vanishing_order_probe: zero polynomial");
    MPoly q = p;
    for (const char* v : {"x", "y", "z"}) {
      if (!q.has_var(v)) {
        auto vars = q.vars();
        vars.push_back(v);
        q = q.lift(vars);
      }
    }
    std::vector<std::string> out{"x", "y", "z"};
    for (const auto& s : detail::parameters_of(q)) out.push_back(s);
    detail::ShiftExpansion ex(q, {-MPoly::variable(out, "x"), -MPoly::variable(out, "y"), -MPoly::variable(out, "z")}, out);
    return ex.leading().first;
  };
  return {order(numerator), order(denominator)};
}

}  // namespace octa
