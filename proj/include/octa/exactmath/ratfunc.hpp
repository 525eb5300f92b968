#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "octa/exactmath/mpoly.hpp"

namespace octa {

/// x^prefactor * numerator / denominator over a shared variable list.
///
/// Laurent monomials are never stored inside the polynomials: the signed
/// prefactor absorbs them. Canonical form: numerator and denominator carry no
/// monomial factor, the denominator has content 1 and a positive lex-leading
/// coefficient. No polynomial gcd is taken beyond that.
class RatFunc {
 public:
  RatFunc() = default;

  RatFunc(MPoly numerator, MPoly denominator, std::vector<int> prefactor = {})
      : num_(std::move(numerator)), den_(std::move(denominator)), pre_(std::move(prefactor)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
    std::vector<std::string> vars = num_.is_constant() ? den_.vars() : num_.vars();
    if (vars.empty()) vars = num_.vars();
    num_ = num_.is_constant() ? MPoly::constant(num_.constant_value(), vars) : num_.lift(vars);
    den_ = den_.is_constant() ? MPoly::constant(den_.constant_value(), vars) : den_.lift(vars);
    if (pre_.empty()) pre_.assign(vars.size(), 0);
    if (pre_.size() != vars.size()) throw std::invalid_argument("prefactor length mismatch");
    canonicalize();
  }

  static RatFunc polynomial(const MPoly& p) { return RatFunc(p, MPoly::constant(1, p.vars())); }

  /// c * x^exps with possibly negative exponents.
  static RatFunc laurent_monomial(const std::vector<std::string>& vars, std::vector<int> exps, const Rational& c) {
    return RatFunc(MPoly::constant(c, vars), MPoly::constant(1, vars), std::move(exps));
  }

  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }
  const std::vector<int>& prefactor() const { return pre_; }
  const std::vector<std::string>& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }

  /// Numerator and denominator with the prefactor pushed into whichever side
  /// keeps exponents non-negative.
  std::pair<MPoly, MPoly> cleared() const {
    Exponents up(pre_.size()), down(pre_.size());
    for (std::size_t i = 0; i < pre_.size(); ++i) {
      up[i] = pre_[i] > 0 ? pre_[i] : 0;
      down[i] = pre_[i] < 0 ? -pre_[i] : 0;
    }
    return {num_.shifted_up(up), den_.shifted_up(down)};
  }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    std::vector<int> pre(a.pre_.size());
    for (std::size_t i = 0; i < pre.size(); ++i) pre[i] = a.pre_[i] + b.pre_[i];
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_, std::move(pre));
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // common prefactor = componentwise min
    std::vector<int> pre(a.pre_.size());
    Exponents sa(pre.size()), sb(pre.size());
    for (std::size_t i = 0; i < pre.size(); ++i) {
      pre[i] = std::min(a.pre_[i], b.pre_[i]);
      sa[i] = a.pre_[i] - pre[i];
      sb[i] = b.pre_[i] - pre[i];
    }
    MPoly na = a.num_.shifted_up(sa), nb = b.num_.shifted_up(sb);
    if (a.den_ == b.den_) return RatFunc(na + nb, a.den_, std::move(pre));
    return RatFunc(na * b.den_ + nb * a.den_, a.den_ * b.den_, std::move(pre));
  }

  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, a.pre_); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc division by zero");
    std::vector<int> pre(a.pre_.size());
    for (std::size_t i = 0; i < pre.size(); ++i) pre[i] = a.pre_[i] - b.pre_[i];
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_, std::move(pre));
  }

  /// Exact value at a point with all coordinates nonzero.
  Rational evaluate(std::span<const Rational> point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw std::domain_error("RatFunc evaluated on a pole");
    Rational v = num_.evaluate(point) / d;
    for (std::size_t i = 0; i < pre_.size(); ++i) v *= rational_pow(point[i], pre_[i]);
    return v;
  }

  /// Equality as rational functions (cross-multiplication).
  friend bool equivalent(const RatFunc& a, const RatFunc& b) {
    auto [na, da] = a.cleared();
    auto [nb, db] = b.cleared();
    return na * db == nb * da;
  }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = MPoly::constant(1, den_.vars());
      std::fill(pre_.begin(), pre_.end(), 0);
      return;
    }
    Exponents mn = num_.monomial_gcd(), md = den_.monomial_gcd();
    num_ = num_.shifted_down(mn);
    den_ = den_.shifted_down(md);
    for (std::size_t i = 0; i < pre_.size(); ++i) pre_[i] += mn[i] - md[i];
    Rational s = den_.content();
    if (den_.leading_term().second < 0) s = -s;
    num_ *= Rational(1) / s;
    den_ *= Rational(1) / s;
  }

  MPoly num_;
  MPoly den_;
  std::vector<int> pre_;
};

}  // namespace octa
