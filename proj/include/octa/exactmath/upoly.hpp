#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "octa/exactmath/rational.hpp"

namespace octa {

/// Dense univariate polynomial over the rationals, coefficients low to high.
/// Used for content/gcd computations and for one-axis interpolation.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (quotient, remainder).
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("UPoly division by zero");
    std::vector<Rational> rem = a.c_;
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      Rational q = rem[static_cast<std::size_t>(k + b.degree())] / b.leading();
      quot[static_cast<std::size_t>(k)] = q;
      if (q == 0) continue;
      for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.c_[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> r = c_;
    Rational lc = leading();
    for (auto& x : r) x /= lc;
    return UPoly(std::move(r));
  }

  /// Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monomial-basis coefficients of the unique polynomial of degree < n through
/// (nodes[i], values[i]), via Newton divided differences.
inline std::vector<Rational> interpolate_1d(std::span<const Rational> nodes, std::span<const Rational> values) {
  const std::size_t n = nodes.size();
  if (values.size() != n) throw std::invalid_argument("interpolation: node/value count mismatch");
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
      if (i == level) break;
    }
  }
  // Horner expansion of the Newton form into the monomial basis.
  std::vector<Rational> coeffs(n);
  for (std::size_t k = n; k-- > 0;) {
    // coeffs <- coeffs * (x - nodes[k]) + dd[k]
    for (std::size_t j = n - 1; j > 0; --j) coeffs[j] = coeffs[j - 1] - nodes[k] * coeffs[j];
    coeffs[0] = -nodes[k] * coeffs[0] + dd[k];
  }
  return coeffs;
}

}  // namespace octa
