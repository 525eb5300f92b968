#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "octa/exactmath/rational.hpp"

namespace octa {

/// Non-negative remainder.
inline long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline long floor_div(long a, long b) { return (a - floor_mod(a, b)) / b; }

/// Point (i, j, k) of the T-system lattice.
struct LatticePoint {
  int i = 0;
  int j = 0;
  int k = 0;

  /// T lives on i + j + k odd; the L/R coefficients on the other parity.
  bool admissible() const { return floor_mod(static_cast<long>(i) + j + k, 2) == 1; }

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint admissible_point(int i, int j, int k) {
  LatticePoint p{i, j, k};
  if (k < 0 || !p.admissible()) {
    throw std::invalid_argument("inadmissible lattice point (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ")");
  }
  return p;
}

/// m-periodic sequences a_i, b_i, c_i, d_i indexing an m-toroidal initial
/// condition: a_i = t(i+1,-i), b_i = t(i+2,-i+1), c_i = t(i,-i), d_i = t(i+1,-i+1).
struct ToroidalData {
  int m = 1;
  std::vector<Rational> a, b, c, d;

  const Rational& A(long i) const { return a[static_cast<std::size_t>(floor_mod(i, m))]; }
  const Rational& B(long i) const { return b[static_cast<std::size_t>(floor_mod(i, m))]; }
  const Rational& C(long i) const { return c[static_cast<std::size_t>(floor_mod(i, m))]; }
  const Rational& D(long i) const { return d[static_cast<std::size_t>(floor_mod(i, m))]; }

  void validate() const {
    if (m < 1) throw std::invalid_argument("toroidal period must be positive");
    for (const auto* seq : {&a, &b, &c, &d}) {
      if (seq->size() != static_cast<std::size_t>(m)) throw std::invalid_argument("toroidal sequence length != m");
      for (const auto& v : *seq) {
        if (v <= 0) throw std::invalid_argument("initial data must be strictly positive");
      }
    }
  }

  /// t(p, q) on the whole plane.
  Rational t(long p, long q) const {
    const long s = floor_mod(p + q, 4), diff = p - q;
    switch (s) {
      case 0: return C(floor_div(diff, 2));
      case 1: return A(floor_div(diff - 1, 2));
      case 2: return D(floor_div(diff, 2));
      default: return B(floor_div(diff - 1, 2));
    }
  }
};

/// Flat initial data t(i, j), placed on T_{i,j,0} (i+j odd) and T_{i,j,1}
/// (i+j even).
class InitialData {
 public:
  enum class Kind { uniform, two_by_two, m_toroidal, explicit_values };

  static InitialData uniform() {
    InitialData d;
    d.kind_ = Kind::uniform;
    return d;
  }

  /// t = a, b, c, d on (even,even), (odd,odd), (even,odd), (odd,even).
  static InitialData two_by_two(Rational a, Rational b, Rational c, Rational d) {
    InitialData out;
    out.kind_ = Kind::two_by_two;
    out.abcd_ = {std::move(a), std::move(b), std::move(c), std::move(d)};
    for (const auto& v : out.abcd_) {
      if (v <= 0) throw std::invalid_argument("initial data must be strictly positive");
    }
    return out;
  }

  static InitialData m_toroidal(ToroidalData data) {
    data.validate();
    InitialData out;
    out.kind_ = Kind::m_toroidal;
    out.tor_ = std::move(data);
    return out;
  }

  /// Values given point by point. With `periods`, lookups are reduced modulo
  /// the lattice spanned by the two vectors.
  static InitialData explicit_values(std::map<std::pair<long, long>, Rational> values,
                                     std::optional<std::array<std::array<long, 2>, 2>> periods = std::nullopt) {
    for (const auto& [key, v] : values) {
      if (v <= 0) throw std::invalid_argument("initial data must be strictly positive");
    }
    if (periods) {
      const auto& e = *periods;
      if (e[0][0] * e[1][1] - e[0][1] * e[1][0] == 0) throw std::invalid_argument("degenerate period lattice");
    }
    InitialData out;
    out.kind_ = Kind::explicit_values;
    out.values_ = std::move(values);
    out.periods_ = periods;
    return out;
  }

  Kind kind() const { return kind_; }

  Rational t(long i, long j) const {
    switch (kind_) {
      case Kind::uniform: return 1;
      case Kind::two_by_two: {
        const bool oi = floor_mod(i, 2), oj = floor_mod(j, 2);
        if (!oi && !oj) return abcd_[0];
        if (oi && oj) return abcd_[1];
        return oi ? abcd_[3] : abcd_[2];
      }
      case Kind::m_toroidal: return tor_.t(i, j);
      case Kind::explicit_values: return lookup(i, j);
    }
    throw std::logic_error("unknown initial data kind");
  }

  /// The data as m-toroidal sequences: uniform is m = 1 with all ones and
  /// 2x2 data is m = 2 via c0=d1=a, c1=d0=b, a1=b0=c, a0=b1=d.
  std::optional<ToroidalData> as_toroidal() const {
    switch (kind_) {
      case Kind::uniform: return ToroidalData{1, {1}, {1}, {1}, {1}};
      case Kind::two_by_two: {
        const auto& [a, b, c, d] = abcd_;
        return ToroidalData{2, {d, c}, {c, d}, {a, b}, {b, a}};
      }
      case Kind::m_toroidal: return tor_;
      case Kind::explicit_values: return std::nullopt;
    }
    return std::nullopt;
  }

  const std::array<Rational, 4>& abcd() const { return abcd_; }

 private:
  Rational lookup(long i, long j) const {
    auto it = values_.find({i, j});
    if (it != values_.end()) return it->second;
    if (periods_) {
      const auto& e = *periods_;
      const long det = e[0][0] * e[1][1] - e[0][1] * e[1][0];
      for (const auto& [key, v] : values_) {
        const long di = i - key.first, dj = j - key.second;
        // integer solution of n1 e0 + n2 e1 = (di, dj)
        const long n1 = di * e[1][1] - dj * e[1][0], n2 = e[0][0] * dj - e[0][1] * di;
        if (n1 % det == 0 && n2 % det == 0) return v;
      }
    }
    throw std::out_of_range("no initial value for t(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }

  Kind kind_ = Kind::uniform;
  std::array<Rational, 4> abcd_{};
  ToroidalData tor_{};
  std::map<std::pair<long, long>, Rational> values_;
  std::optional<std::array<std::array<long, 2>, 2>> periods_;
};

}  // namespace octa
