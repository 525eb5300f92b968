#pragma once

#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "octa/exactmath/parallel.hpp"
#include "octa/tsystem/initial_data.hpp"

namespace octa {

/// T values on the admissible points of the diamond
/// |i - bi| + |j - bj| <= kmax - k, 0 <= k <= kmax.
///
/// Each layer is a dense (2 kmax + 1)^2 array indexed by the offsets of
/// (i - bi) + (j - bj) and (i - bi) - (j - bj).
class TField {
 public:
  TField(int base_i, int base_j, int kmax)
      : bi_(base_i), bj_(base_j), kmax_(kmax), width_(2 * kmax + 1),
        layers_(static_cast<std::size_t>(kmax + 1),
                std::vector<std::optional<Rational>>(static_cast<std::size_t>(width_ * width_))) {
    if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
  }

  int base_i() const { return bi_; }
  int base_j() const { return bj_; }
  int kmax() const { return kmax_; }

  /// Inside the diamond and admissible (whether or not a value is stored).
  bool in_domain(int i, int j, int k) const {
    if (k < 0 || k > kmax_) return false;
    if (!LatticePoint{i, j, k}.admissible()) return false;
    return std::abs(i - bi_) + std::abs(j - bj_) <= kmax_ - k;
  }

  bool contains(int i, int j, int k) const { return in_domain(i, j, k) && slot(i, j, k).has_value(); }

  const Rational& at(int i, int j, int k) const {
    if (!contains(i, j, k)) {
      throw std::out_of_range("T(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                              ") not in field");
    }
    return *slot(i, j, k);
  }

  void set(int i, int j, int k, Rational value) {
    if (!in_domain(i, j, k)) throw std::out_of_range("set outside the field domain");
    slot(i, j, k) = std::move(value);
  }

  /// Domain points of layer k in (i, j) lexicographic order.
  std::vector<LatticePoint> layer_points(int k) const {
    std::vector<LatticePoint> pts;
    const int r = kmax_ - k;
    for (int i = bi_ - r; i <= bi_ + r; ++i) {
      for (int j = bj_ - r; j <= bj_ + r; ++j) {
        if (in_domain(i, j, k)) pts.push_back({i, j, k});
      }
    }
    return pts;
  }

  /// "i,j,k,value" CSV, rows sorted by (k, i, j), values as num/den.
  void write_csv(std::ostream& os) const {
    os << "i,j,k,value\n";
    for (int k = 0; k <= kmax_; ++k) {
      for (const auto& p : layer_points(k)) {
        if (contains(p.i, p.j, p.k)) os << p.i << ',' << p.j << ',' << p.k << ',' << to_fraction_string(at(p.i, p.j, p.k)) << '\n';
      }
    }
  }

 private:
  std::size_t index(int i, int j) const {
    const int di = i - bi_, dj = j - bj_;
    return static_cast<std::size_t>((di + dj + kmax_) * width_ + (di - dj + kmax_));
  }
  std::optional<Rational>& slot(int i, int j, int k) { return layers_[static_cast<std::size_t>(k)][index(i, j)]; }
  const std::optional<Rational>& slot(int i, int j, int k) const {
    return layers_[static_cast<std::size_t>(k)][index(i, j)];
  }

  int bi_, bj_, kmax_, width_;
  std::vector<std::vector<std::optional<Rational>>> layers_;
};

/// Solves T_{i,j,k+1} T_{i,j,k-1} = T_{i+1,j,k} T_{i-1,j,k} + T_{i,j+1,k} T_{i,j-1,k}
/// exactly on the diamond around (base_i, base_j).
inline TField evolve(const InitialData& init, int base_i, int base_j, int kmax) {
  if (kmax < 1) throw std::invalid_argument("evolve needs kmax >= 1");
  TField f(base_i, base_j, kmax);
  for (int k = 0; k <= 1; ++k) {
    for (const auto& p : f.layer_points(k)) {
      Rational v = init.t(p.i, p.j);
      if (v <= 0) throw std::domain_error("initial data must be strictly positive");
      f.set(p.i, p.j, k, std::move(v));
    }
  }
  for (int k = 1; k < kmax; ++k) {
    const auto pts = f.layer_points(k + 1);
    std::vector<Rational> vals(pts.size());
    parallel_for(pts.size(), [&](std::size_t n) {
      const auto& p = pts[n];
      const Rational& below = f.at(p.i, p.j, k - 1);
      if (below == 0) throw std::domain_error("division by a zero T value");
      vals[n] = (f.at(p.i + 1, p.j, k) * f.at(p.i - 1, p.j, k) + f.at(p.i, p.j + 1, k) * f.at(p.i, p.j - 1, k)) / below;
    });
    for (std::size_t n = 0; n < pts.size(); ++n) f.set(pts[n].i, pts[n].j, k + 1, std::move(vals[n]));
  }
  return f;
}

}  // namespace octa
