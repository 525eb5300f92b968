#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "octa/tsystem/field.hpp"
#include "octa/tsystem/initial_data.hpp"

namespace octa {

/// Closed-form T for 2x2-periodic data.
inline Rational closed_form_22(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                               const LatticePoint& p) {
  if (!p.admissible() || p.k < 0) throw std::invalid_argument("closed_form_22: inadmissible point");
  const long k = p.k;
  const long e1 = (k / 2) * ((k + 1) / 2);
  const long e2 = k >= 1 ? ((k - 1) / 2) * (k / 2) : 0;
  Rational pre = rational_pow((a * a + b * b) / (c * d), e1) * rational_pow((c * c + d * d) / (a * b), e2);
  InitialData init = InitialData::two_by_two(a, b, c, d);
  const bool shifted = k % 4 >= 2;
  return pre * init.t(p.i + shifted, p.j + shifted);
}

/// Sequences derived from m-toroidal data.
struct ToroidalDerived {
  std::vector<Rational> x, y, lambda, mu;

  explicit ToroidalDerived(const ToroidalData& t) {
    t.validate();
    for (long i = 0; i < t.m; ++i) {
      x.push_back((t.C(i) * t.D(i + 1) + t.C(i + 1) * t.D(i)) / (t.A(i) * t.B(i)));
      y.push_back((t.A(i - 1) * t.B(i) + t.A(i) * t.B(i - 1)) / (t.C(i) * t.D(i)));
      lambda.push_back(t.A(i) * t.B(i - 1) / (t.A(i - 1) * t.B(i) + t.A(i) * t.B(i - 1)));
      mu.push_back(t.C(i + 1) * t.D(i) / (t.C(i) * t.D(i + 1) + t.C(i + 1) * t.D(i)));
    }
  }

  const Rational& X(long i) const { return x[static_cast<std::size_t>(floor_mod(i, static_cast<long>(x.size())))]; }
  const Rational& Y(long i) const { return y[static_cast<std::size_t>(floor_mod(i, static_cast<long>(y.size())))]; }
};

/// prod (1/w_i - 1); equals 1 for every admissible lambda or mu family.
inline Rational convexity_product(const std::vector<Rational>& w) {
  Rational p = 1;
  for (const auto& v : w) p *= Rational(1) / v - 1;
  return p;
}

namespace detail {

/// prod_{l=0}^{n-1} seq_{i-l-1}^{(n+1)/2 - |(n-1)/2 - l|}, and 1 for n <= 0.
template <class Seq>
Rational toroidal_power_product(const Seq& seq, long n, long i) {
  Rational out = 1;
  for (long l = 0; l < n; ++l) {
    const long twice = (n + 1) - std::abs(n - 1 - 2 * l);
    if (twice % 2 != 0) throw std::logic_error("non-integral exponent in toroidal product");
    out *= rational_pow(seq(i - l - 1), twice / 2);
  }
  return out;
}

}  // namespace detail

/// Closed-form T for m-toroidal data:
/// T = u_{k-1,(i-j+k-1)/2} v_{k-2,(i-j+k-1)/2} t_{i+[k/2], j+[k/2]}.
inline Rational closed_form_mtoroidal(const ToroidalData& data, const LatticePoint& p, const ToroidalDerived& derived) {
  if (!p.admissible() || p.k < 0) throw std::invalid_argument("closed_form_mtoroidal: inadmissible point");
  const long k = p.k;
  const long idx = (static_cast<long>(p.i) - p.j + k - 1) / 2;
  Rational u = detail::toroidal_power_product([&](long i) { return derived.X(i); }, k - 1, idx);
  Rational v = detail::toroidal_power_product([&](long i) { return derived.Y(i); }, k - 2, idx);
  return u * v * data.t(p.i + k / 2, p.j + k / 2);
}

inline Rational closed_form_mtoroidal(const ToroidalData& data, const LatticePoint& p) {
  return closed_form_mtoroidal(data, p, ToroidalDerived(data));
}

/// (L, R) at a point with i + j + k even.
struct LRPair {
  Rational L;
  Rational R;
};

/// Closed-form cross-ratio coefficients from the convex weights: with
/// s = i+j+k, k even uses lambda_{(i-j)/2} and k odd uses mu_{(i-j-1)/2}; L
/// is the weight itself when s = 0 mod 4 and its complement when s = 2 mod 4.
inline LRPair coeff_LR(const std::vector<Rational>& lambda, const std::vector<Rational>& mu, int i, int j, int k) {
  if (floor_mod(static_cast<long>(i) + j + k, 2) != 0) {
    throw std::invalid_argument("coeff_LR needs i + j + k even");
  }
  const long m = static_cast<long>(lambda.size());
  if (m == 0 || mu.size() != lambda.size()) throw std::invalid_argument("coeff_LR: lambda/mu length mismatch");
  const bool direct = floor_mod(static_cast<long>(i) + j + k, 4) == 0;
  const Rational& w = floor_mod(k, 2) == 0
                          ? lambda[static_cast<std::size_t>(floor_mod(floor_div(static_cast<long>(i) - j, 2), m))]
                          : mu[static_cast<std::size_t>(floor_mod(floor_div(static_cast<long>(i) - j - 1, 2), m))];
  Rational L = direct ? w : Rational(1) - w;
  return {L, Rational(1) - L};
}

inline LRPair coeff_LR(const ToroidalDerived& derived, int i, int j, int k) {
  return coeff_LR(derived.lambda, derived.mu, i, j, k);
}

inline LRPair coeff_LR(const InitialData& init, int i, int j, int k) {
  auto tor = init.as_toroidal();
  if (!tor) throw std::invalid_argument("coeff_LR: no closed form for explicit data; use coeff_LR_numeric");
  return coeff_LR(ToroidalDerived(*tor), i, j, k);
}

/// L and R as ratios of evolved T values, where all five neighbours are stored.
inline std::optional<LRPair> coeff_LR_numeric(const TField& f, int i, int j, int k) {
  if (floor_mod(static_cast<long>(i) + j + k, 2) != 0) throw std::invalid_argument("coeff_LR_numeric needs i + j + k even");
  if (!f.contains(i, j, k + 1) || !f.contains(i, j, k - 1) || !f.contains(i + 1, j, k) || !f.contains(i - 1, j, k) ||
      !f.contains(i, j + 1, k) || !f.contains(i, j - 1, k)) {
    return std::nullopt;
  }
  const Rational denom = f.at(i, j, k + 1) * f.at(i, j, k - 1);
  return LRPair{f.at(i + 1, j, k) * f.at(i - 1, j, k) / denom, f.at(i, j + 1, k) * f.at(i, j - 1, k) / denom};
}

struct PeriodicityViolation {
  char quantity;  // 'T' or 'L'
  LatticePoint point;
  LatticePoint shift;
};

/// Checks T under (m,-m,0) and (2,2,0), and L under those and (1,1,2), on every
/// pair of points where both values are available.
inline std::vector<PeriodicityViolation> check_toroidal_periodicity(const TField& f, int m) {
  std::vector<PeriodicityViolation> out;
  const std::vector<LatticePoint> t_shifts{{m, -m, 0}, {2, 2, 0}};
  const std::vector<LatticePoint> l_shifts{{m, -m, 0}, {2, 2, 0}, {1, 1, 2}};
  for (int k = 0; k <= f.kmax(); ++k) {
    for (const auto& p : f.layer_points(k)) {
      for (const auto& s : t_shifts) {
        if (f.contains(p.i, p.j, p.k) && f.contains(p.i + s.i, p.j + s.j, p.k + s.k) &&
            f.at(p.i, p.j, p.k) != f.at(p.i + s.i, p.j + s.j, p.k + s.k)) {
          out.push_back({'T', p, s});
        }
      }
    }
  }
  const int r = f.kmax();
  for (int k = 1; k < f.kmax(); ++k) {
    for (int i = f.base_i() - r; i <= f.base_i() + r; ++i) {
      for (int j = f.base_j() - r; j <= f.base_j() + r; ++j) {
        if (floor_mod(static_cast<long>(i) + j + k, 2) != 0) continue;
        auto l0 = coeff_LR_numeric(f, i, j, k);
        if (!l0) continue;
        for (const auto& s : l_shifts) {
          auto l1 = coeff_LR_numeric(f, i + s.i, j + s.j, k + s.k);
          if (l1 && l1->L != l0->L) out.push_back({'L', {i, j, k}, s});
        }
      }
    }
  }
  return out;
}

}  // namespace octa
