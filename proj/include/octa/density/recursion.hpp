#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "octa/exactmath/parallel.hpp"
#include "octa/tsystem/closed_form.hpp"

namespace octa {

/// L/R coefficients of the density recursion at points with i + j + k even.
///
/// A periodic provider promises that L depends only on
/// (i - j mod period, i + j + k mod 4, k mod 2); its values are tabulated once.
class LRProvider {
 public:
  using Fn = std::function<LRPair(int, int, int)>;

  explicit LRProvider(Fn fn, std::optional<int> period = std::nullopt) : fn_(std::move(fn)), period_(period) {
    if (period_) {
      if (*period_ < 1) throw std::invalid_argument("provider period must be positive");
      const int p = *period_;
      exact_.resize(static_cast<std::size_t>(p * 8));
      approx_.resize(exact_.size());
      for (int d = 0; d < p; ++d) {
        for (int s = 0; s < 4; ++s) {
          for (int kp = 0; kp < 2; ++kp) {
            if (s % 2 != 0) continue;
            // a representative with i - j = d, i + j + k = s, k = kp (mod 4)
            const int k = kp, ij = s - kp;  // i + j
            int diff = d;
            if ((ij + diff) % 2 != 0) diff += p;
            if ((ij + diff) % 2 != 0) continue;
            const int i = (ij + diff) / 2, j = (ij - diff) / 2;
            const auto n = slot(i, j, k);
            exact_[n] = fn_(i, j, k);
            approx_[n] = exact_[n].L.get_d();
          }
        }
      }
    }
  }

  /// L = R = 1/2.
  static LRProvider uniform() {
    return LRProvider([](int, int, int) { return LRPair{Rational(1, 2), Rational(1, 2)}; }, 1);
  }

  /// Closed-form coefficients from convex weights. Weights may sit on the
  /// boundary of [0, 1] (facet limits); interior families must satisfy
  /// prod (1/w - 1) = 1.
  static LRProvider weights(std::vector<Rational> lambda, std::vector<Rational> mu) {
    if (lambda.empty() || lambda.size() != mu.size()) throw std::invalid_argument("lambda/mu length mismatch");
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
    const int m = static_cast<int>(lambda.size());
    return LRProvider(
        [lambda = std::move(lambda), mu = std::move(mu)](int i, int j, int k) { return coeff_LR(lambda, mu, i, j, k); },
        2 * m);
  }

  static LRProvider toroidal(const ToroidalData& data) {
    ToroidalDerived derived(data);
    return weights(derived.lambda, derived.mu);
  }

  /// Uniform, 2x2 and m-toroidal data through their closed forms.
  static LRProvider from_initial(const InitialData& init) {
    auto tor = init.as_toroidal();
    if (!tor) throw std::invalid_argument("no closed-form coefficients for explicit data; use LRProvider::field");
    return toroidal(*tor);
  }

  /// Ratios of evolved T values; defined wherever the field holds all five values.
  static LRProvider field(TField f) {
    auto shared = std::make_shared<TField>(std::move(f));
    return LRProvider([shared](int i, int j, int k) {
      auto lr = coeff_LR_numeric(*shared, i, j, k);
      if (!lr) {
        throw std::out_of_range("L/R requested outside the evolved field at (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + ")");
      }
      return *lr;
    });
  }

  LRPair exact(int i, int j, int k) const {
    if (period_) return exact_[slot(i, j, k)];
    return fn_(i, j, k);
  }

  double L(int i, int j, int k) const {
    if (period_) return approx_[slot(i, j, k)];
    return fn_(i, j, k).L.get_d();
  }

  std::optional<int> period() const { return period_; }

 private:
  std::size_t slot(int i, int j, int k) const {
    const long d = floor_mod(static_cast<long>(i) - j, *period_);
    const long s = floor_mod(static_cast<long>(i) + j + k, 4);
    const long kp = floor_mod(k, 2);
    return static_cast<std::size_t>((d * 4 + s) * 2 + kp);
  }

  Fn fn_;
  std::optional<int> period_;
  std::vector<LRPair> exact_;
  std::vector<double> approx_;
};

enum class DensityMode { exact, floating, automatic };

/// One layer k of rho^{(eps,eta)}, stored on the box |i - eps|, |j - eta| <= k in
/// absolute lattice coordinates. Values vanish off the diamond
/// |i - eps| + |j - eta| <= k and on the wrong parity.
class DensityGrid {
 public:
  DensityGrid(int eps, int eta, int k, bool exact)
      : eps_(eps), eta_(eta), k_(k), exact_mode_(exact), width_(2 * k + 1) {
    const auto n = static_cast<std::size_t>(width_ * width_);
    if (exact) {
      exact_.assign(n, Rational(0));
    } else {
      approx_.assign(n, 0.0);
    }
  }

  int eps() const { return eps_; }
  int eta() const { return eta_; }
  int k() const { return k_; }
  bool is_exact() const { return exact_mode_; }
  int radius() const { return k_; }

  /// |i - eps| + |j - eta| <= k with i + j + k odd.
  bool in_support(int i, int j) const {
    return std::abs(i - eps_) + std::abs(j - eta_) <= k_ && floor_mod(static_cast<long>(i) + j + k_, 2) == 1;
  }

  Rational value(int i, int j) const {
    if (!exact_mode_) throw std::logic_error("exact value requested from a floating-point grid");
    if (!in_box(i, j)) return 0;
    return exact_[index(i, j)];
  }

  double approx(int i, int j) const {
    if (!in_box(i, j)) return 0.0;
    return exact_mode_ ? exact_[index(i, j)].get_d() : approx_[index(i, j)];
  }

  void set(int i, int j, Rational v) { exact_[index(i, j)] = std::move(v); }
  void set(int i, int j, double v) { approx_[index(i, j)] = v; }

  Rational layer_sum() const {
    if (!exact_mode_) throw std::logic_error("exact layer sum requested from a floating-point grid");
    Rational s = 0;
    for (const auto& v : exact_) s += v;
    return s;
  }

  double layer_sum_approx() const {
    if (exact_mode_) return layer_sum().get_d();
    double s = 0;
    for (double v : approx_) s += v;
    return s;
  }

  /// "i,j,value" over the support, sorted by (i, j). Exact values are num/den.
  void write_csv(std::ostream& os) const {
    os << "i,j,value\n";
    for (int i = eps_ - k_; i <= eps_ + k_; ++i) {
      for (int j = eta_ - k_; j <= eta_ + k_; ++j) {
        if (!in_support(i, j)) continue;
        os << i << ',' << j << ',';
        if (exact_mode_) {
          os << to_fraction_string(exact_[index(i, j)]);
        } else {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.17g", approx_[index(i, j)]);
          os << buf;
        }
        os << '\n';
      }
    }
  }

 private:
  bool in_box(int i, int j) const { return std::abs(i - eps_) <= k_ && std::abs(j - eta_) <= k_; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - eps_ + k_) * width_ + (j - eta_ + k_));
  }

  int eps_, eta_, k_;
  bool exact_mode_;
  int width_;
  std::vector<Rational> exact_;
  std::vector<double> approx_;
};

struct RecursionOptions {
  DensityMode mode = DensityMode::automatic;
  int float_threshold = 64;  // automatic mode goes floating above this k_max
  std::vector<int> keep;     // layers to return; empty keeps all
};

namespace detail {

template <class S>
S lr_value(const LRProvider& p, int i, int j, int k, bool left) {
  if constexpr (std::is_same_v<S, double>) {
    const double l = p.L(i, j, k);
    return left ? l : 1.0 - l;
  } else {
    auto lr = p.exact(i, j, k);
    return left ? lr.L : lr.R;
  }
}

template <class S>
std::vector<DensityGrid> run_recursion_impl(const LRProvider& p, int eps, int eta, int kmax,
                                            const std::vector<int>& keep) {
  constexpr bool exact = !std::is_same_v<S, double>;
  const int R = kmax + 1;
  const int W = 2 * R + 1;
  auto idx = [&](int di, int dj) { return static_cast<std::size_t>((di + R) * W + (dj + R)); };
  std::vector<S> prev(static_cast<std::size_t>(W * W), S(0)), cur = prev, next = prev;
  const int phi = static_cast<int>(floor_mod(static_cast<long>(eps) + eta + 1, 2));
  std::vector<DensityGrid> out;
  auto wanted = [&](int k) { return keep.empty() || std::find(keep.begin(), keep.end(), k) != keep.end(); };
  auto emit = [&](const std::vector<S>& layer, int k) {
    if (!wanted(k)) return;
    DensityGrid g(eps, eta, k, exact);
    for (int di = -k; di <= k; ++di) {
      for (int dj = -k; dj <= k; ++dj) {
        if (std::abs(di) + std::abs(dj) <= k) g.set(eps + di, eta + dj, layer[idx(di, dj)]);
      }
    }
    out.push_back(std::move(g));
  };
  // layers 0 and 1
  (phi == 0 ? prev : cur)[idx(0, 0)] = S(1);
  emit(prev, 0);
  if (kmax >= 1) emit(cur, 1);
  for (int k = 1; k < kmax; ++k) {
    const int r = k + 1;
    parallel_for(static_cast<std::size_t>(2 * r + 1), [&](std::size_t row) {
      const int di = static_cast<int>(row) - r;
      const int span = r - std::abs(di);
      for (int dj = -span; dj <= span; ++dj) {
        const int i = eps + di, j = eta + dj;
        if (floor_mod(static_cast<long>(i) + j + k + 1, 2) != 1) {
          next[idx(di, dj)] = S(0);
          continue;
        }
        S v = -prev[idx(di, dj)];
        const S lsum = cur[idx(di + 1, dj)] + cur[idx(di - 1, dj)];
        const S rsum = cur[idx(di, dj + 1)] + cur[idx(di, dj - 1)];
        if (lsum != S(0)) v += lr_value<S>(p, i, j, k, true) * lsum;
        if (rsum != S(0)) v += lr_value<S>(p, i, j, k, false) * rsum;
        next[idx(di, dj)] = std::move(v);
      }
    });
    std::swap(prev, cur);
    std::swap(cur, next);
    emit(cur, k + 1);
  }
  return out;
}

}  // namespace detail

/// Solves rho_{i,j,k+1} + rho_{i,j,k-1} = L (rho_{i+1,j,k} + rho_{i-1,j,k}) + R (rho_{i,j+1,k} + rho_{i,j-1,k})
/// from rho_{i,j,phi} = delta_{(i,j),(eps,eta)}, phi = eps + eta + 1 mod 2, and zero on the other initial layer.
/// Returns the layers 0..k_max (or the requested subset) in increasing k.
inline std::vector<DensityGrid> run_recursion(const LRProvider& p, std::pair<int, int> source, int kmax,
                                              const RecursionOptions& opt = {}) {
  if (kmax < 1) throw std::invalid_argument("run_recursion needs k_max >= 1");
  const bool exact = opt.mode == DensityMode::exact ||
                     (opt.mode == DensityMode::automatic && kmax <= opt.float_threshold);
  return exact ? detail::run_recursion_impl<Rational>(p, source.first, source.second, kmax, opt.keep)
               : detail::run_recursion_impl<double>(p, source.first, source.second, kmax, opt.keep);
}

/// 2 / (pi sqrt(1 - 2(u^2 + v^2))): the limit of k rho^{(0,0)} for uniform data
/// inside the arctic circle, up to the parity factor.
inline double asymptotic_uniform(double u, double v) {
  const double s = 1.0 - 2.0 * (u * u + v * v);
  if (!(s > 0)) throw std::domain_error("asymptotic_uniform: point on or outside the arctic circle");
  return 2.0 / (std::numbers::pi * std::sqrt(s));
}

}  // namespace octa
