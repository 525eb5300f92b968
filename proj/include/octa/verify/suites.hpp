#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "octa/density/recursion.hpp"
#include "octa/dimer/aztec.hpp"
#include "octa/exactmath/serialize.hpp"
#include "octa/tsystem/closed_form.hpp"

namespace octa {

/// Outcome of one verification suite: counts plus the first few failures.
struct SuiteReport {
  std::string suite;
  nlohmann::json inputs;
  long checks = 0;
  long failures = 0;
  nlohmann::json failed = nlohmann::json::array();

  bool passed() const { return failures == 0 && checks > 0; }

  void check(bool ok, nlohmann::json what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (failed.size() < 20) failed.push_back(std::move(what));
  }

  nlohmann::json to_json() const {
    return {{"suite", suite}, {"inputs", inputs}, {"checks", checks}, {"failures", failures}, {"failed", failed},
            {"passed", passed()}};
  }
};

/// Largest order the brute-force matching enumeration accepts.
inline constexpr int kMaxEnumerationOrder = 6;

namespace detail {

inline Rational random_weight(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5);
  return make_rational(num(rng), den(rng));
}

inline ToroidalData random_toroidal(std::mt19937& rng, int m) {
  ToroidalData d{m, {}, {}, {}, {}};
  for (auto* seq : {&d.a, &d.b, &d.c, &d.d}) {
    for (int n = 0; n < m; ++n) seq->push_back(random_weight(rng));
  }
  return d;
}

inline std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(to_fraction_string(r));
  return out;
}

inline nlohmann::json toroidal_json(const ToroidalData& d) {
  return {{"m", d.m}, {"a", strings(d.a)}, {"b", strings(d.b)}, {"c", strings(d.c)}, {"d", strings(d.d)}};
}

/// Periods to try: the given m, or 1..3 when m == 0.
inline int period_for(int m, int trial) { return m > 0 ? m : 1 + trial % 3; }

}  // namespace detail

/// Partition function = closed form = evolve, on random m-toroidal data.
inline SuiteReport verify_tz(int m, int kmax, int trials, std::uint64_t seed) {
  if (kmax < 2 || kmax > kMaxEnumerationOrder) {
    throw std::invalid_argument("tz: kmax must lie in [2, " + std::to_string(kMaxEnumerationOrder) + "]");
  }
  SuiteReport r{"tz", {{"m", m}, {"kmax", kmax}, {"trials", trials}, {"seed", seed}}};
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  for (int trial = 0; trial < trials; ++trial) {
    auto data = detail::random_toroidal(rng, detail::period_for(m, trial));
    auto init = InitialData::m_toroidal(data);
    auto field = evolve(init, 0, 0, kmax + 1);
    const ToroidalDerived der(data);
    FaceWeights w = [&](int a, int b) { return init.t(a, b); };
    for (int k = 2; k <= kmax; ++k) {
      for (const LatticePoint p : {LatticePoint{0, 1, k}, LatticePoint{1, 0, k}, LatticePoint{0, 0, k}, LatticePoint{1, 1, k}}) {
        if (!p.admissible() || !field.contains(p.i, p.j, p.k)) continue;
        const Rational z = partition_function(build_aztec(p.i, p.j, p.k), w).Z;
        const Rational cf = closed_form_mtoroidal(data, p, der);
        const Rational ev = field.at(p.i, p.j, p.k);
        r.check(z == cf && cf == ev, {{"identity", "Z = T_closed = T_evolve"}, {"point", {p.i, p.j, p.k}},
                                      {"data", detail::toroidal_json(data)}, {"Z", to_fraction_string(z)},
                                      {"closed_form", to_fraction_string(cf)}, {"evolve", to_fraction_string(ev)}});
      }
    }
  }
  return r;
}

/// Closed-form L against ratios of the evolved field; L + R = 1; prod (1/w - 1) = 1.
inline SuiteReport verify_lr(int m, int kmax, int trials, std::uint64_t seed) {
  if (kmax < 1) throw std::invalid_argument("lr: kmax must be positive");
  SuiteReport r{"lr", {{"m", m}, {"kmax", kmax}, {"trials", trials}, {"seed", seed}}};
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  for (int trial = 0; trial < trials; ++trial) {
    auto data = detail::random_toroidal(rng, detail::period_for(m, trial));
    auto field = evolve(InitialData::m_toroidal(data), 0, 0, kmax + 1);
    const ToroidalDerived der(data);
    r.check(convexity_product(der.lambda) == 1 && convexity_product(der.mu) == 1,
            {{"identity", "prod(1/w - 1) = 1"}, {"data", detail::toroidal_json(data)}});
    for (int k = 1; k <= kmax; ++k) {
      for (int i = -kmax; i <= kmax; ++i) {
        for (int j = -kmax; j <= kmax; ++j) {
          if (floor_mod(i + j + k, 2)) continue;
          auto num = coeff_LR_numeric(field, i, j, k);
          if (!num) continue;
          const auto cf = coeff_LR(der, i, j, k);
          r.check(cf.L == num->L && cf.L + cf.R == 1 && num->L + num->R == 1,
                  {{"identity", "L_closed = L_ratio, L + R = 1"}, {"point", {i, j, k}}, {"data", detail::toroidal_json(data)},
                   {"closed_form", to_fraction_string(cf.L)}, {"ratio", to_fraction_string(num->L)}});
        }
      }
    }
  }
  return r;
}

/// The evolved field is invariant under the m-toroidal shifts.
inline SuiteReport verify_periodicity(int m, int kmax, int trials, std::uint64_t seed) {
  if (kmax < 1) throw std::invalid_argument("periodicity: kmax must be positive");
  SuiteReport r{"periodicity", {{"m", m}, {"kmax", kmax}, {"trials", trials}, {"seed", seed}}};
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  for (int trial = 0; trial < trials; ++trial) {
    const int period = detail::period_for(m, trial);
    auto data = detail::random_toroidal(rng, period);
    auto violations = check_toroidal_periodicity(evolve(InitialData::m_toroidal(data), 0, 0, kmax), period);
    nlohmann::json first = nullptr;
    if (!violations.empty()) {
      const auto& v = violations.front();
      first = {{"point", {v.point.i, v.point.j, v.point.k}}, {"shift", {v.shift.i, v.shift.j, v.shift.k}},
               {"quantity", std::string(1, v.quantity)}};
    }
    r.check(violations.empty(), {{"identity", "toroidal periodicity"}, {"data", detail::toroidal_json(data)},
                                 {"violations", violations.size()}, {"first", first}});
  }
  return r;
}

/// Exact density recursion against the dimer oracle, every face of every
/// graph up to kmax, for uniform data and `trials` random 2x2 datasets.
inline SuiteReport verify_density(int kmax, int trials, std::uint64_t seed) {
  if (kmax < 2 || kmax > kMaxEnumerationOrder) {
    throw std::invalid_argument("density: kmax must lie in [2, " + std::to_string(kMaxEnumerationOrder) + "]");
  }
  SuiteReport r{"density", {{"kmax", kmax}, {"trials", trials}, {"seed", seed}}};
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::vector<InitialData> datasets{InitialData::uniform()};
  for (int t = 0; t < trials; ++t) {
    auto a = detail::random_weight(rng), b = detail::random_weight(rng);
    auto c = detail::random_weight(rng), d = detail::random_weight(rng);
    datasets.push_back(InitialData::two_by_two(a, b, c, d));
  }
  for (const auto& init : datasets) {
    const auto provider = LRProvider::from_initial(init);
    FaceWeights w = [&](int a, int b) { return init.t(a, b); };
    const auto abcd = std::vector<Rational>{init.t(0, 0), init.t(1, 1), init.t(0, 1), init.t(1, 0)};
    for (const auto& [ci, cj] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
      for (int k = 2; k <= kmax; ++k) {
        if ((ci + cj + k) % 2 == 0) continue;
        auto g = build_aztec(ci, cj, k);
        for (const auto& f : g.faces) {
          const Rational rec = run_recursion(provider, f.coord, k, {DensityMode::exact, 64, {k}}).at(0).value(ci, cj);
          const Rational oracle = density_oracle(g, w, f.coord);
          r.check(rec == oracle, {{"identity", "recursion = dimer oracle"}, {"graph", {ci, cj, k}},
                                  {"face", {f.coord.first, f.coord.second}}, {"abcd", detail::strings(abcd)},
                                  {"recursion", to_fraction_string(rec)}, {"oracle", to_fraction_string(oracle)}});
        }
      }
    }
  }
  return r;
}

/// prod (1/w_i - 1) = 1 for each given family.
inline SuiteReport verify_relamu(const std::vector<Rational>& lambda, const std::vector<Rational>& mu) {
  SuiteReport r{"relamu", {{"lambda", detail::strings(lambda)}, {"mu", detail::strings(mu)}}};
  for (const auto* fam : {&lambda, &mu}) {
    if (fam->empty()) continue;
    for (const auto& w : *fam) {
      if (w <= 0 || w >= 1) throw std::invalid_argument("relamu: weights must lie in (0, 1)");
    }
    const Rational p = convexity_product(*fam);
    r.check(p == 1, {{"identity", "prod(1/w - 1) = 1"}, {"family", detail::strings(*fam)}, {"product", to_fraction_string(p)}});
  }
  return r;
}

}  // namespace octa
