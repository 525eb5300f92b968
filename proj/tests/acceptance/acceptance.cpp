#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "octa/arctic/pipeline.hpp"
#include "octa/density/facet.hpp"
#include "octa/exactmath/parse.hpp"
#include "octa/genfun/golden.hpp"
#include "octa/genfun/series.hpp"
#include "octa/verify/suites.hpp"

using namespace octa;

namespace {

// tolerances and budgets
constexpr std::uint64_t kSeed = 20240611;
constexpr double kAsymptoticRel = 0.05;
constexpr double kLayerSumRel = 1e-9;
constexpr double kBudget1 = 1, kBudget2 = 60, kBudget6 = 120, kBudget7 = 5, kBudget9 = 900, kBudget11 = 120;

const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kUV{"u", "v"};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    note(std::string(ok ? "" : "FAILED ") + what);
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string fmt(double v, const char* spec = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void budget(Outcome& o, const Stopwatch& w, double limit) {
  const double s = w.seconds();
  o.require(s < limit, "time " + fmt(s) + " s < " + fmt(limit) + " s");
}

void report_suite(Outcome& o, const SuiteReport& r) {
  o.require(r.passed(), r.suite + ": " + std::to_string(r.checks) + " checks, " + std::to_string(r.failures) + " failures");
  if (!r.passed()) o.note("first failure " + r.failed.front().dump());
}

MPoly at_sigma_tau(const MPoly& p, const Rational& s, const Rational& t) {
  return p.partial_evaluate("sigma", s).partial_evaluate("tau", t).trimmed().lift(kXYZ);
}

Rational grid_at(const LaurentGrid& g, int i, int j) {
  auto it = g.find({i, j});
  return it == g.end() ? Rational(0) : it->second;
}

/// First coefficient where the series of f differs from the exact recursion from (0, 0), if any.
std::optional<std::string> series_mismatch(const RatFunc& f, const SystemSpec& spec, int order) {
  auto series = series_extract(f, order);
  auto layers = run_recursion(LRProvider::weights(spec.lambda, spec.mu), {0, 0}, order, {DensityMode::exact, 64, {}});
  for (int k = 0; k <= order; ++k) {
    const auto& g = layers[static_cast<std::size_t>(k)];
    const auto& s = series[static_cast<std::size_t>(k)];
    for (const auto& [ij, v] : s) {
      if (!g.in_support(ij.first, ij.second) && v != 0) {
        return "z^" + std::to_string(k) + " (" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "): series " +
               to_fraction_string(v) + ", recursion 0";
      }
    }
    for (int i = -k - 1; i <= k + 1; ++i) {
      for (int j = -k - 1; j <= k + 1; ++j) {
        const Rational want = g.in_support(i, j) ? g.value(i, j) : Rational(0);
        const Rational got = grid_at(s, i, j);
        if (got != want) {
          return "z^" + std::to_string(k) + " (" + std::to_string(i) + "," + std::to_string(j) + "): series " +
                 to_fraction_string(got) + ", recursion " + to_fraction_string(want);
        }
      }
    }
  }
  return std::nullopt;
}

Rational octahedron_residual(const std::function<Rational(int, int, int)>& T, int i, int j, int k) {
  return T(i, j, k + 1) * T(i, j, k - 1) - T(i + 1, j, k) * T(i - 1, j, k) - T(i, j + 1, k) * T(i, j - 1, k);
}

// ---- criteria ----------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  Stopwatch w;
  for (int k = 2; k <= 4; ++k) {
    const auto g = build_aztec(0, 1, k);
    std::size_t count = 0;
    enumerate_matchings(g, [&](const Matching&) { ++count; });
    const std::size_t expected = std::size_t{1} << (k * (k - 1) / 2);
    const Rational z = partition_function(g, [](int, int) { return Rational(1); }).Z;
    o.require(count == expected && z == static_cast<long>(expected),
              "k=" + std::to_string(k) + ": " + std::to_string(count) + " matchings, Z=" + to_fraction_string(z));
  }
  budget(o, w, kBudget1);
  return o;
}

Outcome criterion2() {
  Outcome o;
  Stopwatch w;
  report_suite(o, verify_tz(0, 4, 20, kSeed));
  budget(o, w, kBudget2);
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937 rng(static_cast<std::mt19937::result_type>(kSeed));
  long points = 0, bad = 0;
  auto sweep = [&](const std::function<Rational(int, int, int)>& T) {
    for (int k = 1; k < 8; ++k) {
      for (int i = -8; i <= 8; ++i) {
        for (int j = -8; j <= 8; ++j) {
          if (LatticePoint{i, j, k}.admissible()) continue;
          ++points;
          bad += octahedron_residual(T, i, j, k) != 0;
        }
      }
    }
  };
  for (int t = 0; t < 5; ++t) {
    const Rational a = detail::random_weight(rng), b = detail::random_weight(rng);
    const Rational c = detail::random_weight(rng), d = detail::random_weight(rng);
    sweep([&](int i, int j, int k) { return closed_form_22(a, b, c, d, {i, j, k}); });
  }
  o.require(bad == 0, "2x2: " + std::to_string(points) + " points, " + std::to_string(bad) + " nonzero residuals");
  points = bad = 0;
  for (int m = 1; m <= 4; ++m) {
    for (int t = 0; t < 5; ++t) {
      const auto data = detail::random_toroidal(rng, m);
      const ToroidalDerived der(data);
      sweep([&](int i, int j, int k) { return closed_form_mtoroidal(data, {i, j, k}, der); });
    }
  }
  o.require(bad == 0, "m<=4: " + std::to_string(points) + " points, " + std::to_string(bad) + " nonzero residuals");
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int m = 1; m <= 4; ++m) report_suite(o, verify_lr(m, 8, 3, kSeed + static_cast<std::uint64_t>(m)));
  return o;
}

Outcome criterion5() {
  Outcome o;
  report_suite(o, verify_density(4, 3, kSeed));
  return o;
}

Outcome criterion6() {
  Outcome o;
  Stopwatch w;
  const auto spec = SystemSpec::symbolic_two_by_two();
  const MPoly d = denominator(spec);
  o.require(unit_equivalent(d, golden::denominator_2x2()), "denominator unit-equivalent to the printed D");
  const auto sol = solve_genfun(spec);
  const MPoly q = golden::numerator_2x2();
  o.require(unit_equivalent(sol.total_numerator, q), "numerator unit-equivalent to the printed Q");
  o.require(equivalent(sol.total(), RatFunc(q, golden::denominator_2x2())), "rho = Q/D as rational functions");
  const Rational s = make_rational(1, 4), t = make_rational(1, 3);
  const auto probe = SystemSpec::two_by_two(s, t);
  const auto printed = series_mismatch(RatFunc(at_sigma_tau(q, s, t), at_sigma_tau(golden::denominator_2x2(), s, t)), probe, 4);
  const auto computed = series_mismatch(solve_genfun(probe).total(), probe, 4);
  o.note("at sigma=1/4, tau=1/3 vs recursion: printed Q/D " + (printed ? "first differs at " + *printed : std::string("agrees")) +
         ", computed " + (computed ? "first differs at " + *computed : std::string("agrees")));
  budget(o, w, kBudget6);
  return o;
}

Outcome criterion7() {
  Outcome o;
  Stopwatch w;
  const auto c = arctic_curve(SystemSpec::uniform());
  o.require(unit_equivalent(c.P, parse_mpoly("2 (u^2 + v^2) - 1", kUV)), "P = " + c.P.to_string());
  budget(o, w, kBudget7);
  return o;
}

Outcome criterion8() {
  Outcome o;
  Stopwatch w;
  const auto sym = fortress_curve();
  o.require(unit_equivalent(sym.P, golden_curve("fortress").P), "symbolic in alpha");
  for (const Rational& a : {Rational(0), make_rational(1, 2), make_rational(19, 20), Rational(1)}) {
    o.require(unit_equivalent(fortress_curve(a).P, golden_curve("fortress", a).P), "alpha=" + to_fraction_string(a));
  }
  o.require(unit_equivalent(fortress_curve(1).P, parse_mpoly("8 (u^2 + v^2)^3 (2 u^2 + 2 v^2 - 1)", kUV)), "P_1 factorization");
  o.require(unit_equivalent(fortress_curve(0).P, parse_mpoly("(4 u^2 - 1)^2 (4 v^2 - 1)^2", kUV)), "P_0 factorization");
  o.note("time " + fmt(w.seconds()) + " s");
  return o;
}

Outcome appendix(const std::string& name, const SystemSpec& spec) {
  Outcome o;
  Stopwatch w;
  const auto c = arctic_curve(spec);
  const auto cmp = compare_curves(c.P, golden_curve(name).P);
  o.require(cmp.unit_equivalent && cmp.computed_divides_golden && cmp.golden_divides_computed,
            name + ": unit " + (cmp.unit ? to_string(*cmp.unit) : std::string("none")) + ", computed | golden " +
                (cmp.computed_divides_golden ? "yes" : "no") + ", golden | computed " +
                (cmp.golden_divides_computed ? "yes" : "no"));
  budget(o, w, kBudget9);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto m3 = appendix("appendix_m3", SystemSpec::weights({make_rational(1, 2), make_rational(1, 4), make_rational(3, 4)},
                                                              {make_rational(1, 2), make_rational(1, 5), make_rational(4, 5)}));
  const auto m4 = appendix("appendix_m4", SystemSpec::weights({make_rational(1, 2), make_rational(1, 2), make_rational(9, 10), make_rational(1, 10)},
                                                              {make_rational(1, 2), make_rational(1, 2), make_rational(1, 2), make_rational(1, 2)}));
  o.pass = m3.pass && m4.pass;
  o.detail = m3.detail + "; " + m4.detail;
  return o;
}

Outcome criterion10() {
  Outcome o;
  const std::vector<std::pair<std::string, SystemSpec>> specs{
      {"m=1", SystemSpec::uniform()},
      {"m=2", SystemSpec::two_by_two(make_rational(1, 4), make_rational(1, 3))},
      {"m=3", SystemSpec::weights({make_rational(1, 2), make_rational(1, 4), make_rational(3, 4)},
                                  {make_rational(1, 2), make_rational(1, 5), make_rational(4, 5)})}};
  for (const auto& [name, spec] : specs) {
    const auto bad = series_mismatch(solve_genfun(spec).total(), spec, 12);
    o.require(!bad, name + (bad ? " differs at " + *bad : std::string(" matches to z^12")));
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  Stopwatch w;
  const int k = 211;
  auto layers = run_recursion(LRProvider::uniform(), {0, 0}, k + 2, {DensityMode::floating, 64, {k, k + 2}});
  const auto& g = layers[0];
  const auto& g2 = layers[1];
  double worst = 0, worst_avg = 0;
  long points = 0;
  for (int i = -k; i <= k; ++i) {
    for (int j = -k; j <= k; ++j) {
      const double u = static_cast<double>(i) / k, v = static_cast<double>(j) / k;
      if (!g.in_support(i, j) || std::abs(u) > 0.3 || std::abs(v) > 0.3) continue;
      ++points;
      const double f = asymptotic_uniform(u, v);
      worst = std::max(worst, std::abs(k * g.approx(i, j) - f) / f);
      const double avg = 0.5 * (k * g.approx(i, j) + (k + 2) * g2.approx(i, j));
      worst_avg = std::max(worst_avg, std::abs(avg - f) / f);
    }
  }
  o.require(worst <= kAsymptoticRel, "k=211: worst relative error " + fmt(worst) + " over " + std::to_string(points) +
                                         " points (tolerance " + fmt(kAsymptoticRel) + ")");
  o.note("diagnostic: mean of k=211 and k=213 has worst error " + fmt(worst_avg));
  const auto big = run_recursion(LRProvider::uniform(), {0, 0}, 500, {DensityMode::floating, 64, {500}});
  const double rel = std::abs(big[0].layer_sum_approx() - 500) / 500;
  o.require(rel <= kLayerSumRel, "k=500 float layer sum relative error " + fmt(rel));
  const auto ex = run_recursion(LRProvider::uniform(), {0, 0}, 50, {DensityMode::exact, 64, {}});
  bool exact_ok = true;
  for (const auto& layer : ex) exact_ok = exact_ok && layer.layer_sum() == layer.k();
  o.require(exact_ok, "exact layer sums = k for k <= 50");
  budget(o, w, kBudget11);
  return o;
}

Outcome criterion12() {
  Outcome o;
  for (const Rational& tau : {make_rational(1, 3), make_rational(1, 2)}) {
    const auto p = LRProvider::weights({Rational(1) - tau, tau}, {Rational(1), Rational(0)});
    auto a = run_recursion(p, {0, 0}, 7, {DensityMode::exact, 64, {}});
    auto b = run_recursion(p, {1, 1}, 7, {DensityMode::exact, 64, {}});
    for (int k = 1; k <= 2; ++k) {
      for (auto v : {FacetVariant::U_4k_minus_1, FacetVariant::U_4k_minus_3, FacetVariant::V_4k_minus_1, FacetVariant::V_4k_minus_3}) {
        const int n = facet_layer(v, k);
        const bool u = v == FacetVariant::U_4k_minus_1 || v == FacetVariant::U_4k_minus_3;
        const bool ok = facet_projection(a[static_cast<std::size_t>(n)], b[static_cast<std::size_t>(n)], u) == facet_formula(v, k, tau);
        if (!ok) o.require(false, "layer " + std::to_string(n) + " tau=" + to_fraction_string(tau));
      }
    }
  }
  if (o.pass) o.note("U/V brackets equal the sigma=0 projections, layers 1..7, tau in {1/3, 1/2}");
  return o;
}

Outcome criterion13() {
  Outcome o;
  const std::vector<std::tuple<Rational, Rational, std::pair<int, int>>> cases{
      {make_rational(1, 3), make_rational(1, 3), {1, 4}},
      {make_rational(1, 3), make_rational(1, 5), {1, 4}},
      {make_rational(1, 2), make_rational(1, 3), {2, 4}},
      {make_rational(1, 2), make_rational(1, 5), {2, 4}}};
  for (const auto& [s, t, want] : cases) {
    const auto sol = solve_genfun(SystemSpec::two_by_two(s, t));
    const auto got = vanishing_order_probe(sol.total_numerator, sol.det);
    o.require(got == want, "sigma=" + to_fraction_string(s) + " tau=" + to_fraction_string(t) + ": (" +
                               std::to_string(got.first) + "," + std::to_string(got.second) + ")");
  }
  const auto printed = vanishing_order_probe(at_sigma_tau(golden::numerator_2x2(), make_rational(1, 3), make_rational(1, 3)),
                                             at_sigma_tau(golden::denominator_2x2(), make_rational(1, 3), make_rational(1, 3)));
  o.note("diagnostic: printed Q/D at sigma=tau=1/3 gives (" + std::to_string(printed.first) + "," +
         std::to_string(printed.second) + ")");
  return o;
}

}  // namespace

/// Prints one PASS/FAIL line per criterion. Exit status is 0 when every
/// criterion passes, or, with --expect-fail LIST, when exactly the listed
/// criteria fail.
int main(int argc, char** argv) {
  std::set<int> expected;
  std::string report_path = "acceptance_report.txt";
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--expect-fail" && a + 1 < argc) {
      std::stringstream ss(argv[++a]);
      std::string item;
      while (std::getline(ss, item, ',')) expected.insert(std::stoi(item));
    } else if (arg == "--report" && a + 1 < argc) {
      report_path = argv[++a];
    } else {
      std::cerr << "usage: acceptance [--expect-fail N,M,...] [--report PATH]\n";
      return 2;
    }
  }

  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2,  criterion3,  criterion4, criterion5,
                                                       criterion6, criterion7,  criterion8,  criterion9, criterion10,
                                                       criterion11, criterion12, criterion13};
  std::ofstream report(report_path);
  std::set<int> failed;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const int id = static_cast<int>(n + 1);
    Outcome o;
    Stopwatch w;
    try {
      o = criteria[n]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("exception: ") + e.what());
    }
    if (!o.pass) failed.insert(id);
    const std::string line = "criterion " + std::to_string(id) + ": " + (o.pass ? "PASS" : "FAIL") + " [" +
                             fmt(w.seconds(), "%.2f") + " s] " + o.detail;
    std::cout << line << std::endl;
    report << line << "\n";
  }
  const std::string summary = std::to_string(criteria.size() - failed.size()) + "/" + std::to_string(criteria.size()) + " criteria pass";
  std::cout << summary << std::endl;
  report << summary << "\n";
  if (failed == expected) return 0;
  for (int id : failed) {
    if (!expected.count(id)) std::cout << "unexpected FAIL: criterion " << id << "\n";
  }
  for (int id : expected) {
    if (!failed.count(id)) std::cout << "expected FAIL did not occur: criterion " << id << "\n";
  }
  return 1;
}
