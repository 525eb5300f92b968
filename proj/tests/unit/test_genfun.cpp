#include <gtest/gtest.h>

#include <random>

#include "octa/density/recursion.hpp"
#include "octa/exactmath/algebra.hpp"
#include "octa/exactmath/parse.hpp"
#include "octa/genfun/golden.hpp"
#include "octa/genfun/series.hpp"
#include "octa/genfun/system.hpp"

using namespace octa;

namespace {

const std::vector<std::string> kSym{"x", "y", "z", "sigma", "tau"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

MPoly golden_D() { return golden::denominator_2x2(); }

SystemSpec m3_spec() {
  return SystemSpec::weights({make_rational(1, 2), make_rational(1, 4), make_rational(3, 4)},
                             {make_rational(1, 2), make_rational(1, 5), make_rational(4, 5)});
}

Rational grid_at(const LaurentGrid& g, int i, int j) {
  auto it = g.find({i, j});
  return it == g.end() ? Rational(0) : it->second;
}

/// Series coefficients of z^1..z^order against the exact recursion from the source (0, 0).
void expect_series_matches_recursion(const SystemSpec& spec, int order) {
  auto series = series_extract(solve_genfun(spec).total(), order);
  auto layers = run_recursion(LRProvider::weights(spec.lambda, spec.mu), {0, 0}, order,
                              {DensityMode::exact, 64, {}});
  for (int k = 0; k <= order; ++k) {
    const auto& g = layers[static_cast<std::size_t>(k)];
    std::size_t support = 0;
    for (int i = -k - 1; i <= k + 1; ++i) {
      for (int j = -k - 1; j <= k + 1; ++j) {
        const Rational expected = g.in_support(i, j) ? g.value(i, j) : Rational(0);
        ASSERT_EQ(grid_at(series[static_cast<std::size_t>(k)], i, j), expected)
            << "m=" << spec.m << " k=" << k << " at (" << i << "," << j << ")";
        support += expected != 0;
      }
    }
    EXPECT_EQ(series[static_cast<std::size_t>(k)].size(), support) << "k=" << k;
  }
}

}  // namespace

TEST(SpecValidation, RejectsBadWeights) {
  EXPECT_THROW(SystemSpec::weights({make_rational(1, 3)}, {make_rational(1, 2)}), std::invalid_argument);
  EXPECT_THROW(SystemSpec::weights({make_rational(1, 2), make_rational(1, 3)}, {make_rational(1, 2), make_rational(1, 2)}),
               std::invalid_argument);
  EXPECT_THROW(SystemSpec::weights({make_rational(3, 2)}, {make_rational(1, 2)}), std::invalid_argument);
  EXPECT_NO_THROW(m3_spec());
  EXPECT_NO_THROW(SystemSpec::two_by_two(0, make_rational(1, 3)));
  SystemSpec bad = SystemSpec::symbolic_two_by_two();
  bad.m = 3;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(BuildSystem, UniformRowsSumToTheScalarEquation) {
  auto s = build_system(SystemSpec::uniform());
  ASSERT_EQ(s.size(), 4u);
  MPoly expected = parse_mpoly("x y + x y z^2 - 1/2 (y z + x^2 y z + x z + x y^2 z)", kXYZ);
  for (std::size_t c = 0; c < 4; ++c) {
    MPoly col(kXYZ);
    for (std::size_t r = 0; r < 4; ++r) col += s.A(r, c);
    EXPECT_EQ(col, expected) << "column " << c;
  }
  EXPECT_EQ(s.labels[2], "gamma_0");
  EXPECT_EQ(s.rhs[2], parse_mpoly("x y z", kXYZ));
}

TEST(BuildSystem, RowsVanishAtTheCriticalPoint) {
  std::vector<SystemMatrix> systems{build_system(SystemSpec::uniform()), build_system(SystemSpec::two_by_two(make_rational(1, 4), make_rational(2, 3))),
                                    build_system(m3_spec()), build_reduced_system(SystemSpec::symbolic_two_by_two()),
                                    build_direct_2x2_system(SystemSpec::symbolic_two_by_two())};
  for (const auto& s : systems) {
    std::vector<Rational> point(s.vars.size(), Rational(1));
    if (point.size() == 5) point[3] = make_rational(2, 7), point[4] = make_rational(5, 11);
    for (std::size_t r = 0; r < s.size(); ++r) {
      Rational sum = 0;
      for (std::size_t c = 0; c < s.size(); ++c) sum += s.A(r, c).evaluate(point);
      EXPECT_EQ(sum, 0) << "row " << s.labels[r];
    }
  }
}

TEST(BuildSystem, PeriodicWrapForMThree) {
  auto s = build_system(m3_spec());
  // alpha_2 row couples to gamma_0 through x^-1 (cleared: y z) with weight mu_2
  EXPECT_EQ(s.A(2, 6), parse_mpoly("-4/5 y z", kXYZ));
  // gamma_0 row couples to beta_2 through x (cleared: x^2 y z) with weight lambda_0
  EXPECT_EQ(s.A(6, 5), parse_mpoly("-1/2 x^2 y z", kXYZ));
}

TEST(Denominator, UniformMatchesScalarDenominator) {
  MPoly d = denominator(SystemSpec::uniform());
  MPoly scalar = parse_mpoly("2 x y + 2 x y z^2 - z (x^2 y + y + x y^2 + x)", kXYZ);
  EXPECT_TRUE(unit_equivalent(d, scalar));
  EXPECT_EQ(working_system(SystemSpec::uniform()).size(), 1u);
  // the full 4x4 system carries the scalar as a factor
  EXPECT_TRUE(divide_exact(unit_normal_form(system_determinant(build_system(SystemSpec::uniform()))), scalar).has_value());
  auto sol = solve_genfun(SystemSpec::uniform());
  EXPECT_TRUE(equivalent(sol.total(), RatFunc(parse_mpoly("2 x y z", kXYZ), scalar)));
}

TEST(Denominator, SymbolicTwoByTwoGoldens) {
  auto spec = SystemSpec::symbolic_two_by_two();
  MPoly d = denominator(spec);
  EXPECT_TRUE(unit_equivalent(d, golden_D()));
  EXPECT_TRUE(unit_equivalent(unit_normal_form(system_determinant(build_direct_2x2_system(spec))), d));

  auto sol = solve_genfun(spec);
  EXPECT_TRUE(unit_equivalent(sol.det, golden_D()));
  for (const auto& r : sol.residual()) EXPECT_TRUE(r.is_zero());

  auto direct = solve_system(build_direct_2x2_system(spec), 0);
  EXPECT_TRUE(equivalent(direct.total(), sol.total()));
}

TEST(Denominator, SymbolicSpecializesToNumeric) {
  auto sym = solve_genfun(SystemSpec::symbolic_two_by_two()).total();
  const Rational s = make_rational(1, 4), t = make_rational(1, 3);
  auto num = solve_genfun(SystemSpec::two_by_two(s, t)).total();
  std::vector<Rational> p{make_rational(2, 3), make_rational(5, 7), make_rational(3, 11), s, t};
  std::vector<Rational> q{p[0], p[1], p[2]};
  EXPECT_EQ(sym.evaluate(p), num.evaluate(q));
}

TEST(Denominator, SymmetricUnderSwappingXAndY) {
  MPoly d = denominator(SystemSpec::symbolic_two_by_two());
  MPoly swapped = substitute(d, {{"x", MPoly::variable(kSym, "y")}, {"y", MPoly::variable(kSym, "x")}});
  EXPECT_TRUE(unit_equivalent(d, swapped));
}

TEST(Denominator, FullEightByEightContainsReducedFactor) {
  auto spec = SystemSpec::two_by_two(make_rational(1, 4), make_rational(1, 3));
  MPoly full = system_determinant(build_system(spec));
  MPoly reduced = system_determinant(build_reduced_system(spec));
  EXPECT_TRUE(divide_exact(full, reduced).has_value());
  EXPECT_TRUE(unit_equivalent(unit_normal_form(reduced),
                              unit_normal_form(substitute(golden_D(), {{"sigma", make_rational(1, 4)}, {"tau", make_rational(1, 3)}}))));
}

TEST(Denominator, InterpolationEqualsFractionFreeForMThree) {
  auto s = build_system(m3_spec());
  MPoly interp = det_by_interpolation(s.A, row_degree_bounds(s.A));
  MPoly ff = det_fraction_free(s.A);
  EXPECT_EQ(interp, ff);
  EXPECT_EQ(system_determinant(s), ff);
}

TEST(Denominator, MatchesNumericDeterminantAtRandomPoints) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (const auto& spec : {SystemSpec::uniform(), SystemSpec::two_by_two(make_rational(1, 4), make_rational(1, 3)), m3_spec()}) {
    auto s = working_system(spec);
    MPoly d = system_determinant(s);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> p{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
                              make_rational(num(rng), den(rng))};
      EXPECT_EQ(d.evaluate(p), det_rational(evaluate_matrix(unify_variables(s.A), p)));
    }
  }
}

TEST(SolveGenfun, ResidualVanishes) {
  for (const auto& spec : {SystemSpec::uniform(), SystemSpec::two_by_two(make_rational(1, 4), make_rational(1, 3)), m3_spec()}) {
    auto sol = solve_genfun(spec);
    for (const auto& r : sol.residual()) EXPECT_TRUE(r.is_zero()) << "m=" << spec.m;
  }
}

TEST(SolveGenfun, FacetClosedForm) {
  for (const Rational& tau : {make_rational(1, 3), make_rational(1, 2)}) {
    auto sol = solve_genfun(SystemSpec::two_by_two(0, tau));
    MPoly den = parse_mpoly("(x y-z^2)(x-y z^2)(y-x z^2)(1-x y z^2)", kXYZ);
    MPoly body = parse_mpoly(
        "x^2 y^2 - x y z^2 - x^3 y z^2 - x^2 y^2 z^2 - x y^3 z^2 - x^3 y^3 z^2 - x^2 y z^3 - x y^2 z^3 - x^3 y^2 z^3"
        " - x^2 y^3 z^3 + x^2 z^4 + x^2 y^2 z^4 + x^2 y^4 z^4 + x^2 y z^5 + x y^2 z^5 + x^3 y^2 z^5 + x^2 y^3 z^5"
        " + x^2 y^2 z^6",
        kXYZ);
    MPoly num = parse_mpoly("z", kXYZ) * body - tau * parse_mpoly("z^5 (x^2-y^2)(1-x^2 y^2)", kXYZ);
    EXPECT_TRUE(equivalent(sol.total(), RatFunc(num, den))) << "tau=" << tau;
  }
}

TEST(Series, UniformFirstLayerIsTheSource) {
  auto s = series_extract(solve_genfun(SystemSpec::uniform()).total(), 3);
  EXPECT_TRUE(s[0].empty());
  EXPECT_EQ(s[1], (LaurentGrid{{{0, 0}, Rational(1)}}));
  EXPECT_EQ(grid_at(s[2], 1, 0), Rational(1, 2));
  EXPECT_THROW(series_extract(solve_genfun(SystemSpec::uniform()).total(), 33), std::out_of_range);
  EXPECT_THROW(series_extract(solve_genfun(SystemSpec::symbolic_two_by_two()).total(), 3), std::invalid_argument);
}

TEST(Series, ShiftedSourceIdentityAgainstRecursion) {
  // 1 - z rho^(0,0) is the response to the face (0, 1), translated to the origin.
  auto rho = solve_genfun(SystemSpec::uniform()).total();
  const MPoly one = MPoly::constant(1, kXYZ);
  RatFunc other = RatFunc::polynomial(one) - RatFunc::laurent_monomial(kXYZ, {0, 0, 1}, 1) * rho;
  auto series = series_extract(other, 8);
  auto layers = run_recursion(LRProvider::uniform(), {0, 1}, 8, {DensityMode::exact, 64, {}});
  for (int k = 0; k <= 8; ++k) {
    for (int i = -k - 1; i <= k + 1; ++i) {
      for (int j = -k - 1; j <= k + 1; ++j) {
        const auto& g = layers[static_cast<std::size_t>(k)];
        const Rational expected = g.in_support(i, j + 1) ? g.value(i, j + 1) : Rational(0);
        EXPECT_EQ(grid_at(series[static_cast<std::size_t>(k)], i, j), expected) << k << " " << i << " " << j;
      }
    }
  }
}

TEST(Series, MatchesRecursionUniform) { expect_series_matches_recursion(SystemSpec::uniform(), 12); }

TEST(Series, MatchesRecursionTwoByTwo) {
  expect_series_matches_recursion(SystemSpec::two_by_two(make_rational(1, 4), make_rational(1, 3)), 12);
  expect_series_matches_recursion(SystemSpec::two_by_two(make_rational(2, 3), make_rational(1, 7)), 10);
}

TEST(Series, MatchesRecursionMThree) { expect_series_matches_recursion(m3_spec(), 12); }
