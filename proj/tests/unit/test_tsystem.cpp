#include <gtest/gtest.h>

#include <random>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "octa/tsystem/closed_form.hpp"

using namespace octa;

namespace {

Rational random_positive(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5);
  return make_rational(num(rng), den(rng));
}

ToroidalData random_toroidal(std::mt19937& rng, int m) {
  ToroidalData d{m, {}, {}, {}, {}};
  for (int i = 0; i < m; ++i) {
    d.a.push_back(random_positive(rng));
    d.b.push_back(random_positive(rng));
    d.c.push_back(random_positive(rng));
    d.d.push_back(random_positive(rng));
  }
  return d;
}

Rational octahedron_residual(const std::function<Rational(int, int, int)>& T, int i, int j, int k) {
  return T(i, j, k + 1) * T(i, j, k - 1) - T(i + 1, j, k) * T(i - 1, j, k) - T(i, j + 1, k) * T(i, j - 1, k);
}

}  // namespace

TEST(LatticePoint, Parity) {
  EXPECT_TRUE((LatticePoint{0, 0, 1}.admissible()));
  EXPECT_FALSE((LatticePoint{0, 0, 2}.admissible()));
  EXPECT_TRUE((LatticePoint{-1, 0, 0}.admissible()));
  EXPECT_THROW(admissible_point(0, 0, 0), std::invalid_argument);
}

TEST(InitialData, TwoByTwoPatternAndToroidalDictionary) {
  auto init = InitialData::two_by_two(2, 3, 5, 7);
  EXPECT_EQ(init.t(0, 0), 2);
  EXPECT_EQ(init.t(-1, 1), 3);
  EXPECT_EQ(init.t(2, -1), 5);
  EXPECT_EQ(init.t(-3, 4), 7);
  auto tor = init.as_toroidal();
  ASSERT_TRUE(tor);
  for (int i = -5; i <= 5; ++i) {
    for (int j = -5; j <= 5; ++j) EXPECT_EQ(tor->t(i, j), init.t(i, j)) << i << "," << j;
  }
  EXPECT_THROW(InitialData::two_by_two(1, 0, 1, 1), std::invalid_argument);
}

TEST(InitialData, ToroidalPeriodsAndFundamentalDomain) {
  std::mt19937 rng(3);
  auto d = random_toroidal(rng, 3);
  for (int i = -6; i <= 6; ++i) {
    for (int j = -6; j <= 6; ++j) {
      EXPECT_EQ(d.t(i + 3, j - 3), d.t(i, j));
      EXPECT_EQ(d.t(i + 2, j + 2), d.t(i, j));
    }
  }
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(d.t(i + 1, -i), d.a[i]);
    EXPECT_EQ(d.t(i + 2, -i + 1), d.b[i]);
    EXPECT_EQ(d.t(i, -i), d.c[i]);
    EXPECT_EQ(d.t(i + 1, -i + 1), d.d[i]);
  }
}

TEST(InitialData, ExplicitWithPeriods) {
  std::map<std::pair<long, long>, Rational> vals{{{0, 0}, 2}, {{1, 0}, 3}, {{0, 1}, 5}, {{1, 1}, 7}};
  auto init = InitialData::explicit_values(vals, std::array<std::array<long, 2>, 2>{{{2, 0}, {0, 2}}});
  auto ref = InitialData::two_by_two(2, 7, 5, 3);
  for (int i = -4; i <= 4; ++i) {
    for (int j = -4; j <= 4; ++j) EXPECT_EQ(init.t(i, j), ref.t(i, j));
  }
  auto bare = InitialData::explicit_values(vals);
  EXPECT_THROW(bare.t(5, 5), std::out_of_range);
  EXPECT_THROW(evolve(bare, 0, 0, 4), std::out_of_range);
}

TEST(Evolve, UniformPowersOfTwo) {
  auto f = evolve(InitialData::uniform(), 0, 0, 9);
  EXPECT_EQ(f.at(0, 0, 3), 8);
  for (int k = 0; k <= 9; ++k) {
    for (const auto& p : f.layer_points(k)) EXPECT_EQ(f.at(p.i, p.j, p.k), rational_pow(2, k * (k - 1) / 2));
  }
}

TEST(Evolve, InitialLayersAreTheData) {
  std::mt19937 rng(1);
  auto init = InitialData::m_toroidal(random_toroidal(rng, 2));
  auto f = evolve(init, 1, 0, 5);
  for (int k = 0; k <= 1; ++k) {
    for (const auto& p : f.layer_points(k)) EXPECT_EQ(f.at(p.i, p.j, k), init.t(p.i, p.j));
  }
}

TEST(ClosedForm22, HandValues) {
  EXPECT_EQ(closed_form_22(1, 2, 1, 1, admissible_point(0, 0, 3)), 50);
  const Rational a = 2, b = 3, c = 5, d = 7;
  EXPECT_EQ(closed_form_22(a, b, c, d, admissible_point(1, 0, 2)),
            (a * a + b * b) / (c * d) * InitialData::two_by_two(a, b, c, d).t(2, 1));
  for (int k = 0; k <= 8; ++k) {
    EXPECT_EQ(closed_form_22(1, 1, 1, 1, admissible_point(k % 2 ? 0 : 1, 0, k)), rational_pow(2, k * (k - 1) / 2));
  }
}

TEST(ClosedForm22, EqualsEvolveOnDiamond) {
  auto init = InitialData::two_by_two(1, 2, 1, 1);
  auto f = evolve(init, 0, 0, 6);
  for (int k = 0; k <= 6; ++k) {
    for (const auto& p : f.layer_points(k)) EXPECT_EQ(f.at(p.i, p.j, k), closed_form_22(1, 2, 1, 1, p));
  }
}

TEST(ClosedFormToroidal, ConstantSequencesMatchSingleSiteFormula) {
  const Rational a = 2, b = 3, c = 5, d = 7;
  ToroidalData data{1, {a}, {b}, {c}, {d}};
  for (int k = 0; k <= 8; ++k) {
    for (int i = -3; i <= 3; ++i) {
      for (int j = -3; j <= 3; ++j) {
        LatticePoint p{i, j, k};
        if (!p.admissible()) continue;
        const long s = floor_mod(i + j + k, 4);
        Rational site = k % 2 == 0 ? (s == 1 ? a : b) : (s == 1 ? c : d);
        // x = 2cd/ab and y = 2ab/cd enter with exponents [k^2/4] and [(k-1)^2/4].
        Rational expected = rational_pow(2, k * (k - 1) / 2) * rational_pow(c * d / (a * b), k / 2) * site;
        EXPECT_EQ(closed_form_mtoroidal(data, p), expected) << i << "," << j << "," << k;
        if (k == 2) {
          Rational by_hand = 2 * c * d / InitialData::m_toroidal(data).t(i, j);
          EXPECT_EQ(expected, by_hand);
        }
      }
    }
  }
}

TEST(ClosedFormToroidal, EqualsEvolveForRandomData) {
  std::mt19937 rng(99);
  for (int m = 1; m <= 4; ++m) {
    auto data = random_toroidal(rng, m);
    auto f = evolve(InitialData::m_toroidal(data), 0, 0, 8);
    ToroidalDerived der(data);
    for (int k = 0; k <= 8; ++k) {
      for (const auto& p : f.layer_points(k)) EXPECT_EQ(f.at(p.i, p.j, k), closed_form_mtoroidal(data, p, der)) << "m=" << m;
    }
  }
}

TEST(ClosedForms, SatisfyOctahedronRelation) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    Rational a = random_positive(rng), b = random_positive(rng), c = random_positive(rng), d = random_positive(rng);
    auto T = [&](int i, int j, int k) { return closed_form_22(a, b, c, d, {i, j, k}); };
    for (int k = 1; k < 8; ++k) {
      for (int i = -3; i <= 3; ++i) {
        for (int j = -3; j <= 3; ++j) {
          if (LatticePoint{i, j, k}.admissible()) continue;
          EXPECT_EQ(octahedron_residual(T, i, j, k), 0);
        }
      }
    }
  }
  auto data = random_toroidal(rng, 3);
  ToroidalDerived der(data);
  auto T = [&](int i, int j, int k) { return closed_form_mtoroidal(data, {i, j, k}, der); };
  for (int k = 1; k < 8; ++k) {
    for (int i = -3; i <= 3; ++i) {
      for (int j = -3; j <= 3; ++j) {
        if (!LatticePoint{i, j, k}.admissible()) EXPECT_EQ(octahedron_residual(T, i, j, k), 0);
      }
    }
  }
}

TEST(ClosedForms, PositivityOnRandomData) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = evolve(InitialData::m_toroidal(random_toroidal(rng, 1 + trial % 3)), 0, 0, 8);
    for (int k = 0; k <= 8; ++k) {
      for (const auto& p : f.layer_points(k)) EXPECT_GT(f.at(p.i, p.j, k), 0);
    }
  }
}

TEST(CoeffLR, UniformIsOneHalf) {
  auto init = InitialData::uniform();
  for (int k = 0; k <= 4; ++k) {
    for (int i = -2; i <= 2; ++i) {
      for (int j = -2; j <= 2; ++j) {
        if (floor_mod(i + j + k, 2)) continue;
        auto lr = coeff_LR(init, i, j, k);
        EXPECT_EQ(lr.L, Rational(1, 2));
        EXPECT_EQ(lr.R, Rational(1, 2));
      }
    }
  }
  EXPECT_THROW(coeff_LR(init, 0, 0, 1), std::invalid_argument);
}

TEST(CoeffLR, ClosedFormMatchesEvolvedRatios) {
  std::mt19937 rng(23);
  for (int m = 1; m <= 4; ++m) {
    auto data = random_toroidal(rng, m);
    auto f = evolve(InitialData::m_toroidal(data), 0, 0, 9);
    ToroidalDerived der(data);
    EXPECT_EQ(convexity_product(der.lambda), 1);
    EXPECT_EQ(convexity_product(der.mu), 1);
    int checked = 0;
    for (int k = 1; k <= 8; ++k) {
      for (int i = -8; i <= 8; ++i) {
        for (int j = -8; j <= 8; ++j) {
          if (floor_mod(i + j + k, 2)) continue;
          auto num = coeff_LR_numeric(f, i, j, k);
          if (!num) continue;
          auto cf = coeff_LR(der, i, j, k);
          EXPECT_EQ(cf.L, num->L) << m << ":" << i << "," << j << "," << k;
          EXPECT_EQ(cf.L + cf.R, 1);
          EXPECT_EQ(num->L + num->R, 1);
          ++checked;
        }
      }
    }
    EXPECT_GT(checked, 100);
  }
}

TEST(CoeffLR, TwoByTwoWeightsAreSigmaAndTau) {
  const Rational a = 2, b = 3, c = 5, d = 7;
  auto init = InitialData::two_by_two(a, b, c, d);
  const Rational sigma = a * a / (a * a + b * b), tau = c * c / (c * c + d * d);
  EXPECT_EQ(coeff_LR(init, 1, 0, 1).L, sigma);
  EXPECT_EQ(coeff_LR(init, 0, 0, 0).R, tau);
  ToroidalDerived der(*init.as_toroidal());
  // The raw-weight formulas put sigma in mu_1 and tau in lambda_1.
  EXPECT_EQ(der.mu[1], sigma);
  EXPECT_EQ(der.lambda[1], tau);
  EXPECT_EQ(der.lambda[0] + der.lambda[1], 1);
}

TEST(Periodicity, CleanFieldsAndFaultInjection) {
  std::mt19937 rng(8);
  auto f2 = evolve(InitialData::m_toroidal(random_toroidal(rng, 2)), 0, 0, 6);
  EXPECT_TRUE(check_toroidal_periodicity(f2, 2).empty());
  auto f1 = evolve(InitialData::uniform(), 0, 0, 6);
  EXPECT_TRUE(check_toroidal_periodicity(f1, 1).empty());

  auto f3 = evolve(InitialData::m_toroidal(random_toroidal(rng, 3)), 0, 0, 7);
  EXPECT_TRUE(check_toroidal_periodicity(f3, 3).empty());
  const LatticePoint bad{1, 0, 2};
  f3.set(bad.i, bad.j, bad.k, f3.at(bad.i, bad.j, bad.k) + 1);
  auto v = check_toroidal_periodicity(f3, 3);
  std::set<std::pair<LatticePoint, LatticePoint>> expected;
  for (const auto& s : {LatticePoint{3, -3, 0}, LatticePoint{2, 2, 0}}) {
    if (f3.contains(bad.i + s.i, bad.j + s.j, bad.k)) expected.insert({bad, s});
    if (f3.contains(bad.i - s.i, bad.j - s.j, bad.k)) expected.insert({{bad.i - s.i, bad.j - s.j, bad.k}, s});
  }
  std::set<std::pair<LatticePoint, LatticePoint>> got_t;
  for (const auto& e : v) {
    if (e.quantity == 'T') got_t.insert({e.point, e.shift});
  }
  EXPECT_EQ(got_t, expected);
  EXPECT_FALSE(expected.empty());
}

TEST(TField, CsvSortedByLayer) {
  auto f = evolve(InitialData::uniform(), 0, 0, 3);
  std::ostringstream os;
  f.write_csv(os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "i,j,k,value");
  std::vector<std::tuple<int, int, int>> keys;
  while (std::getline(is, line)) {
    int i, j, k;
    char c1, c2, c3;
    std::istringstream ls(line);
    ls >> i >> c1 >> j >> c2 >> k >> c3;
    keys.emplace_back(k, i, j);
    EXPECT_NE(line.find('/'), std::string::npos);
  }
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  // layers 0..3 hold 16, 9, 4, 1 admissible points
  EXPECT_EQ(keys.size(), 30u);
  EXPECT_TRUE(os.str().ends_with("0,0,3,8/1\n"));
}
