#include <gtest/gtest.h>

#include <random>

#include "hopfgraph/series.hpp"

namespace hopfgraph {
namespace {

VariablesPtr ring(int g_order = 4, int j_order = 3) {
  return make_variables({{"g", g_order}, {"j", j_order}});
}

Series random_series(std::mt19937& rng, const VariablesPtr& vars, bool zero_constant) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  Series s(vars);
  for (int a = 0; a <= vars->order(0); ++a) {
    for (int b = 0; b <= vars->order(1); ++b) {
      if (zero_constant && a == 0 && b == 0) continue;
      Series term = Series::constant(vars, ratio(coeff(rng), 1 + (rng() % 3)));
      term *= Series::variable(vars, "g").pow(a) * Series::variable(vars, "j").pow(b);
      s += term;
    }
  }
  return s;
}

TEST(Series, ArithmeticTruncatesPerVariable) {
  auto vars = ring(2, 1);
  Series g = Series::variable(vars, "g");
  Series j = Series::variable(vars, "j");
  Series s = (Series::constant(vars, 1) + g + j).pow(3);
  EXPECT_EQ(s.coefficient({0, 0}), 1);
  EXPECT_EQ(s.coefficient({1, 0}), 3);
  EXPECT_EQ(s.coefficient({2, 1}), 3);
  EXPECT_EQ(s.coefficient({1, 1}), 6);
  EXPECT_THROW(s.coefficient({3, 0}), TruncationError);
  EXPECT_TRUE(g.pow(3).is_zero());
}

TEST(Series, TableFormat) {
  auto vars = ring(2, 2);
  Series s = Series::constant(vars, ratio(1, 2)) * Series::variable(vars, "j").pow(2) +
             Series::variable(vars, "g");
  EXPECT_EQ(s.to_table(), "g^0 j^2: 1/2\ng^1 j^0: 1\n");
  EXPECT_EQ(Series(vars).to_table(), "0\n");
}

TEST(Series, RingsMustMatch) {
  Series a = Series::variable(ring(2, 2), "g");
  Series b = Series::variable(ring(3, 2), "g");
  EXPECT_THROW(a + b, std::invalid_argument);
  Series c = Series::variable(ring(2, 2), "j");
  EXPECT_NO_THROW(a + c);  // equal content, different objects
}

TEST(Series, LogInvertsExp) {
  std::mt19937 rng(7);
  auto vars = ring(4, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Series s = random_series(rng, vars, true);
    EXPECT_EQ(s.exp().log(), s);
  }
}

TEST(Series, ExpOfSumIsProduct) {
  std::mt19937 rng(11);
  auto vars = ring(3, 3);
  Series a = random_series(rng, vars, true);
  Series b = random_series(rng, vars, true);
  EXPECT_EQ((a + b).exp(), a.exp() * b.exp());
}

TEST(Series, InverseIsMultiplicativeInverse) {
  std::mt19937 rng(3);
  auto vars = ring(4, 2);
  for (int trial = 0; trial < 10; ++trial) {
    Series s = random_series(rng, vars, true) + Series::constant(vars, ratio(trial + 1, 3));
    EXPECT_EQ(s * s.inverse(), Series::constant(vars, 1));
  }
}

TEST(Series, DomainChecks) {
  auto vars = ring();
  Series one = Series::constant(vars, 1);
  EXPECT_THROW(one.exp(), std::domain_error);
  EXPECT_THROW(Series(vars).log(), std::domain_error);
  EXPECT_THROW(Series(vars).inverse(), std::domain_error);
}

TEST(Series, ExpOfVariableHasFactorialCoefficients) {
  auto vars = make_variables({{"x", 6}});
  auto c = Series::variable(vars, "x").exp().univariate_coefficients("x");
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(c[k], Rational(1) / factorial(k));
}

TEST(Series, DerivativeLowersTheOrder) {
  auto vars = ring(2, 3);
  Series j = Series::variable(vars, "j");
  Series g = Series::variable(vars, "g");
  Series s = j.pow(3) * g + j * ratio(5, 2);
  Series d = s.derivative("j");
  EXPECT_EQ(d.variables()->order(1), 2);
  EXPECT_EQ(d.coefficient({1, 2}), 3);
  EXPECT_EQ(d.coefficient({0, 0}), ratio(5, 2));
  EXPECT_THROW(d.coefficient({0, 3}), TruncationError);
  EXPECT_THROW(Series::variable(make_variables({{"a", 0}}), "a").derivative("a"), TruncationError);
}

TEST(Series, CoefficientSeries) {
  auto vars = ring(2, 2);
  Series g = Series::variable(vars, "g");
  Series j = Series::variable(vars, "j");
  Series s = g * j.pow(2) * 3 + j.pow(2) + g;
  EXPECT_EQ(s.coefficient_series("j", 2), g * 3 + Series::constant(vars, 1));
  EXPECT_THROW(s.coefficient_series("j", 3), TruncationError);
}

TEST(Series, ComposeMatchesDirectExpansion) {
  auto vars = make_variables({{"g", 3}, {"p", 4}});
  Series g = Series::variable(vars, "g");
  Series p = Series::variable(vars, "p");
  // f(p) = exp(p) - 1 composed with p -> p + g p^2
  Series f = p.exp() - Series::constant(vars, 1);
  Series value = p + g * p.pow(2);
  EXPECT_EQ(f.compose("p", value), value.exp() - Series::constant(vars, 1));
}

TEST(Series, ComposeRefusesUnknownCoefficients) {
  auto vars = ring(4, 2);
  Series j = Series::variable(vars, "j");
  Series g = Series::variable(vars, "g");
  // j -> g would need the j^3, j^4 coefficients, which are truncated away.
  EXPECT_THROW(j.exp().compose("j", g), TruncationError);
  EXPECT_THROW(j.compose("j", j + Series::constant(vars, 1)), std::invalid_argument);
}

TEST(Series, ShiftAgreesWithLargerRing) {
  // Build the same function in a ring with a large j order, shift there and
  // compare with the honest reduced result.
  auto big = ring(2, 9);
  auto small = ring(2, 5);
  auto make = [](const VariablesPtr& vars) {
    Series j = Series::variable(vars, "j");
    Series g = Series::variable(vars, "g");
    return (j + g * j.pow(3)).exp();
  };
  Series offset_small = Series::variable(small, "g") * ratio(-1, 2);
  Series offset_big = Series::variable(big, "g") * ratio(-1, 2);
  Series shifted = make(small).shift("j", offset_small);
  EXPECT_EQ(shifted.variables()->order(1), 3);
  Series reference = make(big).shift("j", offset_big).in_ring(shifted.variables());
  EXPECT_EQ(shifted, reference);
  EXPECT_THROW(make(ring(2, 1)).shift("j", Series::variable(ring(2, 1), "g")), TruncationError);
}

TEST(Series, InRingMovesBetweenRings) {
  auto gj = ring(3, 2);
  auto g_only = make_variables({{"g", 2}});
  Series s = Series::variable(gj, "g").pow(2) + Series::constant(gj, 1);
  Series t = s.in_ring(g_only);
  EXPECT_EQ(t.coefficient({2}), 1);
  EXPECT_THROW(Series::variable(gj, "j").in_ring(g_only), std::invalid_argument);
  EXPECT_THROW(t.in_ring(gj), TruncationError);  // g order 3 is not known
}

TEST(Variables, Validation) {
  EXPECT_THROW(make_variables({{"g", 1}, {"g", 2}}), std::invalid_argument);
  EXPECT_THROW(make_variables({{"g", -1}}), std::invalid_argument);
  EXPECT_THROW(Series::variable(ring(), "h"), std::invalid_argument);
}

}  // namespace
}  // namespace hopfgraph
