#include <gtest/gtest.h>

#include <random>

#include "espectra/multi_poly.hpp"
#include "espectra/resultant.hpp"
#include "espectra/uni_poly.hpp"
#include "support.hpp"

namespace espectra {
namespace {

using test::gi;
using test::q;

MultiPoly x(std::size_t n, std::size_t k) { return MultiPoly::variable(n, k); }

TEST(MultiPoly, MonomialsInGradedOrder) {
  const auto m = monomials_of_degree(4, 5);
  EXPECT_EQ(m.size(), 56U);  // C(8, 3)
  EXPECT_EQ(m.front(), (Exponent{5, 0, 0, 0}));
  EXPECT_EQ(m.back(), (Exponent{0, 0, 0, 5}));
  for (std::size_t k = 1; k < m.size(); ++k) EXPECT_TRUE(GrlexOrder{}(m[k - 1], m[k]));
  EXPECT_TRUE(GrlexOrder{}({0, 1}, {2, 0}));
}

TEST(MultiPoly, BinomialExpansion) {
  const MultiPoly p = (x(2, 0) + x(2, 1)).pow(5);
  for (unsigned j = 0; j <= 5; ++j) EXPECT_EQ(p.coeff({5 - j, j}), ExactScalar(mpq_class(binomial(5, j))));
  EXPECT_EQ(p.homogeneous_degree(), 5U);
}

TEST(MultiPoly, CancellationDropsTerms) {
  MultiPoly p = x(3, 0) * x(3, 1) - x(3, 1) * x(3, 0);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), -1);
  p.add_term({1, 0, 0}, q(2));
  p.add_term({1, 0, 0}, q(-2));
  EXPECT_EQ(p.size(), 0U);
}

TEST(MultiPoly, DerivativeAndEuler) {
  const MultiPoly f = x(3, 0).pow(3) * gi(0, 2) + x(3, 0) * x(3, 1) * x(3, 2) - x(3, 2).pow(3) * q(5);
  EXPECT_EQ(f.derivative(0), x(3, 0).pow(2) * gi(0, 6) + x(3, 1) * x(3, 2));
  // sum x_k df/dx_k = 3 f
  MultiPoly euler(3);
  for (std::size_t k = 0; k < 3; ++k) euler += x(3, k) * f.derivative(k);
  EXPECT_EQ(euler, f * q(3));
}

TEST(MultiPoly, SubstituteAndEvaluateAgree) {
  const MultiPoly f = x(2, 0).pow(2) * q(3) - x(2, 0) * x(2, 1) + x(2, 1).pow(2) * gi(1, 1);
  const MultiPoly g = f.substitute({x(2, 0) + x(2, 1), x(2, 0) - x(2, 1) * q(2)});
  const std::vector<ExactScalar> pt{q(2, 3), gi(1, -1)};
  const std::vector<ExactScalar> img{pt[0] + pt[1], pt[0] - pt[1] * q(2)};
  EXPECT_EQ(g.evaluate(std::span<const ExactScalar>(pt)), f.evaluate(std::span<const ExactScalar>(img)));
  const std::vector<std::complex<double>> cpt{pt[0].to_complex(), pt[1].to_complex()};
  const auto exact = g.evaluate(std::span<const ExactScalar>(pt)).to_complex();
  EXPECT_NEAR(std::abs(g.evaluate(std::span<const std::complex<double>>(cpt)) - exact), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(NumericPoly(g)(cpt) - exact), 0.0, 1e-12);
}

TEST(MultiPoly, EmbedShiftsVariables) {
  const MultiPoly f = x(2, 0) * x(2, 1).pow(2);
  EXPECT_EQ(f.embed(4, 1), x(4, 1) * x(4, 2).pow(2));
}

TEST(UniPoly, DivmodReconstructs) {
  const UniPoly a({q(1), gi(0, 2), q(-3), q(1, 2), q(4)});
  const UniPoly b({gi(1, 1), q(0), q(2)});
  const auto [quot, rem] = a.divmod(b);
  EXPECT_LT(rem.degree(), b.degree());
  EXPECT_EQ(quot * b + rem, a);
}

TEST(UniPoly, GcdIsMonicCommonFactor) {
  const UniPoly g = gcd(UniPoly::linear_factor(q(1)) * UniPoly::linear_factor(q(2)) * q(3),
                        UniPoly::linear_factor(q(1)) * UniPoly::linear_factor(gi(0, 3)));
  EXPECT_EQ(g, UniPoly::linear_factor(q(1)));
  EXPECT_EQ(gcd(UniPoly(), UniPoly({q(2), q(4)})), UniPoly({q(1, 2), q(1)}));
  EXPECT_EQ(gcd(UniPoly({q(3)}), UniPoly::linear_factor(q(5))).degree(), 0);
}

TEST(UniPoly, InterpolationRecoversPolynomial) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ExactScalar> c;
    for (int k = 0; k < 9; ++k) c.push_back(gi(dist(rng), dist(rng)));
    const UniPoly p(c);
    std::vector<ExactScalar> nodes;
    std::vector<ExactScalar> values;
    for (std::size_t k = 0; k < 9; ++k) {
      nodes.push_back(interpolation_node(k));
      values.push_back(p.evaluate(nodes.back()));
    }
    EXPECT_EQ(interpolate(nodes, values), p);
  }
  EXPECT_EQ(interpolation_node(0), q(0));
  EXPECT_EQ(interpolation_node(3), q(2));
  EXPECT_EQ(interpolation_node(4), q(-2));
}

TEST(UniPoly, PrimitivePart) {
  const UniPoly p({q(-6, 7), q(0), q(-9, 14)});
  EXPECT_EQ(primitive_part(p), UniPoly({q(4), q(0), q(3)}));
  EXPECT_EQ(primitive_part(UniPoly({gi(2, 4), gi(0, -6)})), UniPoly({gi(-1, -2), gi(0, 3)}));
  EXPECT_TRUE(primitive_part(UniPoly()).is_zero());
}

TEST(BinaryForm, GcdSeesRootsAtInfinity) {
  // x1 (x1 - 2 x2) and x1 (x1 + x2) share (0 : 1)
  const BinaryForm a(2, {q(1), q(-2), q(0)});
  const BinaryForm b(2, {q(1), q(1), q(0)});
  const BinaryForm g = gcd(a, b);
  EXPECT_EQ(g.degree(), 1U);
  EXPECT_EQ(g.multiplicity_at_infinity(), 1U);
  EXPECT_EQ(gcd(a, BinaryForm(2, {q(1), q(0), q(1)})).degree(), 0U);
  EXPECT_EQ(gcd(a, BinaryForm::zero(3)).degree(), 2U);
}

TEST(BinaryForm, DerivativesAndConversion) {
  const BinaryForm f(3, {q(1), q(2), q(3), q(4)});
  const MultiPoly p = f.to_multipoly();
  EXPECT_EQ(BinaryForm::from_multipoly(p), f);
  EXPECT_EQ(f.derivative_x1().to_multipoly(), p.derivative(0));
  EXPECT_EQ(f.derivative_x2().to_multipoly(), p.derivative(1));
  EXPECT_EQ(f.evaluate(q(1), q(-1)), q(-2));
}

TEST(UniPoly, SquarefreeFactors) {
  // 3 (t - 1)^3 (t + i)^2 (t - 2)
  const UniPoly a = UniPoly::linear_factor(q(1));
  const UniPoly b = UniPoly::linear_factor(-ExactScalar::i());
  const UniPoly c = UniPoly::linear_factor(q(2));
  const UniPoly p = a * a * a * b * b * c * q(3);
  const auto f = squarefree_factors(p);
  ASSERT_EQ(f.size(), 3U);
  EXPECT_EQ(f[0], c);
  EXPECT_EQ(f[1], b);
  EXPECT_EQ(f[2], a);
  EXPECT_TRUE(squarefree_factors(UniPoly::constant(q(5))).empty());
}

}  // namespace
}  // namespace espectra
