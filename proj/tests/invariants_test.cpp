#include <gtest/gtest.h>

#include <cmath>

#include "espectra/error.hpp"
#include "espectra/invariants.hpp"
#include "espectra/resultant.hpp"
#include "support.hpp"

namespace espectra {
namespace {

using cd = std::complex<double>;
using test::gi;
using test::q;

TEST(Report, Examples) {
  for (unsigned d = 2; d <= 9; ++d) {
    const InvariantReport r = invariant_report(1, d);
    EXPECT_EQ(r.delta0, 2);
    EXPECT_EQ(r.phi, d - 2);
  }
  const InvariantReport r = invariant_report(2, 3);
  EXPECT_EQ(r.N, 7);
  EXPECT_EQ(r.phi, 5);
  EXPECT_EQ(r.delta0, 10);
  for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(invariant_report(n, 2).phi, 0);
}

TEST(Report, AlphaEqualsBeta) {
  for (unsigned n = 1; n <= 20; ++n) {
    for (unsigned k = 0; k < n; ++k) EXPECT_EQ(alpha_coefficient(n, k), beta_coefficient(n, k)) << n << "," << k;
  }
}

TEST(Report, PhiDeltaIdentity) {
  for (unsigned n = 1; n <= 20; ++n) {
    for (unsigned d = 3; d <= 12; ++d) {
      const InvariantReport r = invariant_report(n, d);
      EXPECT_EQ(2 * r.phi, (d - 2) * r.delta0) << n << "," << d;
      EXPECT_EQ(r.alpha, r.beta);
      EXPECT_EQ(r.N, expected_eigenvalue_count(n, d));
    }
  }
}

TEST(BinaryDisc, FermatFormula) {
  const ExactScalar a = gi(2, 1);
  const ExactScalar b = q(-3);
  for (unsigned d = 2; d <= 7; ++d) {
    const BinaryInvariants inv = binary_q_discriminant(SymmetricTensor::fermat({a, b}, d));
    const ExactScalar mid = d % 2 == 0 ? q(2) * ExactScalar::i().pow(d) * a * b : ExactScalar();
    EXPECT_EQ(inv.qdisc, a * a + mid + b * b) << d;
    EXPECT_EQ(inv.qdisc, inv.b0 * inv.bd);
  }
}

TEST(BinaryDisc, Quadric) {
  const ExactScalar a0 = q(3);
  const ExactScalar a1 = gi(1, -1);
  const ExactScalar a2 = q(5, 2);
  const BinaryInvariants inv = binary_q_discriminant(SymmetricTensor::binary_binomial({a0, a1, a2}));
  EXPECT_EQ(inv.b0, a0 + q(2) * ExactScalar::i() * a1 - a2);
  EXPECT_EQ(inv.qdisc, (a0 - a2) * (a0 - a2) + q(4) * a1 * a1);
}

TEST(BinaryDisc, RealFormsHaveRealDiscriminant) {
  for (unsigned d = 2; d <= 7; ++d) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      EXPECT_EQ(binary_q_discriminant(test::random_tensor(1, d, seed)).qdisc.im(), 0);
    }
  }
}

TEST(BinaryDisc, LeadingMonomialCoefficientIsOne) {
  // qdisc(a0 + t) - qdisc(a0) - [a0-linear part] isolates the a0^2 coefficient
  const SymmetricTensor f = test::random_tensor(1, 5, 3);
  auto shifted = [&](long t) {
    MultiPoly p = f.poly() + MultiPoly::monomial({5, 0}, q(t));
    return binary_q_discriminant(SymmetricTensor(p, 5)).qdisc;
  };
  const ExactScalar second_difference = shifted(1) - q(2) * shifted(0) + shifted(-1);
  EXPECT_EQ(second_difference, q(2));
}

TEST(ConicProxy, Examples) {
  EXPECT_TRUE(ternary_q_discriminant_proxy(test::paper_cubic()).is_zero());
  for (unsigned d = 2; d <= 4; ++d) {
    const SymmetricTensor f = test::random_tensor(2, d, 9);
    const ExactScalar p = ternary_q_discriminant_proxy(f);
    EXPECT_FALSE(p.is_zero());
    const ExactScalar t = gi(1, 2);
    MultiPoly scaled = f.poly();
    scaled *= t;
    EXPECT_EQ(ternary_q_discriminant_proxy(SymmetricTensor(scaled, d)), p * t.pow(2 * (2 * d - 1)));
  }
  try {
    ternary_q_discriminant_proxy(SymmetricTensor::norm_power(3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateRestriction);
  }
}

TEST(ConicProxy, TangentFormsVanish) {
  for (unsigned d = 3; d <= 4; ++d) {
    EXPECT_TRUE(ternary_q_discriminant_proxy(test::tangent_tensor(2, d, d)).is_zero());
  }
}

TEST(GradientResultant, Fermat) {
  EXPECT_EQ(gradient_resultant(SymmetricTensor::fermat({q(2), q(-3)}, 4)), q(-6).pow(3));
  EXPECT_EQ(gradient_resultant(SymmetricTensor::fermat({q(2), q(3), q(5)}, 3)), q(30).pow(4));
  EXPECT_EQ(gradient_resultant(SymmetricTensor::fermat({gi(1, 1), q(2), q(-1)}, 4)), (gi(1, 1) * q(-2)).pow(9));
  // the binary case through Sylvester directly
  const SymmetricTensor f = SymmetricTensor::fermat({q(3), q(7)}, 5);
  const auto g = gradient(f);
  EXPECT_EQ(sylvester_resultant(g[0] * q(1, 5), g[1] * q(1, 5)), q(21).pow(4));
}

TEST(MainTheorem, FermatBinaryCubic) {
  const MainTheoremReport r = verify_main_theorem(SymmetricTensor::fermat({q(1), q(2)}, 3));
  EXPECT_EQ(r.verdict, Verdict::Pass) << r.detail;
  EXPECT_EQ(r.res, q(4));
  EXPECT_EQ(r.disc, q(5));
  EXPECT_NEAR(r.lhs, 4.0 / std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(r.rhs, 4.0 / std::sqrt(5.0), 1e-12);
  EXPECT_TRUE(r.exact_match);
}

TEST(MainTheorem, QuadricsGiveDeterminant) {
  for (unsigned n : {1U, 2U, 3U}) {
    const MainTheoremReport r = verify_main_theorem(test::random_tensor(n, 2, 5 + n));
    EXPECT_EQ(r.verdict, Verdict::Pass) << r.detail;
    EXPECT_TRUE(r.exact_match);
  }
}

TEST(MainTheorem, PaperCubicFailsHypothesis) {
  const MainTheoremReport r = verify_main_theorem(test::paper_cubic());
  EXPECT_EQ(r.verdict, Verdict::HypothesisFailed);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_LE(r.certificate->residual, 1e-8);
}

TEST(MainTheorem, IrregularFailsHypothesis) {
  const MultiPoly l = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1) * ExactScalar::i();
  const MainTheoremReport r = verify_main_theorem(SymmetricTensor(l * l * MultiPoly::variable(2, 1), 3));
  EXPECT_EQ(r.verdict, Verdict::HypothesisFailed);
  EXPECT_TRUE(r.irregular);
}

TEST(MainTheorem, RandomSuites) {
  for (auto [n, d] : {std::pair{1U, 3U}, std::pair{1U, 4U}, std::pair{1U, 5U}, std::pair{2U, 3U}, std::pair{2U, 4U}}) {
    std::optional<ExactScalar> constant;
    std::optional<ExactScalar> leading;
    for (std::uint64_t s = 0; s < 20; ++s) {
      const MainTheoremReport r = verify_main_theorem(test::random_tensor(n, d, 500 + s, s % 4 == 1));
      EXPECT_EQ(r.verdict, Verdict::Pass) << n << "," << d << " seed " << s << ": " << r.detail;
      EXPECT_LE(r.relative_error, 1e-6);
      if (!constant) constant = r.constant_ratio;
      if (!leading) leading = r.leading_ratio;
      EXPECT_EQ(r.constant_ratio, *constant);
      EXPECT_EQ(r.leading_ratio, *leading) << n << "," << d << " seed " << s;
    }
    EXPECT_EQ(constant->norm(), 1);
    if (n == 1) {
      EXPECT_EQ(leading->norm(), 1);
    }
  }
}

TEST(LeadingCoefficient, BinaryEvenLaw) {
  for (unsigned d : {4U, 6U}) {
    std::optional<ExactScalar> c;
    for (std::uint64_t s = 0; s < 10; ++s) {
      const SymmetricTensor f = test::random_tensor(1, d, 700 + s, s % 2 == 0);
      const ECharPoly psi = e_char_poly(f);
      const ExactScalar ratio = psi.coeff(d) / binary_q_discriminant(f).qdisc.pow((d - 2) / 2);
      if (!c) c = ratio;
      EXPECT_EQ(ratio, *c) << d;
    }
  }
}

TEST(FermatH, BinaryCubic) {
  const cd h = fermat_h_polynomial(FermatSpec{{q(3), q(-2)}, 3});
  EXPECT_LT(std::abs(h - cd(13)), 1e-12);
}

TEST(FermatH, Homogeneity) {
  for (unsigned n : {1U, 2U}) {
    for (unsigned d : {3U, 4U, 5U}) {
      FermatSpec spec{{q(2), gi(1, 1), q(-3)}, d};
      spec.a.resize(n + 1);
      const cd h = fermat_h_polynomial(spec);
      const ExactScalar t(mpq_class(3, 2));
      FermatSpec scaled = spec;
      for (auto& a : scaled.a) a *= t;
      const double e = 2.0 * invariant_report(n, d).phi.get_d() / (d - 2.0);
      const cd expected = std::pow(1.5, e) * h;
      EXPECT_LT(std::abs(fermat_h_polynomial(scaled) - expected) / std::abs(expected), 1e-9) << n << "," << d;
    }
  }
}

}  // namespace
}  // namespace espectra
