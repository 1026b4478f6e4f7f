#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "espectra/error.hpp"
#include "espectra/invariants.hpp"
#include "espectra/roots.hpp"
#include "espectra/spectra.hpp"
#include "support.hpp"

namespace espectra {
namespace {

using cd = std::complex<double>;
using test::gi;
using test::q;

// Eigenvalues with the sign partner of every odd-degree pair.
std::vector<cd> spectrum(const std::vector<EigenPair>& pairs, unsigned d) {
  std::vector<cd> out;
  for (const auto& p : pairs) {
    out.push_back(p.lambda);
    if (d % 2 == 1) out.push_back(-p.lambda);
  }
  return out;
}

void expect_valid(const SymmetricTensor& f, const std::vector<EigenPair>& pairs) {
  for (const auto& p : pairs) {
    const PairCheck c = check_pair(f, p);
    EXPECT_TRUE(c.ok()) << "lambda " << p.lambda << " norm " << c.norm_defect << " res " << c.residual << " id "
                        << c.identity_defect;
  }
}

TEST(Canonical, FirstNonzeroComponentPositive) {
  EigenPair p{cd(2, 0), {cd(0, 0), cd(-1, 0), cd(0.5, 0)}, 0.0};
  canonicalize(p, 3);
  EXPECT_EQ(p.x[1], cd(1, 0));
  EXPECT_EQ(p.lambda, cd(-2, 0));
  EigenPair r{cd(2, 0), {cd(0, -1), cd(1, 0)}, 0.0};
  canonicalize(r, 4);
  EXPECT_EQ(r.x[0], cd(0, 1));
  EXPECT_EQ(r.lambda, cd(2, 0));
}

TEST(Binary, SymmetricMatrix) {
  MultiPoly p(2);
  p.add_term({2, 0}, q(1));
  p.add_term({1, 1}, q(4));
  p.add_term({0, 2}, q(1));
  const SymmetricTensor f(p, 2);
  const auto pairs = binary_eigenpairs(f);
  ASSERT_EQ(pairs.size(), 2U);
  expect_valid(f, pairs);
  EXPECT_LT(test::multiset_distance(spectrum(pairs, 2), {cd(3), cd(-1)}), 1e-12);
  for (const auto& e : pairs) {
    const double ratio = std::abs(e.x[1] / e.x[0]);
    EXPECT_NEAR(ratio, 1.0, 1e-12);
  }
}

TEST(Binary, FermatCubic) {
  const double a = 2.0;
  const double b = -3.0;
  const SymmetricTensor f = SymmetricTensor::fermat({q(2), q(-3)}, 3);
  const auto pairs = binary_eigenpairs(f);
  ASSERT_EQ(pairs.size(), 3U);
  expect_valid(f, pairs);
  const cd mixed = a * b / std::sqrt(cd(a * a + b * b));
  EXPECT_LT(test::multiset_distance(spectrum(pairs, 3), {cd(a), cd(-a), cd(b), cd(-b), mixed, -mixed}), 1e-12);
}

TEST(Binary, AgreesWithCharpoly) {
  for (unsigned d = 2; d <= 6; ++d) {
    const SymmetricTensor f = test::random_tensor(1, d, 60 + d, d % 2 == 0);
    const auto exact = binary_eigenpairs(f);
    EXPECT_EQ(exact.size(), d);
    expect_valid(f, exact);
    const Recovery rec = eigenpairs_from_charpoly(f, e_char_poly(f));
    EXPECT_TRUE(rec.failed.empty());
    EXPECT_LT(test::multiset_distance(spectrum(exact, d), spectrum(rec.pairs, d)), 1e-8) << d;
  }
}

TEST(Binary, IsotropicRootIsReported) {
  const SymmetricTensor f = test::tangent_tensor(1, 3, 5);
  try {
    binary_eigenpairs(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IsotropicRoot);
  }
}

TEST(Charpoly, DiagonalMatrix) {
  const SymmetricTensor f = SymmetricTensor::fermat({q(1), q(-2), q(5), q(7, 2)}, 2);
  const Recovery rec = eigenpairs_from_charpoly(f, e_char_poly(f));
  ASSERT_EQ(rec.pairs.size(), 4U);
  expect_valid(f, rec.pairs);
  EXPECT_LT(test::multiset_distance(spectrum(rec.pairs, 2), {cd(1), cd(-2), cd(5), cd(3.5)}), 1e-10);
  EXPECT_LT(std::abs(product_of_eigenvalues(rec.pairs) - cd(-35)), 1e-9);
}

TEST(Charpoly, PaperCubicHasSixPairs) {
  const SymmetricTensor f = test::paper_cubic();
  const Recovery rec = eigenpairs_from_charpoly(f, e_char_poly(f));
  EXPECT_EQ(rec.pairs.size(), 6U);
  EXPECT_TRUE(rec.failed.empty());
  expect_valid(f, rec.pairs);
}

TEST(Charpoly, RefusesZeroPolynomial) {
  const SymmetricTensor f = SymmetricTensor::norm_power(2, 4);
  EXPECT_THROW(eigenpairs_from_charpoly(f, e_char_poly(f)), Error);
}

TEST(Charpoly, VietaMatchesNumericProduct) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const SymmetricTensor f = test::random_tensor(2, 3, 70 + seed);
    const ECharPoly psi = e_char_poly(f);
    const Recovery rec = eigenpairs_from_charpoly(f, psi);
    ASSERT_EQ(rec.pairs.size(), 7U);
    // product of all 2N roots of psi = prod(lambda) prod(-lambda)
    const cd top = psi.coeff(psi.n_expected).to_complex();
    const cd vieta = -psi.coeff(0).to_complex() / top;
    const cd p = product_of_eigenvalues(rec.pairs);
    EXPECT_LT(std::abs(p * p - vieta) / std::abs(vieta), 1e-6);
  }
}

// Twenty generic samples: psi has full degree, every root carries a pair,
// and the eigenvalues are exactly the roots of psi.
void check_counts(unsigned n, unsigned d) {
  const std::size_t expected = expected_eigenvalue_count(n, d).get_ui();
  for (int s = 0; s < 20; ++s) {
    const SymmetricTensor f = test::random_tensor(n, d, 1000 * d + s, s % 3 == 0);
    const ECharPoly psi = e_char_poly(f);
    EXPECT_EQ(psi.psi.degree(), static_cast<int>(psi.n_expected));
    const Recovery rec = eigenpairs_from_charpoly(f, psi);
    EXPECT_EQ(rec.pairs.size(), expected) << n << "," << d << " seed " << s;
    EXPECT_TRUE(rec.failed.empty());
    expect_valid(f, rec.pairs);
    EXPECT_LT(test::multiset_distance(spectrum(rec.pairs, d), polynomial_roots(psi.psi)), 1e-6)
        << n << "," << d << " seed " << s;
  }
}

TEST(Charpoly, CountsMatchTheory) {
  for (unsigned n : {1U, 2U}) {
    for (unsigned d = 2; d <= (n == 1 ? 5U : 4U); ++d) check_counts(n, d);
  }
}

TEST(Charpoly, CountsMatchTheoryTernaryQuintics) { check_counts(2, 5); }

TEST(Charpoly, OrthogonalInvariance) {
  std::mt19937_64 rng(77);
  for (int s = 0; s < 3; ++s) {
    for (unsigned d : {3U, 4U}) {
      const SymmetricTensor f = test::random_tensor(2, d, 300 + s);
      const SymmetricTensor g = f.linear_change(test::random_rotation(rng));
      const auto a = eigenpairs_from_charpoly(f, e_char_poly(f));
      const auto b = eigenpairs_from_charpoly(g, e_char_poly(g));
      EXPECT_LT(test::multiset_distance(spectrum(a.pairs, d), spectrum(b.pairs, d)), 1e-6);
    }
  }
}

TEST(Rotation, IsOrthogonal) {
  std::mt19937_64 rng(1);
  for (int s = 0; s < 5; ++s) {
    const auto r = test::random_rotation(rng);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        ExactScalar dot;
        for (std::size_t k = 0; k < 3; ++k) dot += r[k][i] * r[k][j];
        EXPECT_EQ(dot, q(i == j ? 1 : 0));
      }
    }
  }
}

TEST(Fermat, BinaryCubicClosedForm) {
  const FermatSpec spec{{q(1), q(2)}, 3};
  const auto e = fermat_eigenpairs(spec);
  ASSERT_EQ(e.pairs.size(), 3U);
  EXPECT_TRUE(e.isotropic.empty());
  const cd mixed = 2.0 / std::sqrt(cd(5));
  EXPECT_LT(test::multiset_distance(spectrum(e.pairs, 3), {cd(1), cd(-1), cd(2), cd(-2), mixed, -mixed}), 1e-12);
  EXPECT_NEAR(std::abs(product_of_eigenvalues(e.pairs)), 4.0 / std::sqrt(5.0), 1e-12);
}

TEST(Fermat, QuadricsAreDiagonal) {
  const FermatSpec spec{{q(3), q(-1), gi(0, 2)}, 2};
  const auto e = fermat_eigenpairs(spec);
  ASSERT_EQ(e.pairs.size(), 3U);
  EXPECT_LT(std::abs(product_of_eigenvalues(e.pairs) - cd(0, -6)), 1e-12);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(std::abs(e.pairs[k].x[k]), 1.0);
}

TEST(Fermat, CountsProductsAndResiduals) {
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<long> dist(1, 6);
  for (unsigned n : {1U, 2U}) {
    for (unsigned d : {3U, 4U, 5U}) {
      FermatSpec spec{{}, d};
      for (unsigned k = 0; k <= n; ++k) spec.a.push_back(gi(dist(rng) * (k % 2 == 0 ? 1 : -1), dist(rng) - 3));
      const SymmetricTensor f = spec.tensor();
      const auto e = fermat_eigenpairs(spec);
      ASSERT_TRUE(e.isotropic.empty());
      EXPECT_EQ(e.pairs.size(), expected_eigenvalue_count(n, d).get_ui());
      expect_valid(f, e.pairs);

      cd prod_a = 1.0;
      for (const auto& a : spec.a) prod_a *= a.to_complex();
      const double g = std::pow(std::abs(prod_a), std::pow(d - 1.0, n));
      const cd h = fermat_h_polynomial(spec);
      const double lhs = std::abs(product_of_eigenvalues(e.pairs)) * std::pow(std::abs(h), (d - 2) / 2.0);
      EXPECT_LT(std::abs(lhs - g) / g, 1e-6) << n << "," << d;

      // the closed form agrees with the resultant route
      const Recovery rec = eigenpairs_from_charpoly(f, e_char_poly(f));
      EXPECT_LT(test::multiset_distance(spectrum(e.pairs, d), spectrum(rec.pairs, d)), 1e-6) << n << "," << d;
    }
  }
}

TEST(Fermat, ZeroCoefficientRejected) {
  try {
    fermat_eigenpairs(FermatSpec{{q(1), q(0)}, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroCoefficient);
  }
}

TEST(Fermat, IsotropicSupportIsReported) {
  // a = (1, -1), d = 4: y = (xi_1, xi_0) with xi = sqrt(a) gives y = (i, 1)
  const auto e = fermat_eigenpairs(FermatSpec{{q(1), q(-1)}, 4});
  EXPECT_EQ(e.isotropic.size(), 1U);
  EXPECT_EQ(e.pairs.size(), 2U);
}

TEST(Roots, AberthRecoversKnownRoots) {
  const std::vector<cd> roots{cd(1, 0), cd(-2, 1), cd(0.5, -3), cd(4, 4), cd(0, 0)};
  std::vector<cd> c{1.0};
  for (const cd& r : roots) {
    std::vector<cd> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = next;
  }
  EXPECT_LT(test::multiset_distance(aberth_roots(c), roots), 1e-12);
}

}  // namespace
}  // namespace espectra
