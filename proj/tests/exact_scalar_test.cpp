#include <gtest/gtest.h>

#include "espectra/error.hpp"
#include "espectra/exact_scalar.hpp"
#include "support.hpp"

namespace espectra {
namespace {

using test::gi;
using test::q;

TEST(ExactScalar, GaussianArithmetic) {
  EXPECT_EQ(gi(1, 2) * gi(3, -1), gi(5, 5));
  EXPECT_EQ(gi(1, 2) + gi(3, -1), gi(4, 1));
  EXPECT_EQ(gi(5, 5) / gi(3, -1), gi(1, 2));
  EXPECT_EQ(ExactScalar::i().pow(2), q(-1));
  EXPECT_EQ(gi(3, 4).norm(), mpq_class(25));
  EXPECT_EQ(gi(3, 4).inverse(), ExactScalar(mpq_class(3, 25), mpq_class(-4, 25)));
  EXPECT_EQ(gi(2, 1).conj(), gi(2, -1));
  EXPECT_EQ(q(2, 3).pow(0), q(1));
}

TEST(ExactScalar, ParseCanonicalizes) {
  EXPECT_EQ(ExactScalar::parse("3/6"), q(1, 2));
  EXPECT_EQ(ExactScalar::parse("-4", "+2/4"), ExactScalar(mpq_class(-4), mpq_class(1, 2)));
  EXPECT_EQ(ExactScalar::parse_rational(" 12 "), mpq_class(12));
}

TEST(ExactScalar, ParseRejectsMalformed) {
  for (const char* bad : {"", "abc", "1/0", "1//2", "1.5", "--3", "2/-3"}) {
    try {
      ExactScalar::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(ExactScalar, StringRoundTrip) {
  const ExactScalar values[] = {q(0), q(-3, 2), ExactScalar::i(), -ExactScalar::i(), gi(1, 2), gi(0, -5),
                                ExactScalar(mpq_class(-3, 2), mpq_class(-5, 7)), gi(7, 1), gi(-7, -1)};
  for (const auto& v : values) EXPECT_EQ(ExactScalar::from_string(v.to_string()), v) << v.to_string();
  EXPECT_EQ(gi(1, 2).to_string(), "1+2*i");
  EXPECT_EQ(gi(0, -5).to_string(), "-5*i");
}

TEST(ExactScalar, DivisionByZeroThrows) { EXPECT_THROW(q(1) / q(0), Error); }

TEST(ExactScalar, ExactDivisionHelpers) {
  const GaussianInteger a{mpz_class(7), mpz_class(-4)};
  const GaussianInteger b{mpz_class(2), mpz_class(3)};
  EXPECT_EQ(divide_exact(a * b, b), a);
  EXPECT_EQ(divide_exact(mpz_class(91), mpz_class(-7)), mpz_class(-13));
  EXPECT_EQ(binomial(10, 3), mpz_class(120));
  EXPECT_EQ(binomial(4, 7), mpz_class(0));
}

}  // namespace
}  // namespace espectra
