#include <gtest/gtest.h>

#include <vector>

#include "patternsc/fq.hpp"

using namespace patternsc;

TEST(Fp, ArithmeticAndInverse) {
  for (int p : {2, 3, 5, 7, 11, 13, 17}) {
    for (int v = 1; v < p; ++v) {
      const Fp x(p, v);
      EXPECT_EQ((x * x.inverse()).value(), 1) << p << " " << v;
      EXPECT_TRUE((x + (-x)).is_zero());
    }
    EXPECT_EQ(Fp(p, -1).value(), p - 1);
    EXPECT_EQ(Fp(p, p + 2).value(), 2 % p);
  }
  EXPECT_THROW(Fp(5, 0).inverse(), std::domain_error);
}

TEST(Fp, UnsupportedPrimesRejected) {
  EXPECT_THROW(require_supported_prime(4), std::invalid_argument);
  EXPECT_THROW(require_supported_prime(19), std::invalid_argument);
  EXPECT_THROW(require_supported_prime(1), std::invalid_argument);
  EXPECT_NO_THROW(require_supported_prime(17));
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(15));
}

TEST(Cyclotomic, ThetaSumsToZero) {
  for (int p : {2, 3, 5, 7, 11, 13, 17}) {
    CyclotomicInt sum(p);
    for (int t = 0; t < p; ++t) sum += theta(Fp(p, t));
    EXPECT_TRUE(sum.is_zero()) << p;
  }
}

TEST(Cyclotomic, ThetaIsAdditiveCharacter) {
  for (int p : {3, 5, 7}) {
    for (int s = 0; s < p; ++s)
      for (int t = 0; t < p; ++t)
        EXPECT_EQ(theta(Fp(p, s)) * theta(Fp(p, t)), theta(Fp(p, s + t)));
    EXPECT_EQ(theta(Fp(p, 0)), CyclotomicInt::integer(p, 1));
  }
  EXPECT_EQ(theta(Fp(2, 1)), CyclotomicInt::integer(2, -1));
}

TEST(Cyclotomic, ConjugationAndNorm) {
  const int p = 5;
  const auto z = theta(Fp(p, 1));
  EXPECT_EQ(z.conj(), theta(Fp(p, 4)));
  EXPECT_EQ(z * z.conj(), CyclotomicInt::integer(p, 1));
  EXPECT_EQ(z.norm(), 1);
  EXPECT_EQ(CyclotomicInt::integer(p, 3).norm(), 81);
  // 1 - zeta has norm p.
  EXPECT_EQ((CyclotomicInt::integer(p, 1) - z).norm(), p);
  EXPECT_EQ(z.galois(2), theta(Fp(p, 2)));
}

TEST(Cyclotomic, ExponentCountsReduce) {
  const std::vector<std::int64_t> all_ones(7, 3);
  EXPECT_TRUE(CyclotomicInt::from_exponent_counts(7, all_ones).is_zero());
  const std::vector<std::int64_t> counts{4, 0, 0};
  EXPECT_EQ(CyclotomicInt::from_exponent_counts(3, counts).as_integer(), 4);
}

TEST(Cyclotomic, ExactDivision) {
  const auto x = CyclotomicInt::integer(3, 6) + theta(Fp(3, 1)).scaled(9);
  EXPECT_EQ(x.divided_exactly(3), CyclotomicInt::integer(3, 2) + theta(Fp(3, 1)).scaled(3));
  EXPECT_THROW(x.divided_exactly(4), std::domain_error);
  EXPECT_EQ(x.content(), 3);
}

TEST(Cyclotomic, ToString) {
  EXPECT_EQ(CyclotomicInt(5).to_string(), "0");
  EXPECT_EQ(theta(Fp(5, 2)).to_string(), "z^2");
  EXPECT_EQ((CyclotomicInt::integer(5, 1) + theta(Fp(5, 1)).scaled(2)).to_string(), "1 + 2*z");
}

TEST(CyclotomicRat, NormalizesAndInverts) {
  const int p = 5;
  const CyclotomicRat half = CyclotomicRat::rational(p, 2, 4);
  EXPECT_EQ(half.denominator(), 2);
  EXPECT_EQ(CyclotomicRat::rational(p, 3, -6), CyclotomicRat::rational(p, -1, 2));
  const CyclotomicRat x(CyclotomicInt::integer(p, 2) + theta(Fp(p, 3)), 7);
  EXPECT_EQ(x * x.inverse(), CyclotomicRat::integer(p, 1));
  EXPECT_EQ(x / x, CyclotomicRat::integer(p, 1));
  EXPECT_THROW(CyclotomicRat(p).inverse(), std::domain_error);
  EXPECT_THROW(CyclotomicRat(CyclotomicInt::integer(p, 1), 0), std::domain_error);
}

TEST(CyclotomicRat, SerializationRoundTrip) {
  const int p = 5;
  const CyclotomicRat x(CyclotomicInt::integer(p, 1) + theta(Fp(p, 1)).scaled(2), 3);
  EXPECT_EQ(x.to_string(), "(1 + 2*z) / 3");
  const auto array = x.to_array();
  EXPECT_EQ(array, (std::vector<std::int64_t>{3, 1, 2, 0, 0}));
  EXPECT_EQ(CyclotomicRat::from_array(p, array), x);
  EXPECT_EQ(CyclotomicRat::rational(p, -1, 2).to_string(), "-1 / 2");
}

TEST(IntPow, OverflowDetected) {
  EXPECT_EQ(int_pow(3, 4), 81U);
  EXPECT_EQ(int_pow(2, 63), std::uint64_t{1} << 63);
  EXPECT_THROW(int_pow(2, 64), std::overflow_error);
}
