#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "blobrep/rings.hpp"
#include "oracles.hpp"

using namespace blobrep;

namespace {

LaurentInt x(int k) { return LaurentInt::x_power(k); }

}  // namespace

TEST(Rings, QuantumIntegerExamples) {
  EXPECT_TRUE(quantum_integer(0).is_zero());
  EXPECT_EQ(quantum_integer(1), LaurentInt(1));
  EXPECT_EQ(quantum_integer(2), x(2) + x(-2));
  EXPECT_EQ(quantum_integer(3), x(4) + LaurentInt(1) + x(-4));
  EXPECT_EQ(quantum_integer(-2), -quantum_integer(2));
}

TEST(Rings, QuantumIntegerAtOne) {
  for (int n = -6; n <= 10; ++n) EXPECT_EQ(evaluate_at_one(quantum_integer(n)), n);
}

TEST(Rings, QuantumIntegerRecurrence) {
  // [2][n] = [n+1] + [n-1]
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(quantum_integer(2) * quantum_integer(n), quantum_integer(n + 1) + quantum_integer(n - 1));
  }
}

TEST(Rings, LaurentBasics) {
  EXPECT_EQ(x(1) * x(-1), LaurentInt(1));
  EXPECT_EQ(q_power(1), x(2));
  const LaurentInt d = q_power(1) + q_power(-1);
  EXPECT_EQ(d * d, q_power(2) + LaurentInt(2) + q_power(-2));
  EXPECT_TRUE((x(3) - x(3)).is_zero());
  EXPECT_EQ(LaurentInt(0), LaurentInt());
  EXPECT_TRUE(x(5).is_unit());
  EXPECT_TRUE((-x(5)).is_unit());
  EXPECT_FALSE(LaurentInt(2).is_unit());
  EXPECT_FALSE((x(1) + LaurentInt(1)).is_unit());
  EXPECT_EQ((-x(3)).unit_inverse(), -x(-3));
  EXPECT_THROW((void)LaurentInt(2).unit_inverse(), std::domain_error);
  EXPECT_EQ(x(1).pow(-3), x(-3));
  EXPECT_EQ((x(1) + x(-1)).pow(0), LaurentInt(1));
}

TEST(Rings, LaurentCanonicalForm) {
  const auto p = LaurentInt::from_terms({{2, 1}, {-1, 3}, {2, -1}, {0, 0}, {-1, 1}});
  ASSERT_EQ(p.terms().size(), 1U);
  EXPECT_EQ(p.terms()[0].first, -1);
  EXPECT_EQ(p.terms()[0].second.value(), 4);
  EXPECT_EQ(p.min_exponent(), -1);
  EXPECT_EQ(p.max_exponent(), -1);
}

TEST(Rings, CyclotomicBasics) {
  EXPECT_EQ(a_power(4), CycloLaurent(-1));
  EXPECT_EQ(a_power(8), CycloLaurent(1));
  EXPECT_TRUE((a_power(2) + a_power(-2)).is_zero());
  EXPECT_EQ(a_power(-1), -a_power(3));
  EXPECT_EQ(a_power(1) * a_power(-1), CycloLaurent(1));
  for (int k = -9; k <= 9; ++k) {
    EXPECT_TRUE(a_power(k).is_unit());
    EXPECT_EQ(a_power(k).unit_inverse(), a_power(-k));
  }
  EXPECT_FALSE((a_power(0) + a_power(1)).is_unit());
}

TEST(Rings, RingAxiomsRandom) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const auto p = oracle::random_laurent(rng), q = oracle::random_laurent(rng), r = oracle::random_laurent(rng);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(p + q, q + p);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(evaluate_at_one(p * q), evaluate_at_one(p) * evaluate_at_one(q));
  }
  for (int t = 0; t < 300; ++t) {
    const auto p = oracle::random_cyclo(rng), q = oracle::random_cyclo(rng), r = oracle::random_cyclo(rng);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
  }
}

TEST(Rings, EmbeddingIsRingMap) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const auto p = oracle::random_laurent(rng), q = oracle::random_laurent(rng);
    EXPECT_EQ(embed(p * q), embed(p) * embed(q));
    EXPECT_EQ(embed(p + q), embed(p) + embed(q));
    EXPECT_EQ(embed_inner(p * q), embed_inner(p) * embed_inner(q));
  }
}

TEST(Rings, CyclotomicScalarAgreesWithComplexEvaluation) {
  // a -> exp(i pi/4) is a root of a^4 + 1; products must agree numerically.
  const std::complex<double> a = std::polar(1.0, std::acos(-1.0) / 4);
  auto value = [&](const CycloInt& c) {
    std::complex<double> s = 0;
    for (int k = 0; k < 4; ++k) s += static_cast<double>(c.coeff(k).value()) * std::pow(a, k);
    return s;
  };
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 200; ++t) {
    const CycloInt p(d(rng), d(rng), d(rng), d(rng)), q(d(rng), d(rng), d(rng), d(rng));
    EXPECT_LT(std::abs(value(p * q) - value(p) * value(q)), 1e-9);
  }
}

TEST(Rings, OverflowThrows) {
  const CheckedInt big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW((void)(big + CheckedInt(1)), std::overflow_error);
  EXPECT_THROW((void)(big * CheckedInt(2)), std::overflow_error);
  EXPECT_THROW((void)(CheckedInt(std::numeric_limits<std::int64_t>::min()) - CheckedInt(1)), std::overflow_error);
}

TEST(Rings, IntegralBlobParams) {
  const auto p = BlobParams<>::integral(1);
  EXPECT_EQ(p.delta, quantum_integer(2));
  EXPECT_TRUE(p.gamma.is_zero());
  EXPECT_EQ(p.delta_e, q_power(1) - q_power(-1));
  const auto p3 = BlobParams<>::integral(3);
  EXPECT_EQ(p3.gamma, q_power(2) - q_power(-2));
  EXPECT_EQ(p3.delta_e, q_power(3) - q_power(-3));
}
