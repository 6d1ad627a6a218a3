#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "zident/alpha.hpp"

using namespace zident;

namespace {

using Series = std::vector<mpq_class>;

Series mul(const Series& a, const Series& b, std::size_t n) {
  Series r(n, mpq_class(0));
  for (std::size_t i = 0; i < n && i < a.size(); ++i)
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Series inverse(const Series& a, std::size_t n) {
  Series r(n, mpq_class(0));
  r[0] = 1 / a[0];
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * r[k - j];
    r[k] = -acc / a[0];
  }
  return r;
}

// Coefficients of (-log(1-t)/t)^{s-1} for integer s, by exact series arithmetic.
Series generating_function(long s, std::size_t n) {
  Series f(n);
  for (std::size_t k = 0; k < n; ++k) f[k] = mpq_class(1, static_cast<long>(k) + 1);
  long e = s - 1;
  Series base = e >= 0 ? f : inverse(f, n);
  Series r(n, mpq_class(0));
  r[0] = 1;
  for (long i = 0; i < std::labs(e); ++i) r = mul(r, base, n);
  return r;
}

}  // namespace

TEST(AlphaTable, FirstCoefficients) {
  auto ctx = make_context(30);
  auto p = ctx.bits();
  auto t = alpha_table(parse_complex("0.3+2.1i", ctx), 5, ctx);
  EXPECT_TRUE((*t)[0].re() == BigReal(1L, p));
  EXPECT_TRUE((*t)[0].im().is_zero());
  BigComplex expect = (parse_complex("0.3+2.1i", ctx) - 1L) / 2L;
  EXPECT_GE(agreeing_digits((*t)[1], expect), 30);

  auto t3 = alpha_table(BigComplex(3L, p), 2, ctx);
  EXPECT_GE(agreeing_digits((*t3)[1], BigComplex(1L, p)), 30);
  auto t2 = alpha_table(BigComplex(2L, p), 2, ctx);
  EXPECT_GE(agreeing_digits((*t2)[2], BigComplex(mpq_class(1, 3), p)), 30);
  auto tm1 = alpha_table(BigComplex(-1L, p), 2, ctx);
  EXPECT_GE(agreeing_digits((*tm1)[2], BigComplex(mpq_class(1, 12), p)), 30);
}

TEST(AlphaTable, VanishesAtOne) {
  auto ctx = make_context(30);
  auto t = alpha_table(BigComplex(1L, ctx.bits()), 40, ctx);
  for (long k = 1; k <= 40; ++k) EXPECT_TRUE((*t)[k].is_zero()) << k;
}

TEST(AlphaTable, CacheExtendsInPlace) {
  auto ctx = make_context(25);
  BigComplex s = parse_complex("2.5-1i", ctx);
  auto small = alpha_table(s, 10, ctx);
  auto big = alpha_table(s, 60, ctx);
  ASSERT_GE(big->K, 60);
  for (long k = 0; k <= 10; ++k) EXPECT_TRUE((*small)[k].re() == (*big)[k].re());
}

TEST(AlphaExact, MatchesFloatMode) {
  auto ctx = make_context(40);
  mpq_class s(7, 3);
  auto e = alpha_exact(s, 30);
  auto f = alpha_table(BigComplex(s, ctx.bits()), 30, ctx);
  for (long k = 0; k <= 30; ++k)
    EXPECT_GE(agreeing_digits((*f)[k], BigComplex(e[static_cast<std::size_t>(k)], ctx.bits())), 38) << k;
}

TEST(AlphaExact, GeneratingFunctionOracle) {
  for (long s : {2L, 3L, -1L, -2L}) {
    auto gf = generating_function(s, 31);
    auto a = alpha_exact(mpq_class(s), 30);
    for (std::size_t k = 0; k <= 30; ++k) EXPECT_EQ(a[k], gf[k]) << "s=" << s << " k=" << k;
  }
}

TEST(AlphaExact, NegativeIntegerBernoulli) {
  auto B = oracle::bernoulli_numbers(21);
  for (long r = 0; r <= 20; ++r) {
    auto a = alpha_exact(mpq_class(-r), r + 1);
    mpq_class expect = B[static_cast<std::size_t>(r) + 1] / mpq_class(factorial(r + 1));
    EXPECT_EQ(a[static_cast<std::size_t>(r) + 1], expect) << r;
  }
}

TEST(Property, PositiveForIntegerS) {
  for (long s = 2; s <= 10; ++s) {
    auto a = alpha_exact(mpq_class(s), 50);
    for (std::size_t k = 1; k <= 50; ++k) EXPECT_GT(a[k], 0) << s << " " << k;
  }
}

TEST(AlphaBound, Values) {
  auto p = digits_to_bits(30);
  EXPECT_NEAR(alpha_bound(BigComplex(0L, p), 0).to_double(), 4.0, 1e-12);
  EXPECT_TRUE(alpha_bound(BigComplex(1L, p), 7).is_zero());
  double expect = (1.0 / 3) * 4 * 8 * std::pow(1 + std::log(10.0), 3) / 10;
  EXPECT_NEAR(alpha_bound(BigComplex(2L, p), 9).to_double(), expect, 1e-12 * expect);
}

TEST(Property, BoundHoldsOnGrid) {
  auto ctx = make_context(20);
  const char* grid[] = {"-9.5", "-3+4i", "0.5", "2", "4.5-7i", "10i", "-6-6i", "7.25"};
  for (const char* txt : grid) {
    BigComplex s = parse_complex(txt, ctx);
    auto t = alpha_table(s, 2048, ctx);
    EXPECT_FALSE(t->bound_exceeded) << txt;
    for (long k = 0; k <= 2048; k += (k < 64 ? 1 : 37)) {
      BigReal b = alpha_bound(s, k);
      EXPECT_LE(abs((*t)[k]).to_double(), b.to_double() * (1 + 1e-10)) << txt << " k=" << k;
    }
  }
}

TEST(AlphaPrime, SmallValues) {
  auto d = alpha_prime_at_1(5, true);
  EXPECT_EQ(d[0], 0);
  EXPECT_EQ(d[1], mpq_class(1, 2));
  EXPECT_EQ(d[2], mpq_class(5, 24));
}

TEST(AlphaPrime, RecursionMatchesIntegral) {
  EXPECT_NO_THROW(alpha_prime_at_1(40, true));
}

TEST(AlphaPrime, MatchesNumericalDerivative) {
  // alpha_k'(1) from the exact rational tables at 1 +- h, h = 10^-30
  mpq_class h(1, mpz_class("1000000000000000000000000000000"));
  auto up = alpha_exact(1 + h, 12);
  auto dn = alpha_exact(1 - h, 12);
  auto d = alpha_prime_at_1(12);
  auto p = digits_to_bits(60);
  for (std::size_t k = 1; k <= 12; ++k) {
    mpq_class num = (up[k] - dn[k]) / (2 * h);
    EXPECT_GE(agreeing_digits(BigComplex(num, p), BigComplex(d[k], p)), 50) << k;
  }
}
