#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zident/dirichlet.hpp"
#include "zident/zetafun.hpp"

using namespace zident;

namespace {

DirichletCharacter first_nontrivial(long q, int parity = 0) {
  for (const auto& c : enumerate_characters(q))
    if (!c.is_trivial && (parity == 0 || c.parity == parity)) return c;
  throw std::runtime_error("no such character");
}

}  // namespace

TEST(Characters, CountsAndOrders) {
  EXPECT_EQ(enumerate_characters(3).size(), 2u);
  EXPECT_EQ(enumerate_characters(4).size(), 2u);
  EXPECT_EQ(enumerate_characters(12).size(), 4u);
  auto five = enumerate_characters(5);
  ASSERT_EQ(five.size(), 4u);
  EXPECT_TRUE(five[0].is_trivial);
  std::vector<long> orders;
  for (const auto& c : five) {
    long o = 1;
    while (true) {
      bool ok = true;
      for (long n = 1; n < 5; ++n)
        if ((c.exponent_at(n) * o) % c.order) ok = false;
      if (ok) break;
      ++o;
    }
    orders.push_back(o);
  }
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<long>{1, 2, 4, 4}));
}

TEST(Characters, ModFourValues) {
  auto chi = character_from_label("4.1");
  auto p = digits_to_bits(20);
  EXPECT_EQ(chi.parity, -1);
  EXPECT_TRUE(chi.is_real());
  EXPECT_EQ(chi.value(1, p).re().to_double(), 1.0);
  EXPECT_EQ(chi.value(3, p).re().to_double(), -1.0);
  EXPECT_TRUE(chi.is_zero_at(2));
  EXPECT_TRUE(chi.is_zero_at(0));
}

TEST(Characters, Multiplicative) {
  auto p = digits_to_bits(30);
  for (long q : {5L, 8L, 9L, 12L, 15L}) {
    for (const auto& c : enumerate_characters(q))
      for (long m = 1; m < q; ++m)
        for (long n = 1; n < q; ++n) {
          BigComplex lhs = c.value(m * n, p);
          BigComplex rhs = c.value(m, p) * c.value(n, p);
          EXPECT_LE(abs(lhs - rhs).to_double(), 1e-25) << c.label << " " << m << " " << n;
        }
  }
}

TEST(Characters, Labels) {
  EXPECT_THROW(character_from_label("4"), ParseError);
  EXPECT_THROW(character_from_label("4.x"), ParseError);
  EXPECT_THROW(character_from_label("4.9"), DomainError);
  EXPECT_EQ(character_from_label("7.3").label, "7.3");
}

TEST(Characters, Primitivity) {
  EXPECT_TRUE(character_from_label("4.1").is_primitive);
  int primitive8 = 0;
  for (const auto& c : enumerate_characters(8)) primitive8 += c.is_primitive;
  EXPECT_EQ(primitive8, 2);
  int primitive9 = 0;
  for (const auto& c : enumerate_characters(9)) primitive9 += c.is_primitive;
  EXPECT_EQ(primitive9, 4);
}

// sum_m chi(m) conj(psi(m)) = phi(q) [chi = psi] for every pair, q <= 24.
TEST(Property, Orthogonality) {
  auto p = digits_to_bits(40);
  for (long q = 1; q <= 24; ++q) {
    auto all = enumerate_characters(q);
    long phi = static_cast<long>(all.size());
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        BigComplex acc(p);
        for (long m = 1; m <= q; ++m)
          if (!all[i].is_zero_at(m)) acc += all[i].value(m, p) * conj(all[j].value(m, p));
        double expect = i == j ? static_cast<double>(phi) : 0.0;
        EXPECT_LE(abs(acc - BigComplex(static_cast<long>(expect), p)).to_double(), 1e-30)
            << "q=" << q << " " << i << "," << j;
      }
  }
}

TEST(GaussSum, KnownValues) {
  auto ctx = make_context(30);
  auto p = ctx.bits();
  BigComplex t4 = gauss_sum(character_from_label("4.1"), ctx);
  EXPECT_GE(agreeing_digits(t4, BigComplex(BigReal(p), BigReal(2L, p))), 29);
  BigComplex t3 = gauss_sum(character_from_label("3.1"), ctx);
  EXPECT_GE(agreeing_digits(t3, BigComplex(BigReal(p), sqrt(BigReal(3L, p)))), 29);
}

TEST(Property, GaussSumModulus) {
  auto ctx = make_context(30);
  auto p = ctx.bits();
  for (long q : {3L, 4L, 5L, 7L, 8L, 9L})
    for (const auto& c : enumerate_characters(q)) {
      if (!c.is_primitive || c.is_trivial) continue;
      BigReal m = abs(gauss_sum(c, ctx));
      EXPECT_GE(agreeing_digits(BigComplex(m), BigComplex(sqrt(BigReal(q, p)))), 28) << c.label;
    }
}

TEST(LFunction, CatalanAtTwo) {
  auto ctx = make_context(40);
  auto r = l_function(BigComplex(2L, ctx.bits()), character_from_label("4.1"), -1, -1, ctx);
  EXPECT_GE(agreeing_digits(r.value, BigComplex(oracle::catalan(ctx.bits()))), 40);
}

TEST(LFunction, AgainstEulerMaclaurin) {
  auto ctx = make_context(20);
  for (const auto& c : enumerate_characters(5)) {
    if (c.is_trivial) continue;
    auto r = l_function(BigComplex(3L, ctx.bits()), c, -1, -1, ctx);
    EXPECT_GE(agreeing_digits(r.value, oracle::dirichlet_series(BigComplex(3L, ctx.bits()), c, 30)), 20) << c.label;
  }
  BigComplex s = parse_complex("0.5+3i", ctx);
  for (long q : {7L, 8L}) {
    auto c = first_nontrivial(q);
    auto r = l_function(s, c, -1, -1, ctx);
    EXPECT_GE(agreeing_digits(r.value, oracle::dirichlet_series(s, c, 30)), 20) << c.label;
  }
}

TEST(LFunction, ValueAtZero) {
  auto ctx = make_context(30);
  auto r = l_function(BigComplex(ctx.bits()), character_from_label("4.1"), -1, -1, ctx);
  EXPECT_GE(agreeing_digits(r.value, BigComplex(mpq_class(1, 2), ctx.bits())), 29);
}

TEST(LFunction, TrivialCharacterRejected) {
  auto ctx = make_context(20);
  EXPECT_THROW(l_function(BigComplex(2L, ctx.bits()), character_from_label("5.0"), -1, -1, ctx), DomainError);
}

TEST(LAtOne, ClosedForms) {
  auto ctx = make_context(40);
  auto p = ctx.bits();
  BigComplex l4 = l_at_1(character_from_label("4.1"), ctx);
  EXPECT_GE(agreeing_digits(l4, BigComplex(oracle::pi(p) / 4L)), 40);
  BigComplex l3 = l_at_1(character_from_label("3.1"), ctx);
  EXPECT_GE(agreeing_digits(l3, BigComplex(oracle::pi(p) / (sqrt(BigReal(3L, p)) * 3L))), 40);
}

TEST(LAtOne, ContinuousAtOne) {
  auto ctx = make_context(30);
  auto p = ctx.bits();
  BigComplex s = BigComplex(1L, p) + BigComplex(BigReal(std::string_view("1e-25"), p));
  for (long q : {5L, 7L}) {
    auto c = first_nontrivial(q);
    auto near = l_function(s, c, -1, -1, ctx);
    EXPECT_LE(abs(near.value - l_at_1(c, ctx)).to_double(), 1e-20) << c.label;
  }
}

TEST(LShifted, Examples) {
  auto ctx = make_context(30);
  auto p = ctx.bits();
  auto chi4 = character_from_label("4.1");
  auto r = l_shifted(BigComplex(3L, p), 1, chi4, -1, -1, ctx);
  EXPECT_GE(agreeing_digits(r.value, BigComplex(oracle::catalan(p))), 29);
  auto chi5 = first_nontrivial(5);
  auto r2 = l_shifted(BigComplex(3L, p), 2, chi5, -1, -1, ctx);
  EXPECT_GE(agreeing_digits(r2.value, l_at_1(chi5, ctx)), 29);
  BigComplex s = parse_complex("2.5+1i", ctx);
  auto a = l_shifted(s, 0, chi5, -1, -1, ctx);
  auto b = l_function(s, chi5, -1, -1, ctx);
  EXPECT_TRUE(a.value.re() == b.value.re() && a.value.im() == b.value.im());
}

// The same L(t, chi) reached through different shifts.
TEST(Property, ShiftIndependence) {
  auto ctx = make_context(25);
  for (long q : {5L, 7L, 8L}) {
    auto c = first_nontrivial(q);
    BigComplex t = parse_complex("0.25+1.5i", ctx);
    auto base = l_function(t, c, -1, -1, ctx);
    for (long lam : {1L, 3L}) {
      auto sh = l_shifted(t + lam, lam, c, -1, -1, ctx);
      EXPECT_GE(agreeing_digits(sh.value, base.value), 24) << c.label << " lambda=" << lam;
    }
  }
}

TEST(LNegativeInteger, GeneralizedBernoulli) {
  auto ctx = make_context(40);
  auto p = ctx.bits();
  for (long q : {3L, 4L, 5L, 7L, 8L, 12L})
    for (const auto& c : enumerate_characters(q)) {
      if (c.is_trivial || !c.is_primitive) continue;
      for (long r = 0; r <= 8; ++r) {
        BigComplex got = l_negative_integer(r, c, ctx);
        BigComplex want = oracle::l_one_minus_n(r + 1, c, p);
        if (want.is_zero() || abs(want).log10_abs() < -35) {
          EXPECT_LE(abs(got).to_double(), 1e-35) << c.label << " r=" << r;
        } else {
          EXPECT_GE(agreeing_digits(got, want), 38) << c.label << " r=" << r;
        }
      }
    }
}

TEST(LOneMinusLambda, MatchesOtherRoutes) {
  auto ctx = make_context(30);
  for (long q : {3L, 4L, 5L, 7L}) {
    for (const auto& c : enumerate_characters(q)) {
      if (c.is_trivial) continue;
      EXPECT_GE(agreeing_digits(l_one_minus_lambda(0, c, ctx), l_at_1(c, ctx)), 29) << c.label;
      for (long lam = 1; lam <= 5; ++lam) {
        BigComplex got = l_one_minus_lambda(lam, c, ctx);
        BigComplex want = l_negative_integer(lam - 1, c, ctx);
        if (want.is_zero() || abs(want).log10_abs() < -30) {
          EXPECT_LE(abs(got).to_double(), 1e-28) << c.label << " lambda=" << lam;
        } else {
          EXPECT_GE(agreeing_digits(got, want), 28) << c.label << " lambda=" << lam;
        }
      }
    }
  }
}

// L(1-n, chi) = 0 when chi(-1) = (-1)^{n-1}, for the primitive characters.
TEST(Property, ParityVanishing) {
  auto ctx = make_context(30);
  for (long q = 3; q <= 8; ++q)
    for (const auto& c : enumerate_characters(q)) {
      if (c.is_trivial || !c.is_primitive) continue;
      for (long n = 1; n <= 6; ++n) {
        int sign = n % 2 ? 1 : -1;
        if (c.parity != sign) continue;
        EXPECT_LE(abs(l_negative_integer(n - 1, c, ctx)).to_double(), 1e-38) << c.label << " n=" << n;
      }
    }
}

TEST(Property, HurwitzDecomposition) {
  auto ctx = make_context(25);
  auto p = ctx.bits();
  for (long q : {3L, 5L, 7L}) {
    auto c = first_nontrivial(q);
    for (const char* st : {"2", "3.5", "2+1i"}) {
      BigComplex s = parse_complex(st, ctx);
      BigComplex acc(p);
      for (long m = 1; m < q; ++m) {
        if (c.is_zero_at(m)) continue;
        acc += c.value(m, p) * hurwitz_zeta(s, BigReal(mpq_class(m, q), p), -1, -1, ctx).value;
      }
      acc = acc * pow(BigReal(q, p), -s);
      EXPECT_GE(agreeing_digits(l_function(s, c, -1, -1, ctx).value, acc), 24) << c.label << " s=" << st;
    }
  }
}
