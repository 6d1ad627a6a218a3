#pragma once

// Reference values for the tests, computed by routes that share no series
// code with the library: MPFR's own special functions, the classical
// Euler-Maclaurin formula for Hurwitz sums, Cohen-Villegas-Zagier acceleration
// for alternating series, and Bernoulli numbers by the Akiyama-Tanigawa
// algorithm.

#include <gmpxx.h>
#include <mpfr.h>

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "zident/dirichlet.hpp"
#include "zident/mpnum.hpp"

namespace oracle {

using zident::BigComplex;
using zident::BigReal;

inline BigReal mpfr_zeta_at(const BigReal& s, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_zeta(r.get(), BigReal(s, prec).get(), MPFR_RNDN);
  return r;
}

inline BigReal mpfr_gamma_at(const BigReal& s, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_gamma(r.get(), BigReal(s, prec).get(), MPFR_RNDN);
  return r;
}

inline BigReal mpfr_digamma_at(const BigReal& s, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_digamma(r.get(), BigReal(s, prec).get(), MPFR_RNDN);
  return r;
}

inline BigReal catalan(mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_const_catalan(r.get(), MPFR_RNDN);
  return r;
}

inline BigReal euler_constant(mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

inline BigReal pi(mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

// Bernoulli numbers B_0..B_n (B_1 = -1/2) by the Akiyama-Tanigawa algorithm.
inline std::vector<mpq_class> bernoulli_numbers(long n) {
  std::vector<mpq_class> out;
  std::vector<mpq_class> a(static_cast<std::size_t>(n) + 1);
  for (long m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
    for (long j = m; j >= 1; --j) {
      a[static_cast<std::size_t>(j) - 1] = j * (a[static_cast<std::size_t>(j) - 1] - a[static_cast<std::size_t>(j)]);
      a[static_cast<std::size_t>(j) - 1].canonicalize();
    }
    out.push_back(a[0]);  // this yields B_1 = +1/2
  }
  if (n >= 1) out[1] = mpq_class(-1, 2);
  return out;
}

inline mpz_class choose(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
inline mpq_class bernoulli_polynomial(long n, const mpq_class& x) {
  auto B = bernoulli_numbers(n);
  mpq_class acc = 0, xp = 1;
  for (long k = n; k >= 0; --k) {
    acc += mpq_class(choose(n, k)) * B[static_cast<std::size_t>(k)] * xp;
    xp *= x;
  }
  return acc;
}

// zeta(-r, a) = -B_{r+1}(a)/(r+1).
inline mpq_class hurwitz_negative_integer(long r, const mpq_class& a) {
  mpq_class v = -bernoulli_polynomial(r + 1, a) / (r + 1);
  v.canonicalize();
  return v;
}

// L(1-n, chi) = -B_{n,chi}/n with B_{n,chi} = q^{n-1} sum_a chi(a) B_n(a/q).
inline BigComplex l_one_minus_n(long n, const zident::DirichletCharacter& chi, mpfr_prec_t prec) {
  mpz_class qp;
  mpz_ui_pow_ui(qp.get_mpz_t(), static_cast<unsigned long>(chi.q), static_cast<unsigned long>(n - 1));
  BigComplex acc(prec);
  for (long a = 1; a <= chi.q; ++a) {
    if (chi.is_zero_at(a)) continue;
    mpq_class v = -mpq_class(qp) * bernoulli_polynomial(n, mpq_class(a, chi.q)) / n;
    v.canonicalize();
    acc += chi.value(a, prec) * BigReal(v, prec);
  }
  return acc;
}

// sum_{n>=0} (n+a)^{-s} by the classical Euler-Maclaurin formula with
// M direct terms and P Bernoulli corrections.
inline BigComplex em_hurwitz(const BigComplex& s_in, const BigComplex& a_in, int digits) {
  mpfr_prec_t prec = zident::digits_to_bits(digits + 20);
  BigComplex s(s_in, prec);
  BigComplex a(a_in, prec);
  double as = zident::abs(s).to_double();
  long M = static_cast<long>(2 * digits + 4 * as) + 20;
  long P = digits / 2 + static_cast<long>(as) + 10;
  BigComplex acc(prec);
  BigComplex ms = -s;
  for (long n = 0; n < M; ++n) acc += zident::pow(a + n, ms);
  BigComplex X = a + M;
  BigComplex xs = zident::pow(X, ms);
  acc += xs * X / (s - 1L);
  acc += xs / 2L;
  auto B = bernoulli_numbers(2 * P);
  // term_k = B_{2k}/(2k)! s(s+1)...(s+2k-2) X^{-s-2k+1}
  BigComplex rising = s;  // s(s+1)...(s+2k-2)
  BigReal fact(2L, prec);  // (2k)!
  BigComplex xpow = xs / X;  // X^{-s-1}
  BigComplex X2 = X * X;
  for (long k = 1; k <= P; ++k) {
    if (k > 1) {
      rising = rising * (s + (2 * k - 3)) * (s + (2 * k - 2));
      fact *= (2 * k - 1) * (2 * k);
      xpow /= X2;
    }
    acc += rising * xpow * BigReal(B[static_cast<std::size_t>(2 * k)], prec) / fact;
  }
  return acc;
}

inline BigComplex em_hurwitz(const BigComplex& s, const BigReal& a, int digits) {
  return em_hurwitz(s, BigComplex(a), digits);
}

// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q), each Hurwitz sum by em_hurwitz.
inline BigComplex dirichlet_series(const BigComplex& s, const zident::DirichletCharacter& chi, int digits) {
  mpfr_prec_t prec = zident::digits_to_bits(digits + 20);
  BigComplex acc(prec);
  for (long a = 1; a < chi.q; ++a) {
    if (chi.is_zero_at(a)) continue;
    acc += chi.value(a, prec) * em_hurwitz(s, BigReal(mpq_class(a, chi.q), prec), digits);
  }
  return acc * zident::pow(BigReal(chi.q, prec), -BigComplex(s, prec));
}

// sum_{k>=0} (-1)^k a_k by Cohen-Villegas-Zagier, algorithm 1, n terms.
inline BigComplex alternating_sum(const std::function<BigComplex(long)>& a, long n, mpfr_prec_t prec) {
  BigReal three(3L, prec);
  BigReal d = zident::pow(three + zident::sqrt(BigReal(8L, prec)), n);
  d = (d + BigReal(1L, prec) / d) / 2L;
  BigReal b(-1L, prec);
  BigReal c = -d;
  BigComplex s(prec);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += a(k) * c;
    BigReal half_k(mpq_class(2 * k + 1, 2), prec);
    b = b * (k + n) * (k - n) / (half_k * (k + 1));
  }
  return s / d;
}

// Rows of a published remainder table: K followed by the four N columns.
struct TableRow {
  long K;
  std::vector<std::string> cells;
};

inline std::vector<TableRow> read_table(const std::string& path) {
  std::ifstream in(path);
  std::vector<TableRow> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    TableRow r{};
    std::getline(ss, cell, ',');
    r.K = std::stol(cell);
    while (std::getline(ss, cell, ',')) r.cells.push_back(cell);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace oracle
