#pragma once

// Taylor coefficients alpha_k(s) of ((-log(1-t))/t)^{s-1}, their a priori
// bound, and the derivatives alpha_k'(1).

#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "zident/combinat.hpp"
#include "zident/mpnum.hpp"

namespace zident {

struct AlphaTable {
  BigComplex s;
  long K = 0;
  std::vector<BigComplex> coeffs;  // alpha_0 .. alpha_K
  int working_digits = 0;
  // Set when some |alpha_k| exceeded alpha_bound(s,k) by more than the slack.
  bool bound_exceeded = false;

  const BigComplex& operator[](long k) const { return coeffs[static_cast<std::size_t>(k)]; }
};

// c_s (1 + log(k+1))^{|s|+1} / (k+1), c_s = (|s-1|/(|s|+1)) (|s|+2) 2^{|s|+1}.
inline double alpha_bound_log10(double abs_s, double abs_s_minus_1, long k) {
  if (abs_s_minus_1 == 0.0) return -std::numeric_limits<double>::infinity();
  double l = std::log10(abs_s_minus_1) - std::log10(abs_s + 1) + std::log10(abs_s + 2) +
             (abs_s + 1) * std::log10(2.0);
  return l + (abs_s + 1) * std::log10(1 + std::log(static_cast<double>(k) + 1)) -
         std::log10(static_cast<double>(k) + 1);
}

inline BigReal alpha_bound(const BigComplex& s, long k) {
  if (k < 0) throw DomainError("alpha_bound: k must be non-negative");
  mpfr_prec_t p = std::max<mpfr_prec_t>(64, s.prec());
  BigComplex sp(s, p);
  BigReal as = abs(sp);
  BigReal asm1 = abs(sp - 1L);
  if (asm1.is_zero()) return BigReal(p);
  BigReal two(2L, p);
  BigReal c = asm1 / (as + 1L) * (as + 2L) * pow(two, as + 1L);
  BigReal lk = log(BigReal(k + 1, p)) + 1L;
  return c * pow(lk, as + 1L) / (k + 1);
}

// sup_{k > K} alpha_bound(s,k) as a log10; the bound peaks at k+1 = e^{|s|}.
inline double alpha_bound_sup_log10(const BigComplex& s, long K) {
  double as = abs(s).to_double(), asm1 = abs(s - 1L).to_double();
  double peak = std::exp(as) - 1;
  long k = static_cast<long>(K) + 1;
  if (peak > static_cast<double>(k)) k = static_cast<long>(std::min(peak, 1e15));
  return std::max(alpha_bound_log10(as, asm1, K + 1), alpha_bound_log10(as, asm1, k));
}

namespace detail {

// Extends coeffs (alpha_0..alpha_{n-1} already present, n >= 2) up to alpha_K.
// alpha_{k+1} = 1/(k(k+1)(k+2)) sum_{j=1}^{k} alpha_j j (k + k^2 + s(2k+2-j)) / ((k-j+1)(k-j+2))
inline void alpha_extend(const BigComplex& s, std::vector<BigComplex>& coeffs, std::vector<BigComplex>& beta,
                         long K, mpfr_prec_t prec) {
  bool real = s.is_real();
  BigReal acc_re(prec), acc_im(prec), t(prec), u(prec);
  for (long k = static_cast<long>(coeffs.size()) - 1; k < K; ++k) {
    mpfr_set_zero(acc_re.get(), 1);
    mpfr_set_zero(acc_im.get(), 1);
    long kk = k + k * k;
    for (long j = 1; j <= k; ++j) {
      const BigComplex& a = coeffs[static_cast<std::size_t>(j)];
      const BigComplex& b = beta[static_cast<std::size_t>(j)];
      long A = j * kk;
      long B = j * (2 * k + 2 - j);
      long D = (k - j + 1) * (k - j + 2);
      mpfr_mul_si(t.get(), a.re().get(), A, MPFR_RNDN);
      mpfr_mul_si(u.get(), b.re().get(), B, MPFR_RNDN);
      mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDN);
      mpfr_div_si(t.get(), t.get(), D, MPFR_RNDN);
      mpfr_add(acc_re.get(), acc_re.get(), t.get(), MPFR_RNDN);
      if (!real) {
        mpfr_mul_si(t.get(), a.im().get(), A, MPFR_RNDN);
        mpfr_mul_si(u.get(), b.im().get(), B, MPFR_RNDN);
        mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDN);
        mpfr_div_si(t.get(), t.get(), D, MPFR_RNDN);
        mpfr_add(acc_im.get(), acc_im.get(), t.get(), MPFR_RNDN);
      }
    }
    long den = k * (k + 1) * (k + 2);
    mpfr_div_si(acc_re.get(), acc_re.get(), den, MPFR_RNDN);
    mpfr_div_si(acc_im.get(), acc_im.get(), den, MPFR_RNDN);
    BigComplex next(acc_re, acc_im);
    beta.push_back(next * s);
    coeffs.push_back(std::move(next));
  }
}

inline std::string alpha_cache_key(const BigComplex& s, mpfr_prec_t prec) {
  auto exact = [](const BigReal& x) {
    if (x.is_zero()) return std::string("0");
    mpfr_exp_t e = 0;
    char* str = mpfr_get_str(nullptr, &e, 16, 0, x.get(), MPFR_RNDN);
    std::string r = std::string(str) + "p" + std::to_string(e);
    mpfr_free_str(str);
    return r;
  };
  return exact(s.re()) + "," + exact(s.im()) + "@" + std::to_string(prec);
}

struct AlphaCacheEntry {
  std::shared_ptr<const AlphaTable> table;
  std::vector<BigComplex> beta;
};

}  // namespace detail

// Exact alpha_0..alpha_K at a rational point s.
inline std::vector<mpq_class> alpha_exact(const mpq_class& s, long K) {
  if (K < 0) throw DomainError("alpha_exact: K must be non-negative");
  std::vector<mpq_class> a{mpq_class(1)};
  if (K >= 1) a.push_back((s - 1) / 2);
  for (long k = 1; k < K; ++k) {
    mpq_class acc = 0;
    for (long j = 1; j <= k; ++j) {
      mpq_class num = mpq_class(k + k * k) + s * (2 * k + 2 - j);
      acc += a[static_cast<std::size_t>(j)] * j * num / ((k - j + 1) * (k - j + 2));
    }
    a.push_back(acc / (k * (k + 1) * (k + 2)));
  }
  return a;
}

// alpha_0..alpha_K at s. Tables are cached per (s, precision) and grown in
// place; the returned table may hold more than K+1 coefficients. At s = -r,
// r <= 200, the entries up to k = r+1 are the rounded exact rationals, so the
// vanishing alpha_{r+1}(-r) = B_{r+1}/(r+1)! of even r is an exact zero.
inline std::shared_ptr<const AlphaTable> alpha_table(const BigComplex& s_in, long K, const PrecisionContext& ctx) {
  if (K < 0) throw DomainError("alpha_table: K must be non-negative");
  mpfr_prec_t prec = ctx.bits() + 32;
  BigComplex s(s_in, prec);
  std::string key = detail::alpha_cache_key(s, prec);

  static std::mutex mu;
  static std::map<std::string, detail::AlphaCacheEntry> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& entry = cache[key];
  if (entry.table && entry.table->K >= K) return entry.table;

  auto table = std::make_shared<AlphaTable>();
  table->s = s;
  table->working_digits = ctx.working_digits();
  if (entry.table) {
    table->coeffs = entry.table->coeffs;
    table->bound_exceeded = entry.table->bound_exceeded;
  } else {
    table->coeffs.push_back(BigComplex(1L, prec));
    table->coeffs.push_back((s - 1L) / 2L);
    entry.beta.push_back(table->coeffs[0] * s);
    entry.beta.push_back(table->coeffs[1] * s);
  }
  long from = static_cast<long>(table->coeffs.size());
  detail::alpha_extend(s, table->coeffs, entry.beta, K, prec);
  table->K = static_cast<long>(table->coeffs.size()) - 1;
  if (is_nonpositive_integer(s) && s.re() >= BigReal(-200L, 64)) {
    long r = -s.re().to_long();
    long top = std::min(table->K, r + 1);
    if (from <= top) {
      auto ex = alpha_exact(mpq_class(-r), top);
      for (long k = from; k <= top; ++k) table->coeffs[static_cast<std::size_t>(k)] = BigComplex(ex[static_cast<std::size_t>(k)], prec);
    }
  }

  double as = abs(s).to_double(), asm1 = abs(s - 1L).to_double();
  double slack = std::log10(1 + std::pow(10.0, -ctx.target_digits / 2.0));
  for (long k = std::max<long>(from, 1); k <= table->K; ++k) {
    const BigComplex& a = table->coeffs[static_cast<std::size_t>(k)];
    if (a.is_zero()) continue;
    double la = abs(a).log10_abs();
    if (la > alpha_bound_log10(as, asm1, k) + slack + 1e-12) table->bound_exceeded = true;
  }
  entry.table = table;
  return entry.table;
}

// alpha_k'(1) for k = 0..K, exact:
// alpha'_{k+1}(1) = 1/(k+2) - 1/(k+1) sum_{j=1}^{k} j/(k-j+2) alpha'_j(1).
// With verify set each value is recomputed as (1/(k k!)) int_0^1 x(x+1)...(x+k-1) dx.
inline std::vector<mpq_class> alpha_prime_at_1(long K, bool verify = false) {
  if (K < 0) throw DomainError("alpha_prime_at_1: K must be non-negative");
  std::vector<mpq_class> d{mpq_class(0)};
  for (long k = 0; k < K; ++k) {
    mpq_class acc = 0;
    for (long j = 1; j <= k; ++j) acc += make_rational(j, k - j + 2) * d[static_cast<std::size_t>(j)];
    d.push_back(mpq_class(1, k + 2) - acc / (k + 1));
  }
  if (verify) {
    for (long k = 1; k <= K; ++k) {
      mpq_class integral = 0;
      for (long l = 1; l <= k; ++l) integral += make_rational(abs(stirling1(k, l)), l + 1);
      integral /= mpq_class(k * factorial(k));
      if (integral != d[static_cast<std::size_t>(k)])
        throw PrecisionError("alpha'_k(1) recursion and integral formula disagree at k=" + std::to_string(k));
    }
  }
  return d;
}

}  // namespace zident
