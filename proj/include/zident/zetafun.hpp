#pragma once

// Riemann and Hurwitz zeta from the alpha_k(s) series, in the plain, shifted,
// trigamma and linear-combination forms, plus the Euler-Maclaurin comparator
// and the relative-remainder tables.
//
// Every alpha-series entry point takes a shift N: the first N terms of the
// Dirichlet series are summed directly and the series is applied to the tail
// starting at a+N. N = 0 gives the unshifted formulas, which converge only
// algebraically in K.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zident/alpha.hpp"
#include "zident/combinat.hpp"
#include "zident/gammafun.hpp"
#include "zident/mpnum.hpp"

namespace zident {

namespace detail {

inline void check_zeta_pole(const BigComplex& s_minus_lambda) {
  if (s_minus_lambda.is_real() && s_minus_lambda.re() == BigReal(1L, 64))
    throw PoleError("zeta has a simple pole at s=1", "1");
}

// G_m = Gamma(s+m-1) / (Gamma(s) Gamma(s+m+a-1)) for lo <= m <= hi.
// Written as P_m R_m with P_m = Gamma(s+m-1)/Gamma(s) a finite product and
// R_m = 1/Gamma(s+m+a-1) from one base value and exact recurrences, so that
// at non-positive integers the zeros of 1/Gamma appear as exact zeros.
struct HurwitzWeights {
  long lo = 0;
  std::vector<BigComplex> G;
  const BigComplex& at(long m) const { return G[static_cast<std::size_t>(m - lo)]; }
  long hi() const { return lo + static_cast<long>(G.size()) - 1; }
};

inline HurwitzWeights hurwitz_weights(const BigComplex& s, const BigReal& a, long lo, long hi,
                                      const PrecisionContext& ctx) {
  mpfr_prec_t prec = ctx.bits();
  long plo = std::min(lo, 0L), phi = std::max(hi, 1L);
  std::vector<BigComplex> P(static_cast<std::size_t>(phi - plo + 1), BigComplex(prec));
  auto Pm = [&](long m) -> BigComplex& { return P[static_cast<std::size_t>(m - plo)]; };
  Pm(1) = BigComplex(1L, prec);
  for (long m = 2; m <= phi; ++m) Pm(m) = Pm(m - 1) * (s + (m - 2));
  for (long m = 1; m > plo; --m) {
    BigComplex d = s + (m - 2);
    if (d.is_zero())
      throw DomainError("series term is singular at this s (removable); evaluate at a nearby point");
    Pm(m - 1) = Pm(m) / d;
  }

  BigComplex sa = s + BigComplex(a);
  long m0 = static_cast<long>(std::ceil(2.0 - sa.re().to_double()));
  m0 = std::clamp(m0, lo, hi);
  std::vector<BigComplex> R(static_cast<std::size_t>(hi - lo + 1), BigComplex(prec));
  auto Rm = [&](long m) -> BigComplex& { return R[static_cast<std::size_t>(m - lo)]; };
  Rm(m0) = rgamma(sa + (m0 - 1), ctx);
  for (long m = m0 + 1; m <= hi; ++m) Rm(m) = Rm(m - 1) / (sa + (m - 2));
  for (long m = m0; m > lo; --m) Rm(m - 1) = Rm(m) * (sa + (m - 2));

  HurwitzWeights w;
  w.lo = lo;
  for (long m = lo; m <= hi; ++m) w.G.push_back(Pm(m) * Rm(m));
  return w;
}

inline bool is_integer_value(const BigReal& x) { return x.is_integer(); }

// Partial Dirichlet sum sum_{n=0}^{N-1} (n+a)^{-t}.
inline BigComplex partial_hurwitz_sum(const BigComplex& t, const BigReal& a, long N, mpfr_prec_t prec) {
  BigComplex acc(prec);
  BigComplex mt = -t;
  for (long n = 0; n < N; ++n) acc += pow(BigReal(a + n, prec), mt);
  return acc;
}

inline double lrising(double x, double n) { return std::lgamma(x + n) - std::lgamma(x); }

// Series sum_{k} alpha_k(s) sum_j c_j G_{k-j} with tail control.
struct ShiftedSeries {
  BigComplex s;
  long lambda = 0;
  BigReal a_shift;            // a + N
  std::vector<BigReal> c;     // c_{a+N}(lambda, j), j = 0..lambda
  BigComplex gamma_a;         // Gamma(a+N)
  double log10_rgamma_s = 0;  // log10 |1/Gamma(s)|
  bool integer_a = false;
};

// log10 of the tail bound after truncation at K; sets rigorous accordingly.
inline double shifted_tail_log10(const ShiftedSeries& ser, const HurwitzWeights& w, long K, bool& rigorous) {
  double sigma = ser.s.re().to_double();
  double ap = ser.a_shift.to_double();
  double lg = abs(ser.gamma_a).log10_abs();
  double sup = alpha_bound_sup_log10(ser.s, K);
  double acc = -std::numeric_limits<double>::infinity();
  auto add = [&](double l) {
    if (l == -std::numeric_limits<double>::infinity()) return;
    acc = std::max(acc, l) + std::log10(1 + std::pow(10.0, std::min(acc, l) - std::max(acc, l)));
  };
  bool positive = sigma + static_cast<double>(K - ser.lambda) > 0;
  if (is_nonpositive_integer(ser.s)) {
    // P_m vanishes for m >= 2 - s, so the series is a finite sum.
    rigorous = true;
    long r = -ser.s.re().to_long();
    return K >= r + 1 + ser.lambda ? -std::numeric_limits<double>::infinity()
                                   : std::numeric_limits<double>::infinity();
  }
  // Below this K some 1/Gamma factors vanish and the next-term estimate is blind.
  if (static_cast<double>(K) < 2.0 - sigma - ap + static_cast<double>(ser.lambda)) {
    rigorous = false;
    return std::numeric_limits<double>::infinity();
  }
  if (ser.integer_a && ap >= 2 && positive) {
    rigorous = true;
    if (ser.log10_rgamma_s == -std::numeric_limits<double>::infinity()) return ser.log10_rgamma_s;
    for (long j = 0; j <= ser.lambda; ++j) {
      double cj = ser.c[static_cast<std::size_t>(j)].is_zero() ? -std::numeric_limits<double>::infinity()
                                                             : ser.c[static_cast<std::size_t>(j)].log10_abs();
      if (cj == -std::numeric_limits<double>::infinity()) continue;
      double x = sigma + static_cast<double>(K - j);
      add(cj - std::log10(ap - 1) - lrising(x, ap - 1) / std::log(10.0));
    }
    return acc + sup + lg + ser.log10_rgamma_s;
  }
  rigorous = ser.s.is_real() && ap > 1 && positive;
  for (long j = 0; j <= ser.lambda; ++j) {
    const BigReal& c = ser.c[static_cast<std::size_t>(j)];
    const BigComplex& g = w.at(K - j + 1);
    if (c.is_zero() || g.is_zero()) continue;
    double factor = ap > 1 ? std::log10(std::fabs(sigma + static_cast<double>(K - j) + ap - 1) / (ap - 1))
                           : std::log10((static_cast<double>(K) + 2) / ap);
    add(c.log10_abs() + abs(g).log10_abs() + factor);
  }
  return acc + sup + lg;
}

inline double zeta_extra_digits(const BigComplex& s, long lambda, double a_plus_n) {
  double sigma = s.re().to_double();
  double e = std::max(0.0, 1.0 + static_cast<double>(lambda) - sigma) * std::log10(a_plus_n + 1);
  return e + 0.35 * abs(s).to_double() + 5;
}

inline long default_shift(const PrecisionContext& ctx) {
  return static_cast<long>(std::ceil(1.5 * ctx.working_digits())) + 10;
}

// zeta(s - lambda, a) = sum_{n<N} (n+a)^{lambda-s}
//   + Gamma(a+N) sum_k alpha_k(s) sum_j c_{a+N}(lambda,j) G_{k-j}.
inline SeriesResult hurwitz_core(const BigComplex& s_in, long lambda, const BigReal& a_in, long N, long K,
                                 const PrecisionContext& ctx_in) {
  if (lambda < 0) throw DomainError("lambda must be non-negative");
  if (a_in.sign() <= 0) throw DomainError("Hurwitz parameter a must be positive");
  check_zeta_pole(s_in - lambda);
  if (N < 0) {
    bool finite = is_nonpositive_integer(s_in);
    N = finite ? 0 : default_shift(ctx_in);
  }
  double extra = zeta_extra_digits(s_in, lambda, a_in.to_double() + static_cast<double>(N));
  PrecisionContext ctx = ctx_in.elevated(static_cast<int>(std::ceil(extra)));
  mpfr_prec_t prec = ctx.bits();
  BigComplex s(s_in, prec);
  BigReal a(a_in, prec);

  ShiftedSeries ser;
  ser.s = s;
  ser.lambda = lambda;
  ser.a_shift = a + N;
  ser.integer_a = ser.a_shift.is_integer();
  auto table_c = c_a_table(lambda);
  for (long j = 0; j <= lambda; ++j)
    ser.c.push_back(table_c[static_cast<std::size_t>(lambda)][static_cast<std::size_t>(j)].eval(ser.a_shift));
  ser.gamma_a = gamma(BigComplex(ser.a_shift), ctx);
  if (ser.integer_a) {
    BigComplex rg = rgamma(s, ctx);
    ser.log10_rgamma_s = rg.is_zero() ? -std::numeric_limits<double>::infinity() : abs(rg).log10_abs();
  }

  double goal = -static_cast<double>(ctx_in.working_digits());
  HurwitzWeights w;
  bool rigorous = false;
  if (K < 0) {
    long k_try = 2 * ctx_in.working_digits() + 16;
    for (;;) {
      w = hurwitz_weights(s, ser.a_shift, -lambda, k_try + 1, ctx);
      long lo = 0, hi = -1;
      for (long k = 0; k <= k_try; k = k ? 2 * k : 1) {
        bool r = false;
        if (shifted_tail_log10(ser, w, k, r) <= goal) {
          hi = k;
          break;
        }
        lo = k;
      }
      if (hi < 0 && shifted_tail_log10(ser, w, k_try, rigorous) <= goal) hi = k_try;
      if (hi >= 0) {
        while (hi - lo > 1) {
          long mid = (lo + hi) / 2;
          bool r = false;
          (shifted_tail_log10(ser, w, mid, r) <= goal ? hi : lo) = mid;
        }
        K = hi;
        break;
      }
      if (k_try > 100000) throw PrecisionError("zeta: no truncation K meets the requested precision");
      k_try *= 2;
    }
  } else {
    w = hurwitz_weights(s, ser.a_shift, -lambda, K + 1, ctx);
  }

  auto table = alpha_table(s, K, ctx);
  BigComplex sum(prec);
  for (long k = 0; k <= K; ++k) {
    const BigComplex& al = (*table)[k];
    if (al.is_zero()) continue;
    BigComplex inner(prec);
    for (long j = 0; j <= lambda; ++j) {
      const BigReal& c = ser.c[static_cast<std::size_t>(j)];
      if (c.is_zero()) continue;
      const BigComplex& g = w.at(k - j);
      if (g.is_zero()) continue;
      inner += g * c;
    }
    sum += al * inner;
  }

  SeriesResult r;
  r.value = partial_hurwitz_sum(s - lambda, a, N, prec) + ser.gamma_a * sum;
  r.value = BigComplex(r.value, ctx_in.bits());
  r.terms_used = K + 1;
  double tl = shifted_tail_log10(ser, w, K, rigorous);
  r.tail_bound = tl == -std::numeric_limits<double>::infinity() ? BigReal(64) : pow(BigReal(10L, 64), BigReal(tl, 64));
  r.heuristic_tail = !rigorous;
  r.converged = tl <= -ctx_in.target_digits;
  return r;
}

}  // namespace detail

// zeta(s,a) via the alpha_k(s) Beta-function series, after summing the first N
// terms directly. N < 0 picks a default; K < 0 picks the smallest K meeting
// the working precision.
inline SeriesResult hurwitz_zeta(const BigComplex& s, const BigReal& a, long N, long K, const PrecisionContext& ctx) {
  return detail::hurwitz_core(s, 0, a, N, K, ctx);
}

// zeta(s) = sum_{n<=N} n^{-s} + (N!/Gamma(s)) sum_k alpha_k(s) / ((s+k-1)...(s+k-1+N)).
inline SeriesResult riemann_zeta(const BigComplex& s, long N, long K, const PrecisionContext& ctx) {
  return detail::hurwitz_core(s, 0, BigReal(1L, ctx.bits()), N, K, ctx);
}

// zeta(s-lambda, a) from the alpha_k(s) series with the c_a(lambda, j) weights.
inline SeriesResult hurwitz_shifted(const BigComplex& s, long lambda, const BigReal& a, long N, long K,
                                    const PrecisionContext& ctx) {
  return detail::hurwitz_core(s, lambda, a, N, K, ctx);
}

// zeta(s-lambda) for lambda >= 1. N = 0 is the Stirling form
//   (1/Gamma(s)) sum_k alpha_k(s) sum_{j=1}^{lambda} (-1)^{lambda+j} j! S(lambda,j) / (s+k-j-1);
// N > 0 sums n <= N directly and uses the c_{N+1}(lambda, j) weights for the rest.
inline SeriesResult zeta_shifted(const BigComplex& s_in, long lambda, long N, long K, const PrecisionContext& ctx_in) {
  if (lambda < 1) throw DomainError("zeta_shifted: lambda must be at least 1");
  detail::check_zeta_pole(s_in - lambda);
  if (N != 0) return detail::hurwitz_core(s_in, lambda, BigReal(1L, ctx_in.bits()), N, K, ctx_in);
  if (K < 0) throw DomainError("zeta_shifted: the unshifted form needs an explicit K");
  PrecisionContext ctx = ctx_in.elevated(static_cast<int>(std::ceil(detail::zeta_extra_digits(s_in, lambda, 1))));
  mpfr_prec_t prec = ctx.bits();
  BigComplex s(s_in, prec);
  std::vector<BigReal> w;
  for (long j = 1; j <= lambda; ++j) {
    mpz_class v = factorial(j) * stirling2(lambda, j);
    if ((lambda + j) % 2) v = -v;
    w.emplace_back(v, prec);
  }
  auto table = alpha_table(s, K, ctx);
  BigComplex sum(prec);
  for (long k = 0; k <= K; ++k) {
    BigComplex inner(prec);
    for (long j = 1; j <= lambda; ++j) {
      BigComplex d = s + (k - j - 1);
      if (d.is_zero()) throw DomainError("zeta_shifted: singular term at this s; use N > 0");
      inner += BigComplex(w[static_cast<std::size_t>(j) - 1]) / d;
    }
    sum += (*table)[k] * inner;
  }
  BigComplex rg = rgamma(s, ctx);
  SeriesResult r;
  r.value = BigComplex(rg * sum, ctx_in.bits());
  r.terms_used = K + 1;
  double wsum = 0;
  for (auto& x : w) wsum += std::fabs(x.to_double());
  double sigma = s.re().to_double();
  double den = std::max(1.0, sigma + static_cast<double>(K - lambda));
  double l = alpha_bound_log10(abs(s).to_double(), abs(s - 1L).to_double(), K + 1) +
             std::log10(static_cast<double>(K) + 2) + std::log10(wsum / den) +
             (rg.is_zero() ? 0.0 : abs(rg).log10_abs());
  r.tail_bound = pow(BigReal(10L, 64), BigReal(l, 64));
  r.heuristic_tail = true;
  r.converged = l <= -ctx_in.target_digits;
  return r;
}

// zeta(s+1) = sum_{n<=N} n^{-s-1}
//   + (1/Gamma(s)) sum_k alpha_k(s) [Psi_1(s+k) - sum_{n=1}^{N} B(s+k,n)/n],
// using Psi_1(x) = sum_{n>=1} B(x,n)/n; N = 0 is the plain trigamma form.
inline SeriesResult zeta_trigamma(const BigComplex& s_in, long N, long K, const PrecisionContext& ctx_in) {
  if (s_in.is_zero()) throw PoleError("zeta has a simple pole at s=1", "1");
  if (is_nonpositive_integer(s_in))
    throw DomainError("zeta_trigamma: terms are singular at non-positive integer s");
  if (N < 0) N = detail::default_shift(ctx_in);
  if (K < 0) {
    // The bracket decays like the shifted Hurwitz weights; borrow their K.
    PrecisionContext probe = ctx_in;
    K = riemann_zeta(s_in, N, -1, probe).terms_used + 4;
  }
  double extra = detail::zeta_extra_digits(s_in, 1, static_cast<double>(N));
  PrecisionContext ctx = ctx_in.elevated(static_cast<int>(std::ceil(extra)));
  mpfr_prec_t prec = ctx.bits();
  BigComplex s(s_in, prec);
  auto table = alpha_table(s, K, ctx);
  std::vector<BigComplex> psi1 = trigamma_sequence(s, K, ctx);
  BigComplex sum(prec), last(prec);
  for (long k = 0; k <= K; ++k) {
    BigComplex x = s + k;
    BigComplex bracket = psi1[static_cast<std::size_t>(k)];
    BigComplex B = BigReal(1L, prec) / x;  // B(x,1)
    for (long n = 1; n <= N; ++n) {
      bracket -= B / n;
      B = B * BigReal(n, prec) / (x + n);
    }
    last = (*table)[k] * bracket;
    sum += last;
  }
  BigComplex rg = rgamma(s, ctx);
  SeriesResult r;
  r.value = BigComplex(detail::partial_hurwitz_sum(s + 1L, BigReal(1L, prec), N, prec) + rg * sum, ctx_in.bits());
  r.terms_used = K + 1;
  BigReal est = abs(rg * last) * (K + 1) / std::max<long>(N + 1, 1);
  r.tail_bound = BigReal(est, 64);
  r.heuristic_tail = true;
  r.converged = est.log10_abs() <= -ctx_in.target_digits;
  return r;
}

struct LinearComboResult {
  SeriesResult lhs;  // sum_lambda b_lambda zeta(s-lambda), one riemann_zeta per term
  SeriesResult rhs;  // the single alpha series
};

// sum_{lambda=1}^{Lambda} b_lambda zeta(s-lambda)
//   = (1/Gamma(s)) sum_k alpha_k(s) / ((s+k-2)...(s+k-Lambda-1)).
// With N > 0 the first N terms of sum_n P(n) n^{-s}, P(n) = sum b_lambda n^lambda,
// are summed directly and P(n) B(s+k,n) is removed from each bracket.
inline LinearComboResult zeta_linear_combo(const BigComplex& s_in, long Lambda, long N, long K,
                                           const PrecisionContext& ctx_in) {
  if (Lambda < 1) throw DomainError("zeta_linear_combo: Lambda must be at least 1");
  for (long l = 1; l <= Lambda; ++l) detail::check_zeta_pole(s_in - l);
  if (N < 0) N = detail::default_shift(ctx_in);
  std::vector<mpq_class> b = b_lambda_weights(Lambda);

  LinearComboResult out;
  {
    mpfr_prec_t p = ctx_in.bits();
    BigComplex acc(p);
    BigReal tail(64);
    bool heur = false, conv = true;
    long terms = 0;
    for (long l = 1; l <= Lambda; ++l) {
      SeriesResult z = riemann_zeta(s_in - l, -1, -1, ctx_in);
      acc += z.value * BigReal(b[static_cast<std::size_t>(l) - 1], p);
      tail += z.tail_bound * abs(BigReal(b[static_cast<std::size_t>(l) - 1], 64));
      heur = heur || z.heuristic_tail;
      conv = conv && z.converged;
      terms += z.terms_used;
    }
    out.lhs.value = acc;
    out.lhs.tail_bound = tail;
    out.lhs.heuristic_tail = heur;
    out.lhs.converged = conv;
    out.lhs.terms_used = terms;
  }

  if (K < 0) K = riemann_zeta(s_in - Lambda, N, -1, ctx_in).terms_used + 4;
  double extra = detail::zeta_extra_digits(s_in, Lambda, static_cast<double>(N));
  PrecisionContext ctx = ctx_in.elevated(static_cast<int>(std::ceil(extra)));
  mpfr_prec_t prec = ctx.bits();
  BigComplex s(s_in, prec);
  std::vector<BigReal> P(static_cast<std::size_t>(N) + 1, BigReal(prec));
  for (long n = 1; n <= N; ++n) {
    mpq_class v = 0, np = 1;
    for (long l = 1; l <= Lambda; ++l) {
      np *= n;
      v += b[static_cast<std::size_t>(l) - 1] * np;
    }
    P[static_cast<std::size_t>(n)] = BigReal(v, prec);
  }
  auto table = alpha_table(s, K, ctx);
  BigComplex sum(prec), last(prec);
  for (long k = 0; k <= K; ++k) {
    BigComplex Q(1L, prec);
    for (long i = 2; i <= Lambda + 1; ++i) Q *= s + (k - i);
    if (Q.is_zero()) throw DomainError("zeta_linear_combo: singular term at this s");
    BigComplex bracket = BigReal(1L, prec) / Q;
    if (N > 0) {
      BigComplex x = s + k;
      if (is_nonpositive_integer(x)) throw DomainError("zeta_linear_combo: singular term at this s");
      BigComplex B = BigReal(1L, prec) / x;
      for (long n = 1; n <= N; ++n) {
        if (!P[static_cast<std::size_t>(n)].is_zero()) bracket -= B * P[static_cast<std::size_t>(n)];
        B = B * BigReal(n, prec) / (x + n);
      }
    }
    last = (*table)[k] * bracket;
    sum += last;
  }
  BigComplex partial(prec);
  for (long n = 1; n <= N; ++n)
    if (!P[static_cast<std::size_t>(n)].is_zero()) partial += pow(BigReal(n, prec), -s) * P[static_cast<std::size_t>(n)];
  BigComplex rg = rgamma(s, ctx);
  out.rhs.value = BigComplex(partial + rg * sum, ctx_in.bits());
  out.rhs.terms_used = K + 1;
  BigReal est = abs(rg * last) * (K + 1) / std::max<long>(N + 1, 1);
  out.rhs.tail_bound = BigReal(est, 64);
  out.rhs.heuristic_tail = true;
  out.rhs.converged = est.log10_abs() <= -ctx_in.target_digits;
  return out;
}

// First row of the Euler-Maclaurin formula
//   sum_{n<=N} n^{-s} + N^{1-s}/(s-1) + sum_{k=1}^{K} C(s+k-2, k-1) (B_k/k) N^{-s-k+1},
// with B_1 = -1/2. The remainder integral is not evaluated; tail_bound is
//   2 zeta(K) N^{1-sigma} |s+K-1| |Gamma(s+K-1)| / ((sigma+K-1) |Gamma(s)| (2 pi N)^K).
inline SeriesResult euler_maclaurin_zeta(const BigComplex& s_in, long N, long K, const PrecisionContext& ctx) {
  if (N < 1) throw DomainError("euler_maclaurin_zeta: N must be at least 1");
  if (K < 0) throw DomainError("euler_maclaurin_zeta: K must be non-negative");
  detail::check_zeta_pole(s_in);
  double sigma = s_in.re().to_double();
  if (!(sigma > 1.0 - static_cast<double>(K)))
    throw DomainError("euler_maclaurin_zeta: needs Re(s) > 1-K");
  mpfr_prec_t prec = ctx.bits();
  BigComplex s(s_in, prec);
  BigReal Nr(N, prec);
  BigComplex value = detail::partial_hurwitz_sum(s, BigReal(1L, prec), N, prec);
  value += pow(Nr, BigComplex(1L, prec) - s) / (s - 1L);
  BigComplex c(1L, prec);         // C(s+k-2, k-1)
  BigComplex Np = pow(Nr, -s);    // N^{-s-k+1}
  for (long k = 1; k <= K; ++k) {
    if (k > 1) {
      c = c * (s + (k - 2)) / (k - 1);
      Np /= Nr;
    }
    mpq_class bk = bernoulli(k);
    if (bk == 0) continue;
    value += c * Np * BigReal(mpq_class(bk / k), prec);
  }
  SeriesResult r;
  r.value = value;
  r.terms_used = K + 1;
  double abs_s = abs(s).to_double();
  double l;
  if (K >= 2) {
    double zk = 0;
    for (long n = 1; n <= 100000; ++n) {
      double t = std::pow(static_cast<double>(n), -static_cast<double>(K));
      zk += t;
      if (t < 1e-18 * zk) break;
    }
    double lprod = 0;  // log10 |Gamma(s+K-1)/Gamma(s)|
    for (long i = 0; i <= K - 2; ++i) lprod += abs(s + i).log10_abs();
    l = std::log10(2 * zk) - (sigma - 1) * std::log10(static_cast<double>(N)) +
        abs(s + (K - 1)).log10_abs() - std::log10(sigma + static_cast<double>(K) - 1) + lprod -
        static_cast<double>(K) * std::log10(2 * M_PI * static_cast<double>(N));
  } else {
    l = std::log10(abs_s / (2 * std::max(sigma, 1e-300))) - sigma * std::log10(static_cast<double>(N));
    r.heuristic_tail = true;
  }
  r.tail_bound = pow(BigReal(10L, 64), BigReal(l, 64));
  r.converged = l <= -ctx.target_digits;
  return r;
}

struct RemainderRow {
  long K = 0;
  std::map<long, BigComplex> values;  // N -> relative remainder
  std::set<long> flagged;             // N whose relative rounding error may exceed 1e-6
};

struct RemainderTables {
  std::vector<RemainderRow> alpha_series;     // (zeta - truncated alpha series) / zeta
  std::vector<RemainderRow> euler_maclaurin;  // (zeta - first EM row) / zeta
  BigComplex reference;                       // zeta(s) at twice the working precision
};

// Relative remainders of the N-shifted alpha series and of Euler-Maclaurin,
// for every (K, N) of the grids, against a reference computed with
// riemann_zeta at twice the working digits. The normalization by zeta(s)
// is used for any s.
inline RemainderTables remainder_tables(const BigComplex& s_in, const std::vector<long>& Ns, const std::vector<long>& Ks,
                                        const PrecisionContext& ctx) {
  PrecisionContext ref_ctx = make_context(2 * ctx.working_digits(), 10);
  SeriesResult ref = riemann_zeta(s_in, -1, -1, ref_ctx);
  if (!ref.converged || ref.tail_bound.log10_abs() > -ctx.working_digits())
    throw PrecisionError("remainder_tables: reference value not certified");
  mpfr_prec_t prec = ctx.bits();
  BigComplex s(s_in, prec);
  BigComplex zeta(ref.value, prec);
  RemainderTables out;
  out.reference = ref.value;
  long kmax = 0;
  for (long K : Ks) {
    if (K < 0) throw DomainError("remainder_tables: negative K");
    kmax = std::max(kmax, K);
    out.alpha_series.push_back(RemainderRow{K, {}, {}});
    out.euler_maclaurin.push_back(RemainderRow{K, {}, {}});
  }
  auto table = alpha_table(s, kmax, ctx);
  for (long N : Ns) {
    if (N < 1) throw DomainError("remainder_tables: N must be at least 1");
    detail::HurwitzWeights w = detail::hurwitz_weights(s, BigReal(N + 1, prec), 0, kmax, ctx);
    BigComplex partial = detail::partial_hurwitz_sum(s, BigReal(1L, prec), N, prec);
    BigReal nf(factorial(N), prec);
    BigComplex acc(prec);
    std::map<long, BigComplex> at;
    for (long k = 0; k <= kmax; ++k) {
      acc += (*table)[k] * w.at(k);
      at.emplace(k, acc);
    }
    // Largest Euler-Maclaurin term up to each K, as log10.
    std::vector<double> em_peak(static_cast<std::size_t>(kmax) + 1, 0.0);
    {
      BigReal Nr(N, prec);
      BigComplex c(1L, prec);
      double peak = std::max(0.0, abs(pow(Nr, BigComplex(1L, prec) - s) / (s - 1L)).log10_abs());
      double lN = std::log10(static_cast<double>(N));
      for (long k = 1; k <= kmax; ++k) {
        if (k > 1) c = c * (s + (k - 2)) / (k - 1);
        mpq_class bk = bernoulli(k);
        if (bk != 0) {
          double l = abs(c).log10_abs() + BigReal(mpq_class(bk / k), 64).log10_abs() -
                     (s.re().to_double() + static_cast<double>(k) - 1) * lN;
          peak = std::max(peak, l);
        }
        em_peak[static_cast<std::size_t>(k)] = peak;
      }
    }
    double eps = -static_cast<double>(ctx.working_digits());
    for (std::size_t i = 0; i < Ks.size(); ++i) {
      BigComplex trunc = partial + at.at(Ks[i]) * nf;
      BigComplex r1 = (zeta - trunc) / zeta;
      if (r1.is_zero() || eps + abs(trunc).log10_abs() - abs(zeta - trunc).log10_abs() > -6)
        out.alpha_series[i].flagged.insert(N);
      out.alpha_series[i].values.emplace(N, r1);
      SeriesResult em = euler_maclaurin_zeta(s, N, Ks[i], ctx);
      BigComplex d = zeta - em.value;
      if (d.is_zero() || eps + em_peak[static_cast<std::size_t>(Ks[i])] - abs(d).log10_abs() > -6)
        out.euler_maclaurin[i].flagged.insert(N);
      out.euler_maclaurin[i].values.emplace(N, d / zeta);
    }
  }
  return out;
}

}  // namespace zident
