#pragma once

// Gamma function from the alpha_k(s) expansions, Euler's constant, and the
// digamma/trigamma functions.
//
// digamma and trigamma use the classical asymptotic series with Bernoulli
// coefficients after an upward shift; they are the one imported formula.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "zident/alpha.hpp"
#include "zident/combinat.hpp"
#include "zident/mpnum.hpp"

namespace zident {

namespace detail {

constexpr double kLn10 = 2.302585092994045684;

inline double lgamma_d(double x) { return std::lgamma(x); }

// log10 of (N+1)^sigma (N-1)! / (sigma+K+1)_N, the factor multiplying
// sup alpha_bound in the gamma_n tail.
inline double gamma_n_tail_factor_log10(double sigma, long N, long K) {
  double x = sigma + static_cast<double>(K) + 1;
  return sigma * std::log10(static_cast<double>(N) + 1) + lgamma_d(static_cast<double>(N)) / kLn10 -
         (lgamma_d(x + static_cast<double>(N)) - lgamma_d(x)) / kLn10;
}

// log10 of sum_{k>K} alpha_bound(s,k)/|s+k| for gamma_n with N = 0, using
// int_X^inf (1+log x)^p x^{-2} dx = (1/X) sum_{i<=p} p!/(p-i)! (1+log X)^{p-i}
// with p = ceil(|s|+1). Infinite when the integrand is not yet decreasing at
// X = K+2 or K+1+Re(s) <= 0; -inf when s = 1.
inline double gamma_0_tail_log10(const BigComplex& s, long K) {
  double as = abs(s).to_double(), asm1 = abs(s - 1L).to_double(), sigma = s.re().to_double();
  if (asm1 == 0.0) return -std::numeric_limits<double>::infinity();
  double p = std::ceil(as + 1);
  double X = static_cast<double>(K) + 2;
  if (sigma + static_cast<double>(K) + 1 <= 0 || std::log(X) < p / 2 - 1) return std::numeric_limits<double>::infinity();
  double c_log10 = alpha_bound_log10(as, asm1, 0);  // log10 c_s
  double U = 1 + std::log(X), term = std::pow(U, p), sum = term;
  for (double i = 1; i <= p; ++i) {
    term *= (p - i + 1) / U;
    sum += term;
  }
  // (k+sigma) >= (k+1)(K+1+sigma)/(K+2) for k > K when sigma < 1.
  double ratio = sigma >= 1 ? 1.0 : (static_cast<double>(K) + 2) / (static_cast<double>(K) + 1 + sigma);
  return c_log10 + std::log10(sum / X * ratio);
}

inline void check_gamma_pole(const BigComplex& s) {
  if (is_nonpositive_integer(s)) {
    long n = -s.re().to_long();
    throw PoleError("Gamma has a pole at s=" + std::to_string(-n),
                    "(-1)^" + std::to_string(n) + "/" + std::to_string(n) + "!");
  }
}

inline long positive_integer_value(const BigComplex& z) {
  if (!is_integer(z) || z.re().sign() <= 0) return 0;
  if (z.re() > BigReal(1000000L, 64)) return 0;
  return z.re().to_long();
}

}  // namespace detail

// Smallest K whose rigorous gamma_n tail is below 10^-digits, or -1 when
// none below k_max.
inline long gamma_n_choose_K(const BigComplex& s, long N, double digits, long k_max = 400000) {
  double sigma = s.re().to_double();
  if (N < 1) return -1;
  auto ok = [&](long K) {
    if (sigma + static_cast<double>(K) + 1 <= 0) return false;
    return alpha_bound_sup_log10(s, K) + detail::gamma_n_tail_factor_log10(sigma, N, K) <= -digits;
  };
  long hi = 1;
  while (!ok(hi)) {
    if (hi >= k_max) return -1;
    hi = std::min(2 * hi, k_max);
  }
  long lo = hi / 2;
  while (hi - lo > 1) {
    long mid = (lo + hi) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

// Gamma(s) = (N+1)^s N! sum_{k=0}^{K} alpha_k(s) / ((s+k)(s+k+1)...(s+k+N)).
// K < 0 picks the smallest K whose certified tail is below 10^-working_digits.
inline SeriesResult gamma_n(const BigComplex& s_in, long N, long K, const PrecisionContext& ctx) {
  if (N < 0) throw DomainError("gamma_n: N must be non-negative");
  detail::check_gamma_pole(s_in);
  mpfr_prec_t prec = ctx.bits();
  BigComplex s(s_in, prec);
  if (K < 0) {
    K = gamma_n_choose_K(s, N, ctx.working_digits());
    if (K < 0) throw PrecisionError("gamma_n: no truncation K meets the requested precision");
  }
  auto table = alpha_table(s, K, ctx);

  // D = (s+k)_{N+1}, updated by D *= (s+k+N+1)/(s+k).
  BigComplex D(1L, prec);
  for (long i = 0; i <= N; ++i) D *= s + i;
  BigComplex sum(prec);
  for (long k = 0; k <= K; ++k) {
    if (k > 0) {
      D *= s + (k + N);
      D /= s + (k - 1);
    }
    const BigComplex& a = (*table)[k];
    if (!a.is_zero()) sum += a / D;
  }
  BigReal np1(N + 1, prec);
  BigComplex pref = pow(np1, s) * BigReal(factorial(N), prec);

  SeriesResult r;
  r.value = pref * sum;
  r.terms_used = K + 1;
  double sigma = s.re().to_double();
  if (N >= 1 && sigma + static_cast<double>(K) + 1 > 0) {
    double l = alpha_bound_sup_log10(s, K) + detail::gamma_n_tail_factor_log10(sigma, N, K);
    r.tail_bound = pow(BigReal(10L, 64), BigReal(l, 64));
    r.converged = l <= -ctx.target_digits;
  } else if (double l0 = detail::gamma_0_tail_log10(s, K); N == 0 && l0 < std::numeric_limits<double>::infinity()) {
    r.tail_bound = l0 < -1e6 ? BigReal(64) : pow(BigReal(10L, 64), BigReal(l0, 64));
    r.converged = l0 <= -ctx.target_digits;
  } else {
    // Envelope not yet decreasing: estimate from the last term.
    BigReal last = abs(pref * ((*table)[K] / D));
    r.tail_bound = last * (K + 1);
    r.heuristic_tail = true;
    r.converged = false;
  }
  return r;
}

namespace detail {

// Gamma(z) for Re z in [1,2]: gamma_n with a large N.
inline BigComplex gamma_core(const BigComplex& z, const PrecisionContext& ctx) {
  long N = std::max(20, 4 * ctx.working_digits());
  SeriesResult r = gamma_n(z, N, -1, ctx);
  return r.value;
}

}  // namespace detail

// Gamma(z) by shifting Re z into [1,2] and summing gamma_n.
inline BigComplex gamma(const BigComplex& z_in, const PrecisionContext& ctx_in) {
  detail::check_gamma_pole(z_in);
  if (long n = detail::positive_integer_value(z_in); n > 0 && n < 5000)
    return BigComplex(BigReal(factorial(n - 1), ctx_in.bits()), BigReal(ctx_in.bits()));
  // Large imaginary parts make the sum cancel down to exp(-pi|t|/2).
  double t = std::fabs(z_in.im().to_double());
  PrecisionContext ctx = ctx_in.elevated(static_cast<int>(std::ceil(0.7 * t)) + 2);
  mpfr_prec_t prec = ctx.bits();
  BigComplex z(z_in, prec);
  long shift = static_cast<long>(std::floor(z.re().to_double())) - 1;
  BigComplex base = z - shift;
  if (base.re() < BigReal(1L, 64)) {
    base += 1L;
    --shift;
  }
  if (base.re() > BigReal(2L, 64)) {
    base -= 1L;
    ++shift;
  }
  BigComplex g = detail::gamma_core(base, ctx);
  if (shift > 0) {
    // Gamma(z) = (z-1)...(z-shift) Gamma(z-shift)
    for (long i = 1; i <= shift; ++i) g *= z - i;
  } else if (shift < 0) {
    BigComplex p(1L, prec);
    for (long i = 0; i < -shift; ++i) p *= z + i;
    g /= p;
  }
  return BigComplex(g, ctx_in.bits());
}

// 1/Gamma(z), exactly zero at the non-positive integers.
inline BigComplex rgamma(const BigComplex& z, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(z)) return BigComplex(ctx.bits());
  return BigReal(1L, ctx.bits()) / gamma(z, ctx);
}

// Gamma(s) = w^s Gamma(w) sum_k alpha_k(s) Gamma(s+k)/Gamma(s+k+w), Re w > 0.
// A positive integer w takes the gamma_n path with N = w-1. Otherwise Gamma(w)
// and the first ratio come from the integer path and the remaining ratios from
// Gamma(z+1) = z Gamma(z); the tail is then a heuristic estimate.
inline SeriesResult gamma_w(const BigComplex& s_in, const BigComplex& w_in, long K, const PrecisionContext& ctx) {
  if (w_in.re().sign() <= 0) throw DomainError("gamma_w: Re(w) must be positive");
  detail::check_gamma_pole(s_in);
  if (long n = detail::positive_integer_value(w_in); n > 0) return gamma_n(s_in, n - 1, K, ctx);
  if (K < 0) throw DomainError("gamma_w: non-integer w needs an explicit K");
  mpfr_prec_t prec = ctx.bits();
  BigComplex s(s_in, prec), w(w_in, prec);
  auto table = alpha_table(s, K, ctx);
  BigComplex R = gamma(s, ctx) / gamma(s + w, ctx);
  BigComplex sum(prec);
  for (long k = 0; k <= K; ++k) {
    if (k > 0) R = R * (s + (k - 1)) / (s + (k - 1) + w);
    sum += (*table)[k] * R;
  }
  BigComplex pref = pow(w, s) * gamma(w, ctx);
  SeriesResult r;
  r.value = pref * sum;
  r.terms_used = K + 1;
  // Terms decay like alpha_k k^{-w}; sum the envelope past K.
  double rw = w.re().to_double();
  double l = alpha_bound_sup_log10(s, K) + abs(pref * R).log10_abs() + std::log10(static_cast<double>(K) + 1) -
             std::log10(rw);
  r.tail_bound = pow(BigReal(10L, 64), BigReal(l, 64));
  r.heuristic_tail = true;
  r.converged = l <= -ctx.target_digits;
  return r;
}

// Euler's constant:
// gamma = H_N - log(N+1) - N! sum_{k=1}^{K} alpha_k(0) / (k(k+1)...(k+N)).
inline SeriesResult euler_gamma(long N, long K, const PrecisionContext& ctx) {
  if (N < 0 || K < 1) throw DomainError("euler_gamma: need N >= 0 and K >= 1");
  mpfr_prec_t prec = ctx.bits();
  BigComplex zero(prec);
  auto table = alpha_table(zero, K, ctx);
  BigReal D(1L, prec);  // (k)_{N+1}
  for (long i = 1; i <= N + 1; ++i) D *= i;
  BigReal sum(prec);
  for (long k = 1; k <= K; ++k) {
    if (k > 1) {
      D *= k + N;
      D /= k - 1;
    }
    sum += (*table)[k].re() / D;
  }
  BigReal value = BigReal(harmonic_number(N), prec) - log(BigReal(N + 1, prec)) - BigReal(factorial(N), prec) * sum;
  SeriesResult r;
  r.value = BigComplex(value, BigReal(prec));
  r.terms_used = K;
  double lb = alpha_bound_log10(0.0, 1.0, K + 1);
  double l;
  if (N >= 1) {
    l = lb + std::lgamma(static_cast<double>(N)) / detail::kLn10 -
        (std::lgamma(static_cast<double>(K + 1 + N)) - std::lgamma(static_cast<double>(K + 1))) / detail::kLn10;
  } else {
    // sum_{k>K} 4(1+log(k+1))/(k(k+1)) <= 4(2+log(K+1))/K
    l = std::log10(4.0 * (2.0 + std::log(static_cast<double>(K) + 1)) / static_cast<double>(K));
  }
  r.tail_bound = pow(BigReal(10L, 64), BigReal(l, 64));
  r.converged = l <= -ctx.target_digits;
  return r;
}

namespace detail {

// Shift target and number of Bernoulli terms for the asymptotic series.
inline double asymptotic_radius(const PrecisionContext& ctx) { return 0.4 * ctx.working_digits() + 10; }

}  // namespace detail

// psi(a) for real a > 0 (more generally a not a non-positive integer).
inline BigReal digamma(const BigReal& a_in, const PrecisionContext& ctx) {
  if (a_in.is_integer() && a_in.sign() <= 0)
    throw PoleError("digamma has a pole at a non-positive integer", "-1");
  mpfr_prec_t prec = ctx.bits() + 16;
  BigReal a(a_in, prec);
  BigReal acc(prec);
  double target = detail::asymptotic_radius(ctx);
  long shift = 0;
  while (a.to_double() + static_cast<double>(shift) < target) ++shift;
  for (long i = 0; i < shift; ++i) acc -= BigReal(1L, prec) / (a + i);
  BigReal x = a + shift;
  // psi(x) ~ log x - 1/(2x) - sum_k B_{2k} / (2k x^{2k})
  BigReal s = log(x) - BigReal(1L, prec) / (2L * x);
  BigReal x2inv = BigReal(1L, prec) / (x * x);
  BigReal xp = x2inv;
  double eps = -ctx.working_digits() - 2;
  for (long k = 1; k < 10 * ctx.working_digits() + 100; ++k) {
    BigReal term = BigReal(bernoulli(2 * k), prec) * xp / (2 * k);
    s -= term;
    if (term.log10_abs() < eps) break;
    xp *= x2inv;
  }
  return BigReal(acc + s, ctx.bits());
}

// Psi_1(z) for z not a non-positive integer.
inline BigComplex trigamma(const BigComplex& z_in, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(z_in)) throw PoleError("trigamma has a pole at a non-positive integer", "0");
  mpfr_prec_t prec = ctx.bits() + 16;
  BigComplex z(z_in, prec);
  double target = detail::asymptotic_radius(ctx);
  double re = z.re().to_double(), im = z.im().to_double();
  long shift = 0;
  if (std::hypot(re, im) < target || re < 1) {
    double need = std::sqrt(std::max(0.0, target * target - im * im));
    shift = static_cast<long>(std::ceil(std::max(need - re, 1 - re)));
    if (shift < 0) shift = 0;
  }
  if (shift > 50000000) throw PrecisionError("trigamma: shift budget exceeded");
  BigComplex acc(prec);
  for (long i = 0; i < shift; ++i) {
    BigComplex zi = z + i;
    acc += BigReal(1L, prec) / (zi * zi);
  }
  BigComplex x = z + shift;
  // Psi_1(x) ~ 1/x + 1/(2x^2) + sum_k B_{2k} / x^{2k+1}
  BigComplex xinv = BigReal(1L, prec) / x;
  BigComplex x2inv = xinv * xinv;
  BigComplex s = xinv + x2inv / 2L;
  BigComplex xp = x2inv * xinv;
  double eps = -ctx.working_digits() - 2;
  for (long k = 1; k < 10 * ctx.working_digits() + 100; ++k) {
    BigComplex term = xp * BigReal(bernoulli(2 * k), prec);
    s += term;
    if (abs(term).log10_abs() < eps) break;
    xp *= x2inv;
  }
  return BigComplex(acc + s, ctx.bits());
}

// Psi_1(z+k) for k = 0..K from one evaluation at z+K and Psi_1(x) = Psi_1(x+1) + 1/x^2.
inline std::vector<BigComplex> trigamma_sequence(const BigComplex& z_in, long K, const PrecisionContext& ctx) {
  mpfr_prec_t prec = ctx.bits();
  BigComplex z(z_in, prec);
  std::vector<BigComplex> out(static_cast<std::size_t>(K) + 1, BigComplex(prec));
  out[static_cast<std::size_t>(K)] = trigamma(z + K, ctx);
  for (long k = K - 1; k >= 0; --k) {
    BigComplex zk = z + k;
    if (zk.is_zero()) throw PoleError("trigamma has a pole at a non-positive integer", "0");
    out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k) + 1] + BigReal(1L, prec) / (zk * zk);
  }
  return out;
}

// pi as Gamma(1/2)^2 from gamma_n.
inline BigReal pi_from_gamma(const PrecisionContext& ctx) {
  BigComplex half(mpq_class(1, 2), ctx.bits());
  BigComplex g = gamma(half, ctx);
  return g.re() * g.re();
}

}  // namespace zident
