#pragma once

// Finite differences, the summation formula
//   sum_n g(n) h(n) = sum_m [G^(m)(1) (-1)^m / m!] sum_j (-1)^j C(m,j) h(j+1),
// and the Hasse-type expansions built on it for eta, the alternating Hurwitz
// zeta function and Dirichlet L-functions, with the binomial-sum estimators.

#include <gmpxx.h>

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "zident/combinat.hpp"
#include "zident/dirichlet.hpp"
#include "zident/gammafun.hpp"
#include "zident/mpnum.hpp"

namespace zident {

// rows[m][j] = Delta^m h(j).
template <class T>
struct DifferenceTable {
  std::vector<std::vector<T>> rows;
  const std::vector<T>& base() const { return rows.front(); }
  const T& at(long m, long j) const { return rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)]; }
  long m_max() const { return static_cast<long>(rows.size()) - 1; }
};

template <class T>
DifferenceTable<T> finite_differences(const std::vector<T>& h, long m_max) {
  if (m_max < 0 || static_cast<long>(h.size()) < m_max + 1)
    throw DomainError("finite_differences: need at least m_max+1 samples");
  DifferenceTable<T> t;
  t.rows.push_back(h);
  for (long m = 1; m <= m_max; ++m) {
    const auto& prev = t.rows.back();
    std::vector<T> next;
    next.reserve(prev.size() - 1);
    for (std::size_t j = 0; j + 1 < prev.size(); ++j) next.push_back(prev[j + 1] - prev[j]);
    t.rows.push_back(std::move(next));
  }
  return t;
}

namespace detail {

inline mpq_class scale_by(const mpq_class& x, const mpz_class& c) { return x * c; }
inline BigComplex scale_by(const BigComplex& x, const mpz_class& c) { return x * BigReal(c, x.prec()); }
inline BigReal scale_by(const BigReal& x, const mpz_class& c) { return x * BigReal(c, x.prec()); }

}  // namespace detail

// h(N) = sum_{m=0}^{orders} C(N,m) Delta^m h(0), from the samples h(0..orders).
// Exact when h is a polynomial of degree <= orders; orders < 0 means N.
template <class T>
T newton_forward(const std::function<T(long)>& h, long N, long orders = -1) {
  if (N < 0) throw DomainError("newton_forward: N must be non-negative");
  if (orders < 0) orders = N;
  std::vector<T> samples;
  for (long j = 0; j <= orders; ++j) samples.push_back(h(j));
  DifferenceTable<T> d = finite_differences(samples, orders);
  T acc = d.at(0, 0);
  for (long m = 1; m <= orders; ++m) {
    mpz_class c = m <= N ? binomial(N, m) : mpz_class(0);
    if (c != 0) acc = acc + detail::scale_by(d.at(m, 0), c);
  }
  return acc;
}

// sum_j (-1)^j C(m,j) h(j) for m = 0..m_max, as (-1)^m Delta^m h(0), using
// O(m_max) memory. Cancellation costs about m_max log10(2) digits.
template <class T>
std::vector<T> alternating_binomial_sums(std::vector<T> h, long m_max) {
  if (static_cast<long>(h.size()) < m_max + 1) throw DomainError("alternating_binomial_sums: too few samples");
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(m_max) + 1);
  std::size_t len = static_cast<std::size_t>(m_max) + 1;
  for (long m = 0; m <= m_max; ++m) {
    out.push_back(m % 2 ? T(-h[0]) : h[0]);
    for (std::size_t j = 0; j + 1 < len - static_cast<std::size_t>(m); ++j) h[j] = h[j + 1] - h[j];
  }
  return out;
}

// Exact form of the summation formula: sum_{m<=m_max} w_m d_m.
template <class T>
T summation_sum(const std::vector<T>& w, const std::vector<T>& d, long m_max) {
  T acc = d.at(0) - d.at(0);
  for (long m = 0; m <= m_max; ++m)
    acc = acc + w.at(static_cast<std::size_t>(m)) * d.at(static_cast<std::size_t>(m));
  return acc;
}

// Weights w_m = G^(m)(1) (-1)^m / m! for one choice of g.
struct WeightProvider {
  std::string tag;
  std::function<BigComplex(long)> weight;
  // Throws ValidityError if the expansion is not known to converge for the request.
  std::function<void(long)> validate;
  // Expected log10 |term_{m+1} / term_m| for large m, used for the tail estimate.
  double log10_ratio = -std::log10(2.0);
};

// sum_{m<=m_max} w_m d_m where d_m = sum_j (-1)^j C(m,j) h(j+1).
inline SeriesResult summation_transform(const WeightProvider& w, const std::vector<BigComplex>& d, long m_max,
                                        const PrecisionContext& ctx) {
  if (w.validate) w.validate(m_max);
  if (static_cast<long>(d.size()) < m_max + 1) throw DomainError("summation_transform: too few difference terms");
  mpfr_prec_t prec = std::max(ctx.bits(), d.front().prec());
  BigComplex acc(prec), last(prec), prev(prec);
  for (long m = 0; m <= m_max; ++m) {
    prev = last;
    last = w.weight(m) * d[static_cast<std::size_t>(m)];
    acc += last;
  }
  SeriesResult r;
  r.value = BigComplex(acc, ctx.bits());
  r.terms_used = m_max + 1;
  double ratio = std::pow(10.0, w.log10_ratio);
  BigReal mag = std::max(abs(BigComplex(last, 64)), abs(BigComplex(prev, 64)));
  if (ratio < 1) {
    r.tail_bound = BigReal(mag * BigReal(ratio / (1 - ratio), 64), 64);
  } else {
    r.tail_bound = BigReal(mag * (m_max + 1), 64);
  }
  r.heuristic_tail = true;
  r.converged = r.tail_bound.is_zero() || r.tail_bound.log10_abs() <= -ctx.target_digits;
  return r;
}

namespace detail {

inline double digits_of(double x) { return x > 0 ? x : 0; }

// d_m = sum_j (-1)^j C(m,j) (j+a)^{-s}, optionally twisted to
// sum_j chi(j+1) C(m,j) (j+1)^{-s}.
inline std::vector<BigComplex> kernel_sums(const BigComplex& s, const BigReal& a, long M, mpfr_prec_t prec,
                                           const DirichletCharacter* chi = nullptr) {
  std::vector<BigComplex> h;
  h.reserve(static_cast<std::size_t>(M) + 1);
  BigComplex ms = -BigComplex(s, prec);
  bool int_s = is_integer(s) && std::fabs(s.re().to_double()) < 1e9;
  long si = int_s ? s.re().to_long() : 0;
  for (long j = 0; j <= M; ++j) {
    if (chi && chi->is_zero_at(j + 1)) {
      h.emplace_back(prec);
      continue;
    }
    BigReal x(a + j, prec);
    BigComplex v = int_s ? BigComplex(pow(x, -si)) : pow(x, ms);
    if (chi) {
      v = v * chi->value(j + 1, prec);
      if (j % 2) v = -v;
    }
    h.push_back(std::move(v));
  }
  return alternating_binomial_sums(std::move(h), M);
}

inline double kernel_extra_digits(const BigComplex& s, double a, long M) {
  return static_cast<double>(M) * std::log10(2.0) +
         digits_of(-s.re().to_double()) * std::log10(static_cast<double>(M) + a + 1) + 5;
}

inline long hasse_default_terms(const PrecisionContext& ctx) {
  return static_cast<long>(std::ceil(3.33 * ctx.target_digits)) + 10;
}

// Integral weights, expanding (1+e^{-x})^{-(m+2)} about 2 and integrating termwise:
//   with g(x) = x^{-s0-1},
//   int_0^inf x^{s0} e^{-bx} (1-e^{-x})^i dx / Gamma(s0+1) = (-1)^i Delta^i g(b),
// so (1/Gamma(s0+1)) int x^{s0} e^{-bx} (1+e^{-x})^{-(m+2)} dx
//   = 2^{-m-2} sum_i C(m+1+i, i) 2^{-i} (-1)^i Delta^i g(b).
// Returns, for m = 0..M, the two values at b = x0+m and b = x0+m+1.
inline std::pair<std::vector<BigComplex>, std::vector<BigComplex>> binomial_integrals(const BigComplex& s0,
                                                                                        const BigReal& x0, long M,
                                                                                        long I, mpfr_prec_t prec) {
  long len = M + I + 2;
  std::vector<BigComplex> v;
  v.reserve(static_cast<std::size_t>(len));
  BigComplex e = -(BigComplex(s0, prec) + 1L);
  for (long n = 0; n < len; ++n) v.push_back(pow(BigReal(x0 + n, prec), e));
  std::vector<BigReal> c(static_cast<std::size_t>(M) + 1, BigReal(1L, prec));  // C(m+1+i,i) 2^{-i}
  std::vector<BigComplex> at0(static_cast<std::size_t>(M) + 1, BigComplex(prec)),
      at1(static_cast<std::size_t>(M) + 1, BigComplex(prec));
  for (long i = 0; i <= I; ++i) {
    for (long m = 0; m <= M; ++m) {
      const BigReal& ci = c[static_cast<std::size_t>(m)];
      BigComplex t0 = v[static_cast<std::size_t>(m)] * ci, t1 = v[static_cast<std::size_t>(m) + 1] * ci;
      if (i % 2) {
        at0[static_cast<std::size_t>(m)] -= t0;
        at1[static_cast<std::size_t>(m)] -= t1;
      } else {
        at0[static_cast<std::size_t>(m)] += t0;
        at1[static_cast<std::size_t>(m)] += t1;
      }
      c[static_cast<std::size_t>(m)] = ci * (m + 2 + i) / (2 * (i + 1));
    }
    for (long n = 0; n + 1 < len - i; ++n)
      v[static_cast<std::size_t>(n)] = v[static_cast<std::size_t>(n) + 1] - v[static_cast<std::size_t>(n)];
  }
  BigReal p(1L, prec);
  for (long m = 0; m <= M; ++m) {
    p /= 2L;
    BigReal q = p / 2L;  // 2^{-m-2}
    at0[static_cast<std::size_t>(m)] *= q;
    at1[static_cast<std::size_t>(m)] *= q;
  }
  return {at0, at1};
}

inline long integral_inner_terms(int working_digits, const BigComplex& s0) {
  return static_cast<long>(std::ceil(3.33 * working_digits + 2 * abs(s0).to_double())) + 20;
}

// w_m = (-1)^m/m! sum_{l=1}^{m+1} s(m+1,l) V_l with V_l = F(s0+1-l).
inline std::vector<BigComplex> stirling_weights(const std::vector<BigComplex>& V, long M, mpfr_prec_t prec) {
  std::vector<BigComplex> w;
  BigReal fact(1L, prec);
  for (long m = 0; m <= M; ++m) {
    if (m > 0) fact *= m;
    BigComplex acc(prec);
    for (long l = 1; l <= m + 1; ++l) {
      const BigComplex& v = V[static_cast<std::size_t>(l) - 1];
      if (v.is_zero()) continue;
      acc += v * BigReal(stirling1(m + 1, l), prec);
    }
    acc /= fact;
    if (m % 2) acc = -acc;
    w.push_back(std::move(acc));
  }
  return w;
}

// log10 max_m sum_l |s(m+1,l)| |V_l| / m!, from double-precision magnitudes.
inline double stirling_cancellation_digits(const std::vector<double>& log10_v, long M) {
  double worst = 0;
  double lf = 0;
  for (long m = 0; m <= M; ++m) {
    if (m > 0) lf += std::log10(static_cast<double>(m));
    double mx = -1e300;
    std::vector<double> terms;
    for (long l = 1; l <= m + 1; ++l) {
      double lv = log10_v[static_cast<std::size_t>(l) - 1];
      if (lv < -1e299) continue;
      mpz_class st = stirling1(m + 1, l);
      if (st == 0) continue;
      long e = 0;
      double d = mpz_get_d_2exp(&e, st.get_mpz_t());
      double t = std::log10(std::fabs(d)) + static_cast<double>(e) * std::log10(2.0) + lv;
      terms.push_back(t);
      mx = std::max(mx, t);
    }
    if (terms.empty()) continue;
    double sum = 0;
    for (double t : terms) sum += std::pow(10.0, t - mx);
    worst = std::max(worst, mx + std::log10(sum) - lf);
  }
  return worst;
}

// w_m = (-1)^m/m! sum_{l=0}^{m} e_{m,l} V_l with V_l = F(s0-l), where
// (x-a)(x-a-1)...(x-a-m+1) = sum_l e_{m,l} x^l. For a = 1 this is the Stirling form.
inline std::vector<BigComplex> shifted_falling_weights(const std::vector<BigComplex>& V, const BigReal& a, long M,
                                                       mpfr_prec_t prec) {
  std::vector<BigReal> e{BigReal(1L, prec)};
  std::vector<BigComplex> w;
  BigReal fact(1L, prec);
  for (long m = 0; m <= M; ++m) {
    if (m > 0) {
      fact *= m;
      BigReal shift = BigReal(a, prec) + (m - 1);
      std::vector<BigReal> next(e.size() + 1, BigReal(prec));
      for (std::size_t l = 0; l < e.size(); ++l) {
        next[l + 1] += e[l];
        next[l] -= e[l] * shift;
      }
      e = std::move(next);
    }
    BigComplex acc(prec);
    for (std::size_t l = 0; l < e.size(); ++l)
      if (!V[l].is_zero()) acc += V[l] * e[l];
    acc /= fact;
    if (m % 2) acc = -acc;
    w.push_back(std::move(acc));
  }
  return w;
}

inline double shifted_falling_cancellation_digits(const std::vector<double>& log10_v, double a, long M) {
  std::vector<double> e{0.0};  // log10 of the coefficients of prod (x + |a+i|)
  double worst = 0, lf = 0;
  for (long m = 0; m <= M; ++m) {
    if (m > 0) {
      lf += std::log10(static_cast<double>(m));
      double ls = std::log10(std::fabs(a + static_cast<double>(m - 1)) + 1e-300);
      std::vector<double> next(e.size() + 1, -1e300);
      for (std::size_t l = 0; l < e.size(); ++l) {
        auto add = [](double x, double y) {
          double hi = std::max(x, y), lo = std::min(x, y);
          return hi < -1e299 ? lo : hi + std::log10(1 + std::pow(10.0, lo - hi));
        };
        next[l + 1] = add(next[l + 1], e[l]);
        next[l] = add(next[l], e[l] + ls);
      }
      e = std::move(next);
    }
    double mx = -1e300;
    for (std::size_t l = 0; l < e.size(); ++l)
      if (log10_v[l] > -1e299) mx = std::max(mx, e[l] + log10_v[l]);
    if (mx > -1e299) worst = std::max(worst, mx + std::log10(static_cast<double>(e.size())) - lf);
  }
  return worst;
}

// a = num/den with den <= 10000, recognised to within the precision of a.
inline bool small_rational(const BigReal& a, long& num, long& den) {
  mpfr_prec_t p = a.prec();
  for (long d = 1; d <= 10000; ++d) {
    BigReal x = BigReal(a, p + 32) * d;
    BigReal r = floor(x + BigReal(mpq_class(1, 2), p + 32));
    BigReal diff = abs(x - r);
    if (diff.is_zero() || diff.log10_abs() < -0.30103 * static_cast<double>(p - 16) + std::log10(static_cast<double>(d))) {
      if (std::fabs(r.to_double()) > 4e9) return false;
      num = r.to_long();
      den = d;
      return num > 0;
    }
  }
  return false;
}

inline double log10_or_floor(const BigComplex& z) { return z.is_zero() ? -1e300 : abs(z).log10_abs(); }

}  // namespace detail

// eta(t) = sum_m 2^{-m-1} sum_j (-1)^j C(m,j) (j+1)^{-t}, the s0 = 0 expansion.
inline SeriesResult eta_knopp(const BigComplex& t, long m_max, const PrecisionContext& ctx) {
  long M = m_max < 0 ? detail::hasse_default_terms(ctx) : m_max;
  if (is_nonpositive_integer(t)) M = std::min(M, -t.re().to_long());
  PrecisionContext work = ctx.elevated(static_cast<int>(std::ceil(detail::kernel_extra_digits(t, 1, M))));
  auto d = detail::kernel_sums(t, BigReal(1L, work.bits()), M, work.bits());
  WeightProvider w;
  w.tag = "geometric 2^{-m-1}";
  mpfr_prec_t p = work.bits();
  w.weight = [p](long m) { return BigComplex(BigReal(1L, p) / pow(BigReal(2L, p), m + 1)); };
  SeriesResult r = summation_transform(w, d, M, ctx);
  if (is_nonpositive_integer(t)) {
    r.tail_bound = BigReal(64);
    r.converged = true;
  }
  return r;
}

// eta(1-l) = (-1)^{l-1} (1-2^l) B_l / l for l >= 1.
inline mpq_class eta_one_minus(long l) {
  mpz_class p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(l));
  mpq_class v = mpq_class(1 - p2) * bernoulli(l) / l;
  return l % 2 ? v : mpq_class(-v);
}

// sum_{l=1}^{m+1} s(m+1,l) eta(1-l); equals (-1)^m m!/2^{m+1}.
inline mpq_class eta_stirling_weight_exact(long m) {
  mpq_class acc = 0;
  for (long l = 1; l <= m + 1; ++l) acc += mpq_class(stirling1(m + 1, l)) * eta_one_minus(l);
  return acc;
}

namespace detail {

inline BigComplex eta_base(const BigComplex& t, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(t)) return BigComplex(eta_one_minus(1 - t.re().to_long()), ctx.bits());
  if (t.is_real() && t.re() == BigReal(1L, 64)) return BigComplex(const_log2(ctx.bits()));
  return eta_knopp(t, -1, ctx).value;
}

// zeta(u) for Re u > 1/2, u != 1: a direct sum when Re u is large, else eta(u)/(1-2^{1-u}).
inline BigComplex zeta_right_half(const BigComplex& u, int digits) {
  PrecisionContext ctx = make_context(digits);
  mpfr_prec_t prec = ctx.bits();
  double ru = u.re().to_double();
  if (ru - 1 > digits / 3.0) {
    long N = std::max(2L, static_cast<long>(std::ceil(std::pow(10.0, (digits + 2) / (ru - 1)))));
    BigComplex acc(prec);
    BigComplex mu = -BigComplex(u, prec);
    for (long n = 1; n <= N; ++n) acc += pow(BigReal(n, prec), mu);
    return acc;
  }
  BigComplex e = eta_knopp(u, -1, ctx).value;
  return e / (BigComplex(1L, prec) - pow(BigReal(2L, prec), BigComplex(1L, prec) - u));
}

// eta(s0+1-l) for l = 1..L to about `digits` significant digits. Left of
// Re = 1/2 the functional equation
//   eta(t) = (1-2^{1-t}) 2^t pi^{t-1} sin(pi t/2) Gamma(1-t) zeta(1-t)
// is used, with Gamma(1-t) carried along the shifts by recurrence.
inline std::vector<BigComplex> eta_shift_values(const BigComplex& s0, long L, int digits) {
  PrecisionContext ctx = make_context(digits);
  mpfr_prec_t prec = ctx.bits();
  BigReal pi = const_pi(prec);
  BigComplex one(1L, prec);
  std::vector<BigComplex> out;
  out.reserve(static_cast<std::size_t>(L));
  BigComplex g(prec), prev_u(prec);
  bool have_g = false;
  for (long l = 1; l <= L; ++l) {
    BigComplex t = BigComplex(s0, prec) + (1 - l);
    BigComplex u = one - t;
    if (have_g) g *= prev_u;
    prev_u = u;
    if (is_nonpositive_integer(t) || t.re().to_double() >= 0.5) {
      out.push_back(BigComplex(eta_base(t, ctx), prec));
      continue;
    }
    if (!have_g) {
      g = gamma(u, ctx.elevated(5));
      have_g = true;
    }
    BigComplex zt = pow(BigReal(2L, prec), t) * pow(BigComplex(pi), t - 1L) * sin(t * pi / 2L) * g *
                    zeta_right_half(u, digits + 5);
    out.push_back((one - pow(BigReal(2L, prec), one - t)) * zt);
  }
  return out;
}

// Integral or Stirling weights for eta(s+s0). extra_digits raises the
// accuracy of the Stirling base values for kernels that grow with m.
inline std::vector<BigComplex> eta_weights(const BigComplex& s0, long M, bool branch_a, PrecisionContext& work,
                                           const PrecisionContext& ctx, double extra_digits = 0) {
  if (branch_a) {
    if (!(s0.re().to_double() > -1))
      throw ValidityError("integral weights need Re(s0) > -1; use the Stirling form");
    long I = integral_inner_terms(work.working_digits(), s0);
    work = work.elevated(static_cast<int>(std::ceil(static_cast<double>(I + M) * std::log10(2.0))) + 5);
    auto [at0, at1] = binomial_integrals(s0, BigReal(1L, work.bits()), M, I, work.bits());
    for (long m = 0; m <= M; ++m) at0[static_cast<std::size_t>(m)] *= BigReal(m + 1, work.bits());
    return at0;
  }
  // Stirling form from eta(s0+1-l); size the precision from a cheap first pass.
  std::vector<double> mags;
  for (const auto& v : eta_shift_values(s0, M + 1, 15)) mags.push_back(log10_or_floor(v));
  double cancel = stirling_cancellation_digits(mags, M) + 2;
  work = work.elevated(static_cast<int>(std::ceil(cancel)));
  int vdigits = static_cast<int>(std::ceil(ctx.working_digits() + extra_digits + std::max(0.0, cancel))) + 5;
  std::vector<BigComplex> V;
  for (auto& v : eta_shift_values(s0, M + 1, vdigits)) V.push_back(BigComplex(v, work.bits()));
  return stirling_weights(V, M, work.bits());
}

}  // namespace detail

enum class HasseBranch { automatic, integral, stirling };

inline bool use_integral_branch(HasseBranch b, const BigComplex& s0) {
  if (b == HasseBranch::automatic) return s0.re().to_double() > -1;
  return b == HasseBranch::integral;
}

// eta(s+s0) = sum_m w_m(s0) sum_j (-1)^j C(m,j) (j+1)^{-s}, with w_m either
// (m+1)/Gamma(s0+1) int_0^inf x^{s0} e^{-x(m+1)} (1+e^{-x})^{-(m+2)} dx   (Re s0 > -1)
// or (-1)^m/m! sum_l s(m+1,l) eta(s0+1-l)                                (any s0).
inline SeriesResult eta_hasse(const BigComplex& s, const BigComplex& s0, long m_max, const PrecisionContext& ctx,
                              HasseBranch branch = HasseBranch::automatic) {
  long M = m_max < 0 ? detail::hasse_default_terms(ctx) : m_max;
  PrecisionContext work = ctx.elevated(static_cast<int>(std::ceil(detail::kernel_extra_digits(s, 1, M))));
  bool a = use_integral_branch(branch, s0);
  std::vector<BigComplex> w = detail::eta_weights(s0, M, a, work, ctx);
  auto d = detail::kernel_sums(s, BigReal(1L, work.bits()), M, work.bits());
  WeightProvider p;
  p.tag = a ? "integral" : "stirling";
  p.weight = [&w](long m) { return w[static_cast<std::size_t>(m)]; };
  return summation_transform(p, d, M, ctx);
}

enum class AmoreForm { geometric, factorial };

// sum_j (-1)^j / ((j+1)^s lambda^j (m-j)!)
inline BigComplex amore_j_sum(long m, const BigComplex& s, const BigReal& lambda, const PrecisionContext& ctx) {
  double lam = lambda.to_double();
  double extra = lam / std::log(10.0) + detail::digits_of(-s.re().to_double()) * std::log10(m + 2.0) +
                 static_cast<double>(m) * detail::digits_of(-std::log10(lam)) + 5;
  mpfr_prec_t prec = ctx.elevated(static_cast<int>(std::ceil(extra))).bits();
  BigReal L(lambda, prec);
  BigComplex ms = -BigComplex(s, prec);
  BigComplex acc(prec);
  BigReal c(1L, prec);  // lambda^{-j} / (m-j)!
  for (long i = 1; i <= m; ++i) c /= i;
  for (long j = 0; j <= m; ++j) {
    BigComplex t = pow(BigReal(j + 1, prec), ms) * c;
    if (j % 2) acc -= t;
    else acc += t;
    if (j < m) c = c * (m - j) / L;
  }
  return BigComplex(acc, ctx.bits());
}

// (-1)^m e^{-lambda} / (lambda^m (m+1+lambda)^s), the large-m form of amore_j_sum.
inline BigComplex amore_j_sum_asymptotic(long m, const BigComplex& s, const BigReal& lambda,
                                         const PrecisionContext& ctx) {
  mpfr_prec_t prec = ctx.bits();
  BigReal L(lambda, prec);
  BigComplex v = pow(L + (m + 1), -BigComplex(s, prec)) * exp(-L) / pow(L, m);
  return m % 2 ? BigComplex(-v) : v;
}

// eta(s) by the geometric weights lambda^{m+1}/(1+lambda)^{m+1} with
// h(n) = n^{-s} lambda^{-n}, or by the factorial form
//   e^{-lambda} sum_m lambda^m sum_j (-1)^j / ((j+1)^s lambda^j (m-j)!).
inline SeriesResult eta_amore(const BigComplex& s, const BigReal& lambda, long m_max, const PrecisionContext& ctx,
                              AmoreForm form = AmoreForm::geometric) {
  if (lambda.sign() <= 0) throw DomainError("eta_amore: lambda must be positive");
  double lam = lambda.to_double();
  if (form == AmoreForm::factorial) {
    if (!(s.re().to_double() > 0)) throw ValidityError("factorial Amore form needs Re(s) > 0");
    long M = m_max < 0 ? static_cast<long>(std::ceil(4 * lam)) + 60 : m_max;
    mpfr_prec_t prec = ctx.elevated(static_cast<int>(std::ceil(lam / std::log(10.0))) + 2).bits();
    BigReal L(lambda, prec);
    BigComplex acc(prec), last(prec);
    BigReal lm(1L, prec);
    for (long m = 0; m <= M; ++m) {
      last = amore_j_sum(m, s, lambda, ctx.elevated(static_cast<int>(std::ceil(lam / std::log(10.0))) + 2)) * lm;
      acc += last;
      lm *= L;
    }
    BigReal el = exp(-L);
    SeriesResult r;
    r.value = BigComplex(acc * el, ctx.bits());
    r.terms_used = M + 1;
    r.tail_bound = BigReal(abs(last * el), 64);
    r.heuristic_tail = true;
    r.converged = r.tail_bound.log10_abs() <= -ctx.target_digits;
    return r;
  }
  // The j-sums decay only polynomially in m, so the weights set the rate.
  long M = m_max;
  double ratio = lam / (lam + 1);
  if (M < 0) M = std::min<long>(20000, static_cast<long>(std::ceil((ctx.target_digits + 2) / -std::log10(ratio))) + 10);
  double extra = detail::kernel_extra_digits(s, 1, M) +
                 static_cast<double>(M) * std::log10(std::max(1.0, 1 / lam));
  PrecisionContext work = ctx.elevated(static_cast<int>(std::ceil(extra)));
  mpfr_prec_t prec = work.bits();
  BigReal L(lambda, prec);
  std::vector<BigComplex> h;
  BigComplex ms = -BigComplex(s, prec);
  BigReal lp = BigReal(1L, prec) / L;
  for (long j = 0; j <= M; ++j) {
    h.push_back(pow(BigReal(j + 1, prec), ms) * lp);
    lp /= L;
  }
  auto d = alternating_binomial_sums(std::move(h), M);
  BigReal q = L / (L + 1L);
  WeightProvider p;
  p.tag = "amore geometric";
  p.weight = [q](long m) { return BigComplex(pow(q, m + 1)); };
  p.log10_ratio = std::log10(ratio);
  return summation_transform(p, d, M, ctx);
}

namespace detail {

// zeta*(t, a) by the s0 = 0 expansion with the (j+a) kernel.
inline BigComplex alt_hurwitz_base(const BigComplex& t, const BigReal& a, const PrecisionContext& ctx) {
  long M = hasse_default_terms(ctx);
  if (is_nonpositive_integer(t)) M = std::min(M, -t.re().to_long());
  PrecisionContext work =
      ctx.elevated(static_cast<int>(std::ceil(kernel_extra_digits(t, a.to_double(), M))));
  auto d = kernel_sums(t, BigReal(a, work.bits()), M, work.bits());
  BigComplex acc(work.bits());
  BigReal w(1L, work.bits());
  for (long m = 0; m <= M; ++m) {
    w /= 2L;
    acc += d[static_cast<std::size_t>(m)] * w;
  }
  return BigComplex(acc, ctx.bits());
}

}  // namespace detail

// zeta*(s+s0, a) = sum_n (-1)^n (n+a)^{-s-s0}, by
//   integral weights (1/Gamma(s0+1)) int x^{s0} e^{-x(m+a)} (m+a+(a-1)e^{-x}) (1+e^{-x})^{-(m+2)} dx,
//   or weights (-1)^m/m! sum_l e_{m,l} zeta*(s0-l, a) from the expansion of
//   (x-a)...(x-a-m+1), against sum_j (-1)^j C(m,j) (j+a)^{-s}.
// With unit_kernel (a a positive integer) the series is read as a sum over
// n >= a in n^{-s}, with Stirling weights and the (j+1)^{-s} kernel.
inline SeriesResult alt_hurwitz_hasse(const BigComplex& s, const BigComplex& s0, const BigReal& a, long m_max,
                                      const PrecisionContext& ctx, HasseBranch branch = HasseBranch::automatic,
                                      bool unit_kernel = false) {
  if (a.sign() <= 0) throw DomainError("alt_hurwitz_hasse: a must be positive");
  if (unit_kernel && !(a.is_integer())) throw DomainError("the (j+1) kernel needs a positive integer a");
  long M = m_max < 0 ? detail::hasse_default_terms(ctx) : m_max;
  double ad = a.to_double();
  PrecisionContext work =
      ctx.elevated(static_cast<int>(std::ceil(detail::kernel_extra_digits(s, unit_kernel ? 1 : ad, M))));
  bool integral = !unit_kernel && use_integral_branch(branch, s0);
  std::vector<BigComplex> w;
  if (integral) {
    if (!(s0.re().to_double() > -1))
      throw ValidityError("integral weights need Re(s0) > -1; use the Stirling form");
    long I = detail::integral_inner_terms(work.working_digits(), s0);
    work = work.elevated(static_cast<int>(std::ceil(static_cast<double>(I + M) * std::log10(2.0))) + 5);
    mpfr_prec_t p = work.bits();
    auto [at0, at1] = detail::binomial_integrals(s0, BigReal(a, p), M, I, p);
    BigReal am1 = BigReal(a, p) - 1L;
    for (long m = 0; m <= M; ++m)
      w.push_back(at0[static_cast<std::size_t>(m)] * (BigReal(a, p) + m) + at1[static_cast<std::size_t>(m)] * am1);
  } else if (unit_kernel) {
    PrecisionContext rough = make_context(15);
    std::vector<double> mags;
    for (long l = 1; l <= M + 1; ++l)
      mags.push_back(detail::log10_or_floor(detail::alt_hurwitz_base(s0 + (1 - l), a, rough)));
    work = work.elevated(static_cast<int>(std::ceil(detail::stirling_cancellation_digits(mags, M) + 2)));
    std::vector<BigComplex> V;
    for (long l = 1; l <= M + 1; ++l) V.push_back(detail::alt_hurwitz_base(s0 + (1 - l), a, work));
    w = detail::stirling_weights(V, M, work.bits());
  } else {
    PrecisionContext rough = make_context(15);
    std::vector<double> mags;
    for (long l = 0; l <= M; ++l) mags.push_back(detail::log10_or_floor(detail::alt_hurwitz_base(s0 - l, a, rough)));
    work = work.elevated(static_cast<int>(std::ceil(detail::shifted_falling_cancellation_digits(mags, a.to_double(), M) + 2)));
    std::vector<BigComplex> V;
    for (long l = 0; l <= M; ++l) V.push_back(detail::alt_hurwitz_base(s0 - l, a, work));
    w = detail::shifted_falling_weights(V, BigReal(a, work.bits()), M, work.bits());
  }
  auto d = detail::kernel_sums(s, unit_kernel ? BigReal(1L, work.bits()) : BigReal(a, work.bits()), M, work.bits());
  WeightProvider p;
  p.tag = integral ? "integral" : "stirling";
  p.weight = [&w](long m) { return w[static_cast<std::size_t>(m)]; };
  return summation_transform(p, d, M, ctx);
}

// C_q = |1 + e(1/q)| = 2 cos(pi/q).
inline double c_q(long q) { return 2 * std::cos(M_PI / static_cast<double>(q)); }

inline long chi_default_terms(long q, const PrecisionContext& ctx) {
  double rate = std::log2(2 / c_q(q));
  return static_cast<long>(std::ceil((3.33 * ctx.target_digits + 10) / rate));
}

// L(s+s0, chi) = sum_m w_m(s0) sum_j chi(j+1) C(m,j) (j+1)^{-s}, with the
// same weights as eta_hasse. Valid for every non-trivial chi.
inline SeriesResult l_hasse(const BigComplex& s, const BigComplex& s0, const DirichletCharacter& chi, long m_max,
                            const PrecisionContext& ctx, HasseBranch branch = HasseBranch::automatic) {
  if (chi.is_trivial) throw DomainError("l_hasse needs a non-trivial character");
  long M = m_max < 0 ? chi_default_terms(chi.q, ctx) : m_max;
  PrecisionContext work = ctx.elevated(static_cast<int>(std::ceil(detail::kernel_extra_digits(s, 1, M))));
  // The twisted j-sums grow like C_q^m, so Stirling base-value errors are amplified by that much.
  double growth = static_cast<double>(M) * std::log10(c_q(chi.q));
  bool a = use_integral_branch(branch, s0);
  std::vector<BigComplex> w = detail::eta_weights(s0, M, a, work, ctx, growth);
  auto d = detail::kernel_sums(s, BigReal(1L, work.bits()), M, work.bits(), &chi);
  WeightProvider p;
  p.tag = a ? "integral" : "stirling";
  p.weight = [&w](long m) { return w[static_cast<std::size_t>(m)]; };
  p.log10_ratio = std::log10(c_q(chi.q) / 2);
  return summation_transform(p, d, M, ctx);
}

namespace detail {

inline BigComplex l_base(const BigComplex& t, const DirichletCharacter& chi, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(t)) {
    return l_negative_integer(-t.re().to_long(), chi, ctx);
  }
  return l_function(t, chi, -1, -1, ctx).value;
}

}  // namespace detail

// L(s+s0, chi) = sum_m (-1)^m/m! sum_l s(m+1,l) L(s0+1-l, chi) sum_j (-1)^j C(m,j) (j+1)^{-s}
// for chi mod q <= 5. The weights decay like |1 - e(1/q)|^{-m}; at q = 6 that
// distance reaches 1 and the expansion no longer converges.
inline SeriesResult l_interpolation_q_le_5(const BigComplex& s, const BigComplex& s0, const DirichletCharacter& chi,
                                           long m_max, const PrecisionContext& ctx) {
  if (chi.is_trivial) throw DomainError("interpolation needs a non-trivial character");
  if (chi.q >= 6)
    throw ValidityError("interpolation needs q <= 5: for q >= 6 the root of unity e(1/q) lies within distance 1 of z=1");
  double dist = 2 * std::sin(M_PI / static_cast<double>(chi.q));
  long M = m_max < 0 ? static_cast<long>(std::ceil((ctx.target_digits + 3) / std::log10(dist))) + 10 : m_max;
  PrecisionContext work = ctx.elevated(static_cast<int>(std::ceil(detail::kernel_extra_digits(s, 1, M))));
  PrecisionContext rough = make_context(15);
  std::vector<double> mags;
  for (long l = 1; l <= M + 1; ++l) mags.push_back(detail::log10_or_floor(detail::l_base(s0 + (1 - l), chi, rough)));
  double cancel = detail::stirling_cancellation_digits(mags, M) + 2;
  work = work.elevated(static_cast<int>(std::ceil(cancel)));
  PrecisionContext vctx = make_context(ctx.working_digits() + static_cast<int>(std::ceil(std::max(0.0, cancel))) + 5);
  std::vector<BigComplex> V;
  for (long l = 1; l <= M + 1; ++l) V.push_back(BigComplex(detail::l_base(s0 + (1 - l), chi, vctx), work.bits()));
  std::vector<BigComplex> w = detail::stirling_weights(V, M, work.bits());
  auto d = detail::kernel_sums(s, BigReal(1L, work.bits()), M, work.bits());
  WeightProvider p;
  p.tag = "stirling, L base values";
  p.weight = [&w](long m) { return w[static_cast<std::size_t>(m)]; };
  p.log10_ratio = -std::log10(dist);
  return summation_transform(p, d, M, ctx);
}

// Exact sum_j (-1)^j C(m,j) (j+a)^{-s} at elevated precision, and the large-m
// estimate log(m)^{s-1} Gamma(a) / (m^a Gamma(s)).
inline std::pair<BigComplex, BigComplex> j_sum_and_estimate(long m, const BigReal& a, const BigComplex& s,
                                                            const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("j_sum: m must be non-negative");
  if (a.sign() <= 0) throw DomainError("j_sum: a must be positive");
  double extra = static_cast<double>(m) * std::log10(2.0) +
                 detail::digits_of(-s.re().to_double()) * std::log10(static_cast<double>(m) + a.to_double() + 1) + 10;
  PrecisionContext work = ctx.elevated(static_cast<int>(std::ceil(extra)));
  mpfr_prec_t prec = work.bits();
  bool int_s = is_integer(s) && std::fabs(s.re().to_double()) < 1e9;
  long si = int_s ? s.re().to_long() : 0;
  BigComplex ms = -BigComplex(s, prec);
  BigComplex acc(prec);
  BigReal c(1L, prec);
  BigReal ap(a, prec);
  long num = 0, den = 0;
  bool done = false;
  if (int_s && si > 0 && si <= 16 && detail::small_rational(a, num, den) &&
      static_cast<double>(den) * static_cast<double>(m) + static_cast<double>(num) < 4e9) {
    // (j+a)^{-s} = den^s / (den j + num)^s, applied as exact small divisions.
    BigReal racc(prec), t(prec);
    for (long j = 0; j <= m; ++j) {
      mpfr_set(t.get(), c.get(), MPFR_RNDN);
      unsigned long x = static_cast<unsigned long>(den * j + num);
      for (long i = 0; i < si; ++i) {
        mpfr_mul_ui(t.get(), t.get(), static_cast<unsigned long>(den), MPFR_RNDN);
        mpfr_div_ui(t.get(), t.get(), x, MPFR_RNDN);
      }
      if (j % 2) racc -= t;
      else racc += t;
      if (j < m) {
        mpfr_mul_ui(c.get(), c.get(), static_cast<unsigned long>(m - j), MPFR_RNDN);
        mpfr_div_ui(c.get(), c.get(), static_cast<unsigned long>(j + 1), MPFR_RNDN);
      }
    }
    acc = BigComplex(racc);
    done = true;
  }
  for (long j = 0; !done && j <= m; ++j) {
    BigReal x = ap + j;
    if (int_s) {
      BigReal t = pow(x, -si) * c;
      if (j % 2) acc -= t;
      else acc += t;
    } else {
      BigComplex t = pow(x, ms) * c;
      if (j % 2) acc -= t;
      else acc += t;
    }
    if (j < m) c = c * (m - j) / (j + 1);
  }
  BigComplex exact(acc, ctx.bits());
  mpfr_prec_t p = ctx.bits();
  BigComplex est(p);
  BigComplex rg = rgamma(BigComplex(s, p), ctx);
  if (!rg.is_zero() && m >= 2) {
    BigReal lm = log(BigReal(m, p));
    est = pow(lm, BigComplex(s, p) - 1L) * gamma(BigComplex(BigReal(a, p)), ctx) * rg / pow(BigReal(m, p), BigComplex(BigReal(a, p)));
  }
  return {exact, est};
}

struct ChiSumEstimate {
  BigComplex exact;
  bool exact_is_zero = false;  // decided in Z[x]/Phi_order, not numerically
  BigComplex main_term;        // (tau/q)(e(-1/q)(1+e(-1/q))^m + chi(-1) e(1/q)(1+e(1/q))^m)
  BigReal bound;               // 2 q^{-1/2} C_q^m
  BigComplex asymptotic;       // (tau/q) 2^{m+1} e^{-m pi^2/(2q^2)} {cos | -i sin}(pi(m+2)/q)
};

namespace detail {

// Cyclotomic polynomial Phi_n with integer coefficients, ascending.
inline std::vector<mpz_class> cyclotomic(long n) {
  static std::mutex mu;
  static std::map<long, std::vector<mpz_class>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1, 0);  // x^n - 1
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d) continue;
    std::vector<mpz_class> f = cyclotomic(d);
    // exact division by the monic f
    std::vector<mpz_class> quot(p.size() - f.size() + 1, 0);
    for (long i = static_cast<long>(p.size()) - 1; i >= static_cast<long>(f.size()) - 1; --i) {
      mpz_class c = p[static_cast<std::size_t>(i)];
      std::size_t qi = static_cast<std::size_t>(i) - (f.size() - 1);
      quot[qi] = c;
      for (std::size_t k = 0; k < f.size(); ++k) p[qi + k] -= c * f[k];
    }
    p = quot;
  }
  std::lock_guard<std::mutex> lock(mu);
  memo[n] = p;
  return p;
}

// Whether sum_e counts[e] x^e vanishes modulo Phi_n.
inline bool cyclotomic_zero(std::vector<mpz_class> a, long n) {
  std::vector<mpz_class> f = cyclotomic(n);
  long deg = static_cast<long>(f.size()) - 1;
  for (long i = static_cast<long>(a.size()) - 1; i >= deg; --i) {
    mpz_class c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (long k = 0; k <= deg; ++k) a[static_cast<std::size_t>(i - deg + k)] -= c * f[static_cast<std::size_t>(k)];
  }
  for (long i = 0; i < std::min<long>(deg, static_cast<long>(a.size())); ++i)
    if (a[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

}  // namespace detail

// sum_j chi(j+1) C(m,j) (j+1)^{-s}.
inline BigComplex chi_binomial_sum(long m, const DirichletCharacter& chi, const BigComplex& s,
                                   const PrecisionContext& ctx) {
  double extra = static_cast<double>(m) * std::log10(2.0) +
                 detail::digits_of(-s.re().to_double()) * std::log10(static_cast<double>(m) + 2) + 10;
  mpfr_prec_t prec = ctx.elevated(static_cast<int>(std::ceil(extra))).bits();
  BigComplex acc(prec);
  BigReal c(1L, prec);
  BigComplex ms = -BigComplex(s, prec);
  for (long j = 0; j <= m; ++j) {
    if (!chi.is_zero_at(j + 1)) acc += chi.value(j + 1, prec) * pow(BigReal(j + 1, prec), ms) * c;
    if (j < m) c = c * (m - j) / (j + 1);
  }
  return BigComplex(acc, ctx.bits());
}

inline ChiSumEstimate chi_sum_estimate(long m, const DirichletCharacter& chi, const PrecisionContext& ctx) {
  if (chi.is_trivial) throw DomainError("chi_sum_estimate needs a non-trivial character");
  if (m < 0) throw DomainError("chi_sum_estimate: m must be non-negative");
  long q = chi.q;
  std::vector<mpz_class> counts(static_cast<std::size_t>(chi.order), 0);
  mpz_class c = 1;
  for (long j = 0; j <= m; ++j) {
    long e = chi.exponent_at(j + 1);
    if (e >= 0) counts[static_cast<std::size_t>(e)] += c;
    if (j < m) {
      c *= m - j;
      c /= j + 1;
    }
  }
  ChiSumEstimate out;
  out.exact_is_zero = detail::cyclotomic_zero(counts, chi.order);
  mpfr_prec_t prec = ctx.elevated(static_cast<int>(std::ceil(m * std::log10(2.0))) + 5).bits();
  BigComplex acc(prec);
  for (long e = 0; e < chi.order; ++e)
    if (counts[static_cast<std::size_t>(e)] != 0)
      acc += root_of_unity(e, chi.order, prec) * BigReal(counts[static_cast<std::size_t>(e)], prec);
  out.exact = out.exact_is_zero ? BigComplex(ctx.bits()) : BigComplex(acc, ctx.bits());

  mpfr_prec_t p = ctx.bits();
  BigComplex tau = gauss_sum(chi, ctx);
  BigComplex ep = root_of_unity(1, q, p), em = root_of_unity(-1, q, p);
  BigComplex one(1L, p);
  BigComplex main = em * pow(one + em, m) + ep * pow(one + ep, m) * BigReal(static_cast<long>(chi.parity), p);
  out.main_term = tau * main / q;
  BigReal cq = abs(one + ep);
  out.bound = BigReal(2L, p) / sqrt(BigReal(q, p)) * pow(cq, m);
  BigReal pi = const_pi(p);
  BigReal ang = pi * (m + 2) / q;
  BigReal mag = pow(BigReal(2L, p), m + 1) * exp(-(pi * pi * m) / (2 * q * q));
  BigComplex shape = chi.parity == 1 ? BigComplex(cos(ang)) : BigComplex(BigReal(p), -sin(ang));
  out.asymptotic = tau * shape * mag / q;
  return out;
}

}  // namespace zident
