#pragma once

// Dirichlet characters, Gauss sums and L(s, chi) through the Hurwitz
// expansions, with the closed forms at s = 1 and at non-positive integers.

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "zident/alpha.hpp"
#include "zident/combinat.hpp"
#include "zident/gammafun.hpp"
#include "zident/mpnum.hpp"
#include "zident/zetafun.hpp"

namespace zident {

// chi(n) = e(exponent[n mod q] / order), or 0 where exponent is -1.
struct DirichletCharacter {
  long q = 1;
  long order = 1;  // phi(q); every value is an order-th root of unity
  std::vector<long> exponent;
  int parity = 1;  // chi(-1)
  bool is_primitive = true;
  bool is_trivial = true;
  std::string label;

  long exponent_at(long n) const { return exponent[static_cast<std::size_t>(((n % q) + q) % q)]; }
  bool is_zero_at(long n) const { return exponent_at(n) < 0; }
  BigComplex value(long n, mpfr_prec_t prec) const {
    long e = exponent_at(n);
    if (e < 0) return BigComplex(prec);
    return root_of_unity(e, order, prec);
  }
  // Exactly +-1 or 0 when the character is real.
  bool is_real() const {
    for (long e : exponent)
      if (e > 0 && 2 * e != order) return false;
    return true;
  }
};

namespace detail {

inline long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

inline long powmod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<long>(static_cast<__int128>(r) * b % m);
    b = static_cast<long>(static_cast<__int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

// One cyclic factor of (Z/q)^*: generator g of order `order` modulo `mod`.
struct CyclicFactor {
  long mod = 1, g = 1, order = 1;
};

inline std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      f.emplace_back(p, e);
    }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

inline mpz_class ipow(long b, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
  return r;
}

inline long multiplicative_order(long g, long m) {
  long o = 1, x = g % m;
  while (x != 1) x = static_cast<long>(static_cast<__int128>(x) * g % m), ++o;
  return o;
}

inline std::vector<CyclicFactor> cyclic_factors(long q) {
  std::vector<CyclicFactor> out;
  for (auto [p, e] : factorize(q)) {
    long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    if (p == 2) {
      if (e == 2) out.push_back({4, 3, 2});
      if (e >= 3) {
        out.push_back({pe, pe - 1, 2});
        out.push_back({pe, 5, pe / 4});
      }
      continue;
    }
    long phi = pe / p * (p - 1);
    for (long g = 2;; ++g) {
      if (std::gcd(g, p) != 1) continue;
      if (multiplicative_order(g, pe) == phi) {
        out.push_back({pe, g, phi});
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

// All phi(q) characters modulo q. Writing (Z/q)^* as a product of cyclic
// factors with fixed generators (a primitive root for odd p^e; -1 and 5 for
// 2^e), character q.j sends the i-th generator to e(t_i / o_i), where
// (t_0, t_1, ...) are the mixed-radix digits of j, least significant first.
// q.0 is the trivial character.
inline std::vector<DirichletCharacter> enumerate_characters(long q) {
  if (q < 1) throw DomainError("modulus must be at least 1");
  long phi = detail::euler_phi(q);
  auto factors = detail::cyclic_factors(q);
  std::size_t nf = factors.size();

  // Discrete logs of every unit with respect to each factor.
  std::vector<std::vector<long>> logs(static_cast<std::size_t>(q), std::vector<long>(nf, -1));
  for (std::size_t i = 0; i < nf; ++i) {
    const auto& f = factors[i];
    std::vector<long> dlog(static_cast<std::size_t>(f.mod), -1);
    long x = 1;
    for (long t = 0; t < f.order; ++t) {
      dlog[static_cast<std::size_t>(x)] = t;
      x = x * f.g % f.mod;
    }
    // For 2^e with e >= 3 the unit group is <-1> x <5>; split n = (+-1) 5^t.
    bool two_power = f.mod % 2 == 0 && f.mod >= 8;
    for (long n = 0; n < q; ++n) {
      if (std::gcd(n, q) != 1) continue;
      long r = n % f.mod;
      if (two_power) {
        bool minus = r % 4 == 3;
        long rr = minus ? f.mod - r : r;
        if (f.g == f.mod - 1) {
          logs[static_cast<std::size_t>(n)][i] = minus ? 1 : 0;
        } else {
          logs[static_cast<std::size_t>(n)][i] = dlog[static_cast<std::size_t>(rr)];
        }
      } else {
        logs[static_cast<std::size_t>(n)][i] = dlog[static_cast<std::size_t>(r)];
      }
    }
  }

  std::vector<DirichletCharacter> out;
  for (long j = 0; j < phi; ++j) {
    std::vector<long> t(nf);
    long rest = j;
    for (std::size_t i = 0; i < nf; ++i) {
      t[i] = rest % factors[i].order;
      rest /= factors[i].order;
    }
    DirichletCharacter chi;
    chi.q = q;
    chi.order = phi;
    chi.label = std::to_string(q) + "." + std::to_string(j);
    chi.exponent.assign(static_cast<std::size_t>(q), -1);
    chi.is_trivial = true;
    for (long n = 0; n < q; ++n) {
      if (std::gcd(n, q) != 1) continue;
      long e = 0;
      for (std::size_t i = 0; i < nf; ++i)
        e = (e + t[i] * logs[static_cast<std::size_t>(n)][i] % factors[i].order * (phi / factors[i].order)) % phi;
      chi.exponent[static_cast<std::size_t>(n)] = e;
      if (e != 0) chi.is_trivial = false;
    }
    if (q == 1) chi.exponent[0] = 0;
    chi.parity = chi.exponent_at(q - 1) == 0 ? 1 : -1;
    // Primitive unless trivial on the units congruent to 1 modulo q/p for some p | q.
    chi.is_primitive = true;
    for (auto [p, e] : detail::factorize(q)) {
      long d = q / p;
      bool induced = true;
      for (long n = 1; n < q && induced; n += d)
        if (std::gcd(n, q) == 1 && chi.exponent_at(n) != 0) induced = false;
      if (induced) {
        chi.is_primitive = false;
        break;
      }
    }
    out.push_back(std::move(chi));
  }
  return out;
}

// Parses "q.j" and returns the character of enumerate_characters(q) at index j.
inline DirichletCharacter character_from_label(const std::string& label) {
  auto dot = label.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == label.size())
    throw ParseError("character label must look like q.j", 0);
  long q = 0, j = 0;
  try {
    std::size_t u = 0;
    q = std::stol(label.substr(0, dot), &u);
    if (u != dot) throw ParseError("bad modulus in character label", 0);
    std::size_t v = 0;
    j = std::stol(label.substr(dot + 1), &v);
    if (v != label.size() - dot - 1) throw ParseError("bad index in character label", dot + 1);
  } catch (const std::logic_error&) {
    throw ParseError("character label must look like q.j", 0);
  }
  if (q < 1) throw DomainError("modulus must be at least 1");
  auto all = enumerate_characters(q);
  if (j < 0 || j >= static_cast<long>(all.size()))
    throw DomainError("character index out of range for modulus " + std::to_string(q));
  return all[static_cast<std::size_t>(j)];
}

inline BigComplex gauss_sum(const DirichletCharacter& chi, const PrecisionContext& ctx) {
  mpfr_prec_t prec = ctx.bits();
  BigComplex acc(prec);
  for (long j = 1; j <= chi.q; ++j) {
    if (chi.is_zero_at(j)) continue;
    acc += chi.value(j, prec) * root_of_unity(j, chi.q, prec);
  }
  return acc;
}

namespace detail {

inline void require_nontrivial(const DirichletCharacter& chi) {
  if (chi.is_trivial) throw DomainError("L-function needs a non-trivial character");
}

inline double l_extra_digits(const BigComplex& s, long q) {
  double e = std::log10(static_cast<double>(q)) * (std::fabs(s.re().to_double()) + 1) + 2;
  BigComplex d = s - 1L;
  if (!d.is_zero()) e += std::max(0.0, -abs(d).log10_abs());
  return e;
}

}  // namespace detail

// L(1, chi) = -(1/q) sum_m chi(m) psi(m/q).
inline BigComplex l_at_1(const DirichletCharacter& chi, const PrecisionContext& ctx_in) {
  detail::require_nontrivial(chi);
  PrecisionContext ctx = ctx_in.elevated(static_cast<int>(std::log10(static_cast<double>(chi.q))) + 3);
  mpfr_prec_t prec = ctx.bits();
  BigComplex acc(prec);
  for (long m = 1; m < chi.q; ++m) {
    if (chi.is_zero_at(m)) continue;
    acc += chi.value(m, prec) * digamma(BigReal(make_rational(m, chi.q), prec), ctx);
  }
  return BigComplex(acc / (-chi.q), ctx_in.bits());
}

// L(s - lambda, chi) = q^{lambda-s} sum_m chi(m) zeta(s - lambda, m/q), each
// Hurwitz value from the alpha_k(s) series with weights c_{m/q}(lambda, j).
// N is the Hurwitz shift (terms summed directly per residue class), K the
// truncation; negative values choose defaults.
inline SeriesResult l_shifted(const BigComplex& s_in, long lambda, const DirichletCharacter& chi, long N, long K,
                              const PrecisionContext& ctx_in) {
  detail::require_nontrivial(chi);
  if (lambda < 0) throw DomainError("lambda must be non-negative");
  BigComplex t = s_in - lambda;
  if (t.is_real() && t.re() == BigReal(1L, 64)) {
    SeriesResult r;
    r.value = l_at_1(chi, ctx_in);
    r.tail_bound = BigReal(64);
    r.converged = true;
    return r;
  }
  PrecisionContext ctx = ctx_in.elevated(static_cast<int>(std::ceil(detail::l_extra_digits(t, chi.q))));
  mpfr_prec_t prec = ctx.bits();
  BigComplex acc(prec);
  BigReal tail(64);
  bool heur = false, conv = true;
  long terms = 0;
  for (long m = 1; m < chi.q; ++m) {
    if (chi.is_zero_at(m)) continue;
    SeriesResult h = detail::hurwitz_core(s_in, lambda, BigReal(make_rational(m, chi.q), prec), N, K, ctx);
    acc += chi.value(m, prec) * h.value;
    tail += h.tail_bound;
    heur = heur || h.heuristic_tail;
    conv = conv && h.converged;
    terms = std::max(terms, h.terms_used);
  }
  BigComplex scale = pow(BigReal(chi.q, prec), -t);
  SeriesResult r;
  r.value = BigComplex(acc * scale, ctx_in.bits());
  r.tail_bound = BigReal(tail * abs(BigComplex(scale, 64)), 64);
  r.heuristic_tail = heur;
  r.converged = conv && (r.tail_bound.is_zero() || r.tail_bound.log10_abs() <= -ctx_in.target_digits);
  r.terms_used = terms;
  return r;
}

// L(s, chi) = (1/(q^s Gamma(s))) sum_k alpha_k(s) Gamma(s+k-1)
//             sum_m chi(m) Gamma(m/q) / Gamma(s+k+m/q-1).
inline SeriesResult l_function(const BigComplex& s, const DirichletCharacter& chi, long N, long K,
                               const PrecisionContext& ctx) {
  return l_shifted(s, 0, chi, N, K, ctx);
}

namespace detail {

// L(-r, chi) = sum_m chi(m) c_m with
//   c_m = r! q^r sum_{k=0}^{r} (-1)^{k-1} alpha_k(-r) / (r+1-k)! (m/q-1)...(m/q+k-r-1),
// all exact rationals. Cached per (q, r).
inline const std::vector<mpq_class>& l_negative_integer_coeffs(long q, long r) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::vector<mpq_class>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(q, r);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<mpq_class> al = alpha_exact(mpq_class(-r), r + 1);
  mpq_class pref = mpq_class(factorial(r)) * mpq_class(ipow(q, r));
  std::vector<mpq_class> c(static_cast<std::size_t>(q), mpq_class(0));
  for (long m = 1; m < q; ++m) {
    mpq_class a = make_rational(m, q);
    mpq_class prod = 1, inner = 0;
    for (long k = r; k >= 0; --k) {
      prod *= a - (r + 1 - k);
      mpq_class w = al[static_cast<std::size_t>(k)] / mpq_class(factorial(r + 1 - k));
      if (k % 2 == 0) w = -w;
      inner += w * prod;
    }
    c[static_cast<std::size_t>(m)] = pref * inner;
  }
  return cache.emplace(key, std::move(c)).first->second;
}

}  // namespace detail

inline BigComplex l_negative_integer(long r, const DirichletCharacter& chi, const PrecisionContext& ctx) {
  detail::require_nontrivial(chi);
  if (r < 0) throw DomainError("r must be non-negative");
  mpfr_prec_t prec = ctx.bits();
  const auto& c = detail::l_negative_integer_coeffs(chi.q, r);
  BigComplex acc(prec);
  for (long m = 1; m < chi.q; ++m) {
    if (chi.is_zero_at(m) || c[static_cast<std::size_t>(m)] == 0) continue;
    acc += chi.value(m, prec) * BigReal(c[static_cast<std::size_t>(m)], prec);
  }
  return acc;
}

// L(1-lambda, chi) as the s -> 1 limit of the shifted expansion. With
// a = m/q and P_j(a) = (a-1)...(a-j), for lambda >= 1:
//   q^{lambda-1} sum_m chi(m) sum_j c_a(lambda,j) [ (-1)^j/j! P_j(a) (H_j + sum_{i<=j} 1/(a-i))
//     + sum_{k=1}^{j} alpha_k'(1) (-1)^{j-k}/(j-k)! (a-1)...(a-j+k) ].
// The first bracket is the finite part of the k = 0 term after its pole
// cancels across j; the second collects the j >= k poles against the simple
// zeros of alpha_k at s = 1. lambda = 0 gives l_at_1.
inline BigComplex l_one_minus_lambda(long lambda, const DirichletCharacter& chi, const PrecisionContext& ctx) {
  detail::require_nontrivial(chi);
  if (lambda < 0) throw DomainError("lambda must be non-negative");
  if (lambda == 0) return l_at_1(chi, ctx);
  mpfr_prec_t prec = ctx.bits();
  long q = chi.q;
  auto c = c_a_table(lambda);
  std::vector<mpq_class> dal = alpha_prime_at_1(lambda);
  BigComplex acc(prec);
  for (long m = 1; m < q; ++m) {
    if (chi.is_zero_at(m)) continue;
    mpq_class a = make_rational(m, q);
    mpq_class total = 0;
    for (long j = 0; j <= lambda; ++j) {
      mpq_class cj = c[static_cast<std::size_t>(lambda)][static_cast<std::size_t>(j)].eval(a);
      if (cj == 0) continue;
      mpq_class P = 1, recip = 0;
      for (long i = 1; i <= j; ++i) {
        P *= a - i;
        recip += 1 / mpq_class(a - i);
      }
      mpq_class k0 = P * (harmonic_number(j) + recip) / mpq_class(factorial(j));
      if (j % 2) k0 = -k0;
      mpq_class ks = 0;
      for (long k = 1; k <= j; ++k) {
        mpq_class prod = 1;
        for (long i = 1; i <= j - k; ++i) prod *= a - i;
        mpq_class w = dal[static_cast<std::size_t>(k)] / mpq_class(factorial(j - k));
        if ((j - k) % 2) w = -w;
        ks += w * prod;
      }
      total += cj * (k0 + ks);
    }
    acc += chi.value(m, prec) * BigReal(total, prec);
  }
  mpz_class ql = detail::ipow(q, lambda - 1);
  return acc * BigReal(ql, prec);
}

}  // namespace zident
