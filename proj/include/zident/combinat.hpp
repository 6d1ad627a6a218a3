#pragma once

// Exact combinatorial kernels: binomials, Stirling numbers, Bernoulli numbers
// and polynomials, the c_a(lambda, j) shift polynomials and the weights of the
// fast linear combination of shifted zeta values.

#include <gmpxx.h>

#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "zident/mpnum.hpp"

namespace zident {

inline mpz_class binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline mpz_class factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

namespace detail {

// Lower-triangular integer table grown row by row under a lock.
class TriangleMemo {
 public:
  using Rule = void (*)(std::vector<std::vector<mpz_class>>&, long);

  explicit TriangleMemo(Rule next_row) : next_row_(next_row) {}

  mpz_class at(long n, long k) {
    if (n < 0 || k < 0) throw DomainError("Stirling number with negative index");
    if (k > n) return 0;
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<long>(rows_.size()) <= n) next_row_(rows_, static_cast<long>(rows_.size()));
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  Rule next_row_;
  std::mutex mu_;
  std::vector<std::vector<mpz_class>> rows_;
};

inline void stirling2_row(std::vector<std::vector<mpz_class>>& rows, long n) {
  std::vector<mpz_class> row(static_cast<std::size_t>(n) + 1, 0);
  if (n == 0) {
    row[0] = 1;
  } else {
    const auto& prev = rows[static_cast<std::size_t>(n) - 1];
    for (long k = 1; k <= n; ++k) {
      mpz_class v = k < n ? mpz_class(k * prev[static_cast<std::size_t>(k)]) : mpz_class(0);
      v += prev[static_cast<std::size_t>(k) - 1];
      row[static_cast<std::size_t>(k)] = v;
    }
  }
  rows.push_back(std::move(row));
}

// s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
inline void stirling1_row(std::vector<std::vector<mpz_class>>& rows, long n) {
  std::vector<mpz_class> row(static_cast<std::size_t>(n) + 1, 0);
  if (n == 0) {
    row[0] = 1;
  } else {
    const auto& prev = rows[static_cast<std::size_t>(n) - 1];
    for (long k = 1; k <= n; ++k) {
      mpz_class v = prev[static_cast<std::size_t>(k) - 1];
      if (k < n) v -= (n - 1) * prev[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = v;
    }
  }
  rows.push_back(std::move(row));
}

}  // namespace detail

// Stirling numbers of the second kind.
inline mpz_class stirling2(long n, long k) {
  static detail::TriangleMemo memo(detail::stirling2_row);
  return memo.at(n, k);
}

// Signed Stirling numbers of the first kind: x(x-1)...(x-n+1) = sum_l s(n,l) x^l.
inline mpz_class stirling1(long n, long k) {
  static detail::TriangleMemo memo(detail::stirling1_row);
  return memo.at(n, k);
}

// Bernoulli numbers from the classical recurrence sum_{k<=n} C(n+1,k) B_k = 0.
// Quadratic in n with growing rationals; kept as the reference implementation.
inline std::vector<mpq_class> bernoulli_by_recurrence(long n_max) {
  std::vector<mpq_class> b(static_cast<std::size_t>(n_max) + 1);
  b[0] = 1;
  for (long n = 1; n <= n_max; ++n) {
    if (n >= 3 && n % 2 == 1) {
      b[static_cast<std::size_t>(n)] = 0;
      continue;
    }
    mpq_class acc = 0;
    for (long k = 0; k < n; ++k)
      if (!(k >= 3 && k % 2 == 1)) acc += mpq_class(binomial(n + 1, k)) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(n)] = -acc / (n + 1);
  }
  return b;
}

namespace detail {

// Even-index Bernoulli numbers from tangent numbers, integer arithmetic only:
// B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1)).
inline std::vector<mpq_class> bernoulli_by_tangent_numbers(long n_max) {
  long half = n_max / 2;
  std::vector<mpq_class> b(static_cast<std::size_t>(n_max) + 1, mpq_class(0));
  b[0] = 1;
  if (n_max >= 1) b[1] = mpq_class(-1, 2);
  if (half < 1) return b;
  std::vector<mpz_class> t(static_cast<std::size_t>(half) + 1, 0);
  t[1] = 1;
  for (long k = 2; k <= half; ++k) t[static_cast<std::size_t>(k)] = (k - 1) * t[static_cast<std::size_t>(k) - 1];
  for (long k = 2; k <= half; ++k)
    for (long j = k; j <= half; ++j)
      t[static_cast<std::size_t>(j)] =
          (j - k) * t[static_cast<std::size_t>(j) - 1] + (j - k + 2) * t[static_cast<std::size_t>(j)];
  for (long k = 1; k <= half; ++k) {
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    mpq_class v(2 * k * t[static_cast<std::size_t>(k)], four_k * (four_k - 1));
    v.canonicalize();
    if (k % 2 == 0) v = -v;
    b[static_cast<std::size_t>(2 * k)] = v;
  }
  return b;
}

}  // namespace detail

// B_n with B_1 = -1/2.
inline mpq_class bernoulli(long n) {
  if (n < 0) throw DomainError("bernoulli: negative index");
  static std::mutex mu;
  static std::vector<mpq_class> memo;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<long>(memo.size()) <= n) {
    long target = std::max<long>(n, 2 * static_cast<long>(memo.size()));
    memo = detail::bernoulli_by_tangent_numbers(std::max<long>(target, 16));
  }
  return memo[static_cast<std::size_t>(n)];
}

// B_n(x) = sum_k C(n,k) B_k x^{n-k}
inline mpq_class bernoulli_poly(long n, const mpq_class& x) {
  mpq_class acc = 0, xp = 1;
  for (long k = n; k >= 0; --k) {
    acc += mpq_class(binomial(n, k)) * bernoulli(k) * xp;
    xp *= x;
  }
  return acc;
}

inline BigReal bernoulli_poly(long n, const BigReal& x) {
  BigReal acc(x.prec()), xp(1L, x.prec());
  for (long k = n; k >= 0; --k) {
    mpq_class c = mpq_class(binomial(n, k)) * bernoulli(k);
    if (c != 0) acc += BigReal(c, x.prec()) * xp;
    xp *= x;
  }
  return acc;
}

inline mpq_class harmonic_number(long n) {
  mpq_class h = 0;
  for (long i = 1; i <= n; ++i) h += mpq_class(1, i);
  return h;
}

// Integer polynomial in the variable a, ascending coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPolynomial constant(const mpz_class& v) { return IntPolynomial({v}); }

  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  mpz_class coeff(long i) const {
    return i >= 0 && i < static_cast<long>(c_.size()) ? c_[static_cast<std::size_t>(i)] : mpz_class(0);
  }

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
  }
  IntPolynomial operator*(const mpz_class& k) const {
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v *= k;
    return IntPolynomial(std::move(r));
  }
  // Multiply by (a + shift).
  IntPolynomial times_linear(long shift) const {
    if (c_.empty()) return {};
    std::vector<mpz_class> r(c_.size() + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      r[i + 1] += c_[i];
      r[i] += shift * c_[i];
    }
    return IntPolynomial(std::move(r));
  }
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  mpq_class eval(const mpq_class& a) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + *it;
    return r;
  }
  BigReal eval(const BigReal& a) const {
    BigReal r(a.prec());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      r *= a;
      r += BigReal(*it, a.prec());
    }
    return r;
  }

  // Expanded form in descending powers, e.g. "12a^2-48a+50".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      const mpz_class& v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      mpz_class mag = abs(v);
      if (v < 0)
        os << '-';
      else if (!first)
        os << '+';
      if (i == 0 || mag != 1) os << mag.get_str();
      if (i >= 1) os << 'a';
      if (i >= 2) os << '^' << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpz_class> c_;
};

// table[lambda][j] = c_a(lambda, j) for 0 <= j <= lambda + 1; the last entry is 0.
// c_a(0,0) = 1, c_a(lambda+1, j) = (a-j-1) c_a(lambda, j) + j c_a(lambda, j-1).
inline std::vector<std::vector<IntPolynomial>> c_a_table(long lambda_max) {
  if (lambda_max < 0) throw DomainError("c_a_table: lambda_max must be non-negative");
  std::vector<std::vector<IntPolynomial>> t;
  t.push_back({IntPolynomial::constant(1), IntPolynomial()});
  for (long l = 0; l < lambda_max; ++l) {
    const auto& prev = t.back();
    std::vector<IntPolynomial> row(static_cast<std::size_t>(l) + 3);
    for (long j = 0; j <= l + 1; ++j) {
      IntPolynomial v = prev[static_cast<std::size_t>(j)].times_linear(-j - 1);
      if (j >= 1) v = v + prev[static_cast<std::size_t>(j) - 1] * mpz_class(j);
      row[static_cast<std::size_t>(j)] = std::move(v);
    }
    t.push_back(std::move(row));
  }
  return t;
}

// Rendering used by the ca-table command: the j = 0 column in factored form.
inline std::string c_a_display(long lambda, long j, const IntPolynomial& p) {
  if (j == 0 && lambda >= 1) return lambda == 1 ? "a-1" : "(a-1)^" + std::to_string(lambda);
  return p.to_string();
}

// 1/(z(z-1)...(z-m)) = sum_l a_l / (z-l), a_l = (-1)^{m-l} / (l! (m-l)!).
inline std::vector<mpq_class> partial_fraction_weights(long m) {
  if (m < 0) throw DomainError("partial_fraction_weights: m must be non-negative");
  std::vector<mpq_class> a;
  for (long l = 0; l <= m; ++l) {
    mpq_class v(1, 1);
    v /= mpq_class(factorial(l) * factorial(m - l));
    if ((m - l) % 2) v = -v;
    a.push_back(v);
  }
  return a;
}

// Right-hand side r_j = (-1)^{Lambda-j} C(Lambda-1, j-1) / (Lambda-1)!, j = 1..Lambda.
inline std::vector<mpq_class> b_lambda_rhs(long Lambda) {
  std::vector<mpq_class> r;
  for (long j = 1; j <= Lambda; ++j) {
    mpq_class v(binomial(Lambda - 1, j - 1), factorial(Lambda - 1));
    v.canonicalize();
    if ((Lambda - j) % 2) v = -v;
    r.push_back(v);
  }
  return r;
}

// Solves sum_lambda (-1)^{lambda+j} S(lambda,j) j! b_lambda = r_j by back
// substitution on the upper-triangular system.
inline std::vector<mpq_class> b_lambda_by_matrix(long Lambda) {
  std::vector<mpq_class> r = b_lambda_rhs(Lambda);
  std::vector<mpq_class> b(static_cast<std::size_t>(Lambda));
  for (long j = Lambda; j >= 1; --j) {
    mpq_class acc = r[static_cast<std::size_t>(j) - 1];
    for (long l = j + 1; l <= Lambda; ++l) {
      mpq_class m(stirling2(l, j) * factorial(j));
      if ((l + j) % 2) m = -m;
      acc -= m * b[static_cast<std::size_t>(l) - 1];
    }
    b[static_cast<std::size_t>(j) - 1] = acc / mpq_class(factorial(j));
  }
  return b;
}

// b_lambda = (-1)^{Lambda+lambda}/(Lambda-1)! sum_{j=lambda}^{Lambda} s(j,lambda) C(Lambda-1,j-1)/j!
// for lambda = 1..Lambda. With verify set, the result is checked against the
// triangular solve.
inline std::vector<mpq_class> b_lambda_weights(long Lambda, bool verify = true) {
  if (Lambda < 1) throw DomainError("b_lambda_weights: Lambda must be at least 1");
  std::vector<mpq_class> b;
  mpz_class lf = factorial(Lambda - 1);
  for (long l = 1; l <= Lambda; ++l) {
    mpq_class acc = 0;
    for (long j = l; j <= Lambda; ++j) {
      mpq_class t(stirling1(j, l) * binomial(Lambda - 1, j - 1), factorial(j));
      t.canonicalize();
      acc += t;
    }
    acc /= mpq_class(lf);
    if ((Lambda + l) % 2) acc = -acc;
    b.push_back(acc);
  }
  if (verify && b != b_lambda_by_matrix(Lambda))
    throw ConsistencyError("b_lambda closed form disagrees with the matrix solve at Lambda=" +
                           std::to_string(Lambda));
  return b;
}

}  // namespace zident
