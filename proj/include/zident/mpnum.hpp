#pragma once

// Configurable-precision real and complex arithmetic on top of MPFR.
//
// Every BigReal carries its own precision. Binary operations round the
// result to the larger of the two operand precisions (round to nearest).
//
// Error bounds, in units of the last bit of the result precision:
//   +, -, *, /, sqrt, exp, log, sin, cos, pow (real)   0.5 ulp (MPFR correctly rounded)
//   complex +, -                                        0.5 ulp per component
//   complex *                                           2 ulp relative to |z||w|
//   complex /                                           4 ulp relative to |z|/|w|
//   complex exp, log, sqrt, sin, cos                    4 ulp relative to the modulus
//   complex pow                                         6 ulp + |w log z| * 2^-prec

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace zident {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

// A pole of the evaluated function. The residue is stored as text so that the
// error type stays independent of the numeric types.
struct PoleError : DomainError {
  PoleError(const std::string& what, std::string residue_text)
      : DomainError(what), residue(std::move(residue_text)) {}
  std::string residue;
};

struct ValidityError : DomainError {
  using DomainError::DomainError;
};

struct PrecisionError : Error {
  using Error::Error;
};

struct ConsistencyError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t at)
      : Error(what + " at offset " + std::to_string(at)), offset(at) {}
  std::size_t offset;
};

inline mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 4;
}

struct PrecisionContext {
  int target_digits = 30;
  int guard_digits = 13;

  int working_digits() const { return target_digits + guard_digits; }
  mpfr_prec_t bits() const { return digits_to_bits(working_digits()); }

  // Same target, extra guard digits.
  PrecisionContext elevated(int extra_digits) const {
    return PrecisionContext{target_digits, guard_digits + std::max(0, extra_digits)};
  }
  double epsilon() const { return std::pow(10.0, -target_digits); }
  double log10_epsilon() const { return -static_cast<double>(target_digits); }
};

inline int default_guard_digits(int target_digits) {
  return 10 + static_cast<int>(std::ceil(0.1 * target_digits));
}

// guard_digits < 0 selects the default rule.
inline PrecisionContext make_context(int target_digits, int guard_digits = -1) {
  if (target_digits < 1)
    throw DomainError("target_digits must be positive, got " + std::to_string(target_digits));
  if (guard_digits < 0) guard_digits = default_guard_digits(target_digits);
  return PrecisionContext{target_digits, guard_digits};
}

class BigReal {
 public:
  explicit BigReal(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
    mpfr_set_zero(v_, 1);
  }
  BigReal(long x, mpfr_prec_t prec) : BigReal(prec) { mpfr_set_si(v_, x, MPFR_RNDN); }
  BigReal(double x, mpfr_prec_t prec) : BigReal(prec) { mpfr_set_d(v_, x, MPFR_RNDN); }
  BigReal(const mpz_class& x, mpfr_prec_t prec) : BigReal(prec) {
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  BigReal(const mpq_class& x, mpfr_prec_t prec) : BigReal(prec) {
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  BigReal(std::string_view decimal, mpfr_prec_t prec) : BigReal(prec) {
    std::string s(decimal);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw ParseError("not a decimal number '" + s + "'", 0);
  }
  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  // Copy of o rounded to prec.
  BigReal(const BigReal& o, mpfr_prec_t prec) : BigReal(prec) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // log10 |x|, also for magnitudes far outside the double range.
  double log10_abs() const {
    if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
  }

  BigReal& operator+=(const BigReal& o) { return apply(o, mpfr_add); }
  BigReal& operator-=(const BigReal& o) { return apply(o, mpfr_sub); }
  BigReal& operator*=(const BigReal& o) { return apply(o, mpfr_mul); }
  BigReal& operator/=(const BigReal& o) { return apply(o, mpfr_div); }
  BigReal& operator+=(long x) { mpfr_add_si(v_, v_, x, MPFR_RNDN); return *this; }
  BigReal& operator-=(long x) { mpfr_sub_si(v_, v_, x, MPFR_RNDN); return *this; }
  BigReal& operator*=(long x) { mpfr_mul_si(v_, v_, x, MPFR_RNDN); return *this; }
  BigReal& operator/=(long x) { mpfr_div_si(v_, v_, x, MPFR_RNDN); return *this; }

  BigReal operator-() const {
    BigReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

 private:
  BigReal& apply(const BigReal& o, int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    f(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  mpfr_t v_;
};

inline BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
inline BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
inline BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
inline BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
inline BigReal operator+(BigReal a, long b) { return a += b; }
inline BigReal operator-(BigReal a, long b) { return a -= b; }
inline BigReal operator*(BigReal a, long b) { return a *= b; }
inline BigReal operator/(BigReal a, long b) { return a /= b; }
inline BigReal operator*(long b, BigReal a) { return a *= b; }

inline bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.get(), b.get()); }
inline bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.get(), b.get()); }
inline bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.get(), b.get()); }
inline bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.get(), b.get()); }
inline bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.get(), b.get()); }

namespace detail {
template <class F>
BigReal unary(const BigReal& x, F f) {
  BigReal r(x.prec());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace detail

inline BigReal abs(const BigReal& x) { return detail::unary(x, mpfr_abs); }
inline BigReal sqrt(const BigReal& x) { return detail::unary(x, mpfr_sqrt); }
inline BigReal exp(const BigReal& x) { return detail::unary(x, mpfr_exp); }
inline BigReal log(const BigReal& x) { return detail::unary(x, mpfr_log); }
inline BigReal log1p(const BigReal& x) { return detail::unary(x, mpfr_log1p); }
inline BigReal sin(const BigReal& x) { return detail::unary(x, mpfr_sin); }
inline BigReal cos(const BigReal& x) { return detail::unary(x, mpfr_cos); }
inline BigReal sinh(const BigReal& x) { return detail::unary(x, mpfr_sinh); }
inline BigReal cosh(const BigReal& x) { return detail::unary(x, mpfr_cosh); }
inline BigReal floor(const BigReal& x) {
  BigReal r(x.prec());
  mpfr_floor(r.get(), x.get());
  return r;
}

inline BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline BigReal pow(const BigReal& x, long n) {
  BigReal r(x.prec());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}
inline BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(std::max(x.prec(), y.prec()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
inline BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r(std::max(x.prec(), y.prec()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

inline BigReal const_pi(mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}
inline BigReal const_log2(mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

// n/d in lowest terms.
inline mpq_class make_rational(const mpz_class& n, const mpz_class& d) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

// Exact conversion to a rational; x must be finite.
inline mpq_class to_rational(const BigReal& x) {
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.get());
  mpq_class q(m);
  if (e >= 0)
    mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  q.canonicalize();
  return q;
}

class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) { align(); }
  explicit BigComplex(BigReal re) : re_(std::move(re)), im_(re_.prec()) {}
  BigComplex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}
  BigComplex(const mpq_class& re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}
  BigComplex(const BigComplex& o, mpfr_prec_t prec) : re_(o.re_, prec), im_(o.im_, prec) {}

  const BigReal& re() const { return re_; }
  const BigReal& im() const { return im_; }
  BigReal& re() { return re_; }
  BigReal& im() { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

  bool is_real() const { return im_.is_zero(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  BigComplex& operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) {
    if (o.im_.is_zero()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    if (im_.is_zero()) {
      BigReal r = re_;
      re_ = r * o.re_;
      im_ = r * o.im_;
      return *this;
    }
    BigReal a = re_ * o.re_ - im_ * o.im_;
    BigReal b = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(a);
    im_ = std::move(b);
    return *this;
  }
  BigComplex& operator/=(const BigComplex& o) {
    if (o.im_.is_zero()) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    BigReal d = o.re_ * o.re_ + o.im_ * o.im_;
    BigReal a = (re_ * o.re_ + im_ * o.im_) / d;
    BigReal b = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(a);
    im_ = std::move(b);
    return *this;
  }
  BigComplex& operator*=(const BigReal& x) {
    re_ *= x;
    im_ *= x;
    return *this;
  }
  BigComplex& operator/=(const BigReal& x) {
    re_ /= x;
    im_ /= x;
    return *this;
  }
  BigComplex& operator+=(const BigReal& x) {
    re_ += x;
    return *this;
  }
  BigComplex& operator-=(const BigReal& x) {
    re_ -= x;
    return *this;
  }
  BigComplex& operator+=(long x) {
    re_ += x;
    return *this;
  }
  BigComplex& operator-=(long x) {
    re_ -= x;
    return *this;
  }
  BigComplex& operator*=(long x) {
    re_ *= x;
    im_ *= x;
    return *this;
  }
  BigComplex& operator/=(long x) {
    re_ /= x;
    im_ /= x;
    return *this;
  }
  BigComplex operator-() const { return BigComplex(-re_, -im_); }

 private:
  void align() {
    mpfr_prec_t p = std::max(re_.prec(), im_.prec());
    if (re_.prec() < p) re_ = BigReal(re_, p);
    if (im_.prec() < p) im_ = BigReal(im_, p);
  }
  BigReal re_;
  BigReal im_;
};

inline BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
inline BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
inline BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
inline BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
inline BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
inline BigComplex operator*(const BigReal& b, BigComplex a) { return a *= b; }
inline BigComplex operator/(BigComplex a, const BigReal& b) { return a /= b; }
inline BigComplex operator+(BigComplex a, const BigReal& b) { return a += b; }
inline BigComplex operator-(BigComplex a, const BigReal& b) { return a -= b; }
inline BigComplex operator+(BigComplex a, long b) { return a += b; }
inline BigComplex operator-(BigComplex a, long b) { return a -= b; }
inline BigComplex operator*(BigComplex a, long b) { return a *= b; }
inline BigComplex operator/(BigComplex a, long b) { return a /= b; }

inline BigComplex operator/(const BigReal& x, const BigComplex& z) {
  return BigComplex(x, BigReal(z.prec())) / z;
}

inline BigComplex conj(const BigComplex& z) { return BigComplex(z.re(), -z.im()); }
inline BigReal norm(const BigComplex& z) { return z.re() * z.re() + z.im() * z.im(); }
inline BigReal abs(const BigComplex& z) { return hypot(z.re(), z.im()); }
inline BigReal arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

inline BigComplex exp(const BigComplex& z) {
  BigReal m = exp(z.re());
  if (z.im().is_zero()) return BigComplex(m, BigReal(z.prec()));
  BigReal s(z.prec()), c(z.prec());
  mpfr_sin_cos(s.get(), c.get(), z.im().get(), MPFR_RNDN);
  return BigComplex(m * c, m * s);
}

// Principal branch, cut along the negative real axis.
inline BigComplex log(const BigComplex& z) {
  if (z.im().is_zero() && z.re().sign() > 0) return BigComplex(log(z.re()), BigReal(z.prec()));
  return BigComplex(log(abs(z)), arg(z));
}

inline BigComplex sqrt(const BigComplex& z) {
  if (z.im().is_zero()) {
    if (z.re().sign() >= 0) return BigComplex(sqrt(z.re()), BigReal(z.prec()));
    return BigComplex(BigReal(z.prec()), sqrt(-z.re()));
  }
  BigReal m = abs(z);
  BigReal a = sqrt((m + z.re()) / 2);
  BigReal b = sqrt((m - z.re()) / 2);
  if (z.im().sign() < 0) b = -b;
  return BigComplex(a, b);
}

inline BigComplex sin(const BigComplex& z) {
  if (z.im().is_zero()) return BigComplex(sin(z.re()), BigReal(z.prec()));
  return BigComplex(sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im()));
}

inline BigComplex cos(const BigComplex& z) {
  if (z.im().is_zero()) return BigComplex(cos(z.re()), BigReal(z.prec()));
  return BigComplex(cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im())));
}

// z^w on the principal branch; 0^w = 0 for Re w > 0.
inline BigComplex pow(const BigComplex& z, const BigComplex& w) {
  if (z.is_zero()) {
    if (w.re().sign() > 0) return BigComplex(z.prec());
    if (w.is_zero()) return BigComplex(1L, z.prec());
    throw DomainError("0 raised to a power with non-positive real part");
  }
  if (z.is_real() && w.is_real() && z.re().sign() > 0)
    return BigComplex(pow(z.re(), w.re()), BigReal(std::max(z.prec(), w.prec())));
  return exp(w * log(z));
}

// x^w for real x > 0.
inline BigComplex pow(const BigReal& x, const BigComplex& w) {
  if (w.is_real()) return BigComplex(pow(x, w.re()), BigReal(std::max(x.prec(), w.prec())));
  return exp(w * log(x));
}

inline BigComplex pow(const BigComplex& z, long n) {
  BigComplex result(1L, z.prec());
  BigComplex base = z;
  bool invert = n < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  if (invert) return BigComplex(1L, z.prec()) / result;
  return result;
}

// e(k/n) = exp(2 pi i k/n)
inline BigComplex root_of_unity(long k, long n, mpfr_prec_t prec) {
  long r = ((k % n) + n) % n;
  if (r == 0) return BigComplex(1L, prec);
  if (2 * r == n) return BigComplex(-1L, prec);
  if (4 * r == n) return BigComplex(BigReal(prec), BigReal(1L, prec));
  if (4 * r == 3 * n) return BigComplex(BigReal(prec), BigReal(-1L, prec));
  BigReal t = const_pi(prec) * (2 * r);
  t /= n;
  BigReal s(prec), c(prec);
  mpfr_sin_cos(s.get(), c.get(), t.get(), MPFR_RNDN);
  return BigComplex(c, s);
}

// Integer-valued test; used to detect exact poles and zeros.
inline bool is_nonpositive_integer(const BigComplex& z) {
  return z.im().is_zero() && z.re().is_integer() && z.re().sign() <= 0;
}
inline bool is_integer(const BigComplex& z) { return z.im().is_zero() && z.re().is_integer(); }

struct SeriesResult {
  BigComplex value;
  long terms_used = 0;
  BigReal tail_bound;
  bool converged = false;
  bool heuristic_tail = false;
};

// Relative difference |a-b| / max(|a|,|b|), or |a-b| if both vanish.
inline BigReal relative_difference(const BigComplex& a, const BigComplex& b) {
  BigReal d = abs(a - b);
  BigReal m = std::max(abs(a), abs(b), [](const BigReal& x, const BigReal& y) { return x < y; });
  if (m.is_zero()) return d;
  return d / m;
}

// Number of agreeing significant decimal digits, capped at 10000.
inline double agreeing_digits(const BigComplex& a, const BigComplex& b) {
  BigReal r = relative_difference(a, b);
  if (r.is_zero()) return 10000.0;
  return -r.log10_abs();
}

// Decimal rendering in the style of printf("%#.*g"): `digits` significant
// digits, trailing zeros kept, scientific notation when the decimal exponent
// is below -4 or at least `digits`, exponent with at least two digits.
// Rounding is to nearest with ties to even on the exact binary value.
inline std::string format_real(const BigReal& x, int digits = 10) {
  if (digits < 1) digits = 1;
  if (mpfr_nan_p(x.get())) return "nan";
  if (mpfr_inf_p(x.get())) return x.sign() < 0 ? "-inf" : "inf";
  std::string out;
  if (x.sign() < 0) out += '-';
  std::string mant;
  long exp10 = 0;
  if (x.is_zero()) {
    mant.assign(static_cast<std::size_t>(digits), '0');
    exp10 = 0;
  } else {
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), x.get(), MPFR_RNDN);
    mant = s;
    mpfr_free_str(s);
    if (!mant.empty() && mant[0] == '-') mant.erase(0, 1);
    exp10 = static_cast<long>(e) - 1;
  }
  if (exp10 < -4 || exp10 >= digits) {
    out += mant[0];
    out += '.';
    out += mant.substr(1);
    out += 'e';
    out += exp10 < 0 ? '-' : '+';
    std::string ed = std::to_string(exp10 < 0 ? -exp10 : exp10);
    if (ed.size() < 2) ed = "0" + ed;
    out += ed;
  } else if (exp10 >= 0) {
    out += mant.substr(0, static_cast<std::size_t>(exp10) + 1);
    out += '.';
    out += mant.substr(static_cast<std::size_t>(exp10) + 1);
  } else {
    out += "0.";
    out += std::string(static_cast<std::size_t>(-exp10 - 1), '0');
    out += mant;
  }
  return out;
}

inline std::string format_complex(const BigComplex& z, int digits = 10) {
  if (z.im().is_zero()) return format_real(z.re(), digits);
  std::string im = format_real(abs(z.im()), digits);
  return format_real(z.re(), digits) + (z.im().sign() < 0 ? "-" : "+") + im + "i";
}

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Scans `[-]digits[.[digits]][e[+|-]digits]` starting at pos; returns the end
// offset. The trailing-dot and exponent forms are what format_real prints.
inline std::size_t scan_decimal(std::string_view t, std::size_t pos, bool allow_sign) {
  std::size_t i = pos;
  if (allow_sign && i < t.size() && t[i] == '-') ++i;
  std::size_t d0 = i;
  while (i < t.size() && is_digit(t[i])) ++i;
  if (i == d0) throw ParseError("expected a digit", i);
  if (i < t.size() && t[i] == '.') {
    ++i;
    while (i < t.size() && is_digit(t[i])) ++i;
  }
  if (i < t.size() && (t[i] == 'e' || t[i] == 'E')) {
    ++i;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
    std::size_t e0 = i;
    while (i < t.size() && is_digit(t[i])) ++i;
    if (i == e0) throw ParseError("expected exponent digits", i);
  }
  return i;
}

}  // namespace detail

// Grammar: `[-]dec[.frac][(+|-)dec[.frac]i]` or `[-]dec[.frac]i`, each number
// optionally followed by a decimal exponent `e[+|-]digits`.
inline BigComplex parse_complex(std::string_view text, mpfr_prec_t prec) {
  if (text.empty()) throw ParseError("empty complex literal", 0);
  std::size_t end = detail::scan_decimal(text, 0, true);
  std::string first(text.substr(0, end));
  if (end == text.size()) return BigComplex(BigReal(first, prec), BigReal(prec));
  if (text[end] == 'i') {
    if (end + 1 != text.size()) throw ParseError("trailing characters", end + 1);
    return BigComplex(BigReal(prec), BigReal(first, prec));
  }
  if (text[end] != '+' && text[end] != '-') throw ParseError("expected '+', '-' or 'i'", end);
  bool negative = text[end] == '-';
  std::size_t im_begin = end + 1;
  std::size_t im_end = detail::scan_decimal(text, im_begin, false);
  if (im_end >= text.size() || text[im_end] != 'i') throw ParseError("expected 'i'", im_end);
  if (im_end + 1 != text.size()) throw ParseError("trailing characters", im_end + 1);
  std::string second(text.substr(im_begin, im_end - im_begin));
  if (negative) second = "-" + second;
  return BigComplex(BigReal(first, prec), BigReal(second, prec));
}

inline BigComplex parse_complex(std::string_view text, const PrecisionContext& ctx) {
  return parse_complex(text, ctx.bits());
}

inline BigComplex make_complex(double re, double im, mpfr_prec_t prec) {
  return BigComplex(BigReal(re, prec), BigReal(im, prec));
}

}  // namespace zident
