// Arbitrary-precision interval arithmetic with outward rounding, built on
// MPFR's correctly-rounded operations. Every Interval produced by the
// operations below contains the exact real value of the expression.
#pragma once

#include <hyplp/rational.hpp>

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

namespace hyplp {

struct DivisionByZeroInterval : std::runtime_error {
  DivisionByZeroInterval()
      : std::runtime_error("interval division by an interval containing 0") {}
};

namespace prec {

inline long env_default_bits() {
  if (const char* s = std::getenv("HYPLP_PRECISION_BITS")) {
    long v = std::atol(s);
    if (v >= 24 && v <= 16384) return v;
  }
  return 128;
}

inline long& working_bits() {
  thread_local long bits = env_default_bits();
  return bits;
}

// Scoped precision override (used by the doubling retry loop in quadrature).
class Scope {
 public:
  explicit Scope(long bits) : saved_(working_bits()) { working_bits() = bits; }
  ~Scope() { working_bits() = saved_; }

 private:
  long saved_;
};

}  // namespace prec

class Interval {
 public:
  Interval() { init(); }  // [0, 0]
  Interval(const Interval& o) {
    init();
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval(Interval&& o) noexcept {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    o.moved_ = true;
  }
  Interval& operator=(const Interval& o) {
    if (this != &o) {
      mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
      mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  Interval& operator=(Interval&& o) noexcept {
    if (this != &o) {
      if (!moved_) {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
      }
      lo_[0] = o.lo_[0];
      hi_[0] = o.hi_[0];
      moved_ = false;
      o.moved_ = true;
    }
    return *this;
  }
  ~Interval() {
    if (!moved_) {
      mpfr_clear(lo_);
      mpfr_clear(hi_);
    }
  }

  explicit Interval(long v) {
    init();
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
  }
  explicit Interval(double v) {
    init();
    mpfr_set_d(lo_, v, MPFR_RNDD);
    mpfr_set_d(hi_, v, MPFR_RNDU);
  }
  explicit Interval(const Rational& r) {
    init();
    mpfr_set_q(lo_, r.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, r.get_mpq_t(), MPFR_RNDU);
  }
  Interval(const Rational& lo, const Rational& hi) {
    init();
    if (lo > hi) throw DomainError("Interval: lo > hi");
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
  }
  Interval(double lo, double hi) {
    init();
    if (lo > hi) throw DomainError("Interval: lo > hi");
    mpfr_set_d(lo_, lo, MPFR_RNDD);
    mpfr_set_d(hi_, hi, MPFR_RNDU);
  }

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_d() const { return 0.5 * (lo_d() + hi_d()); }
  double width_d() const {
    mpfr_t w;
    mpfr_init2(w, mpfr_get_prec(lo_));
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double r = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return r;
  }

  bool contains(const Rational& r) const {
    return mpfr_cmp_q(lo_, r.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, r.get_mpq_t()) >= 0;
  }
  bool contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
  }
  bool contains(const Interval& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
  }
  bool intersects(const Interval& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
  }
  // Strict certified comparisons.
  bool certainly_less(const Interval& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
  }
  bool certainly_greater(const Interval& o) const {
    return mpfr_cmp(lo_, o.hi_) > 0;
  }
  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }

  // Decimal rendering with explicit outward rounding.
  std::string lo_string(int digits = 25) const {
    return fmt(lo_, digits, MPFR_RNDD);
  }
  std::string hi_string(int digits = 25) const {
    return fmt(hi_, digits, MPFR_RNDU);
  }

  friend Interval operator-(const Interval& a) {
    Interval r;
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
  }
  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_t t;
    mpfr_init2(t, prec::working_bits());
    bool first = true;
    const mpfr_srcptr as[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    for (auto x : as)
      for (auto y : bs) {
        mpfr_mul(t, x, y, MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, x, y, MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DivisionByZeroInterval();
    Interval r;
    mpfr_t t;
    mpfr_init2(t, prec::working_bits());
    bool first = true;
    const mpfr_srcptr as[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    for (auto x : as)
      for (auto y : bs) {
        mpfr_div(t, x, y, MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_div(t, x, y, MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }
  friend Interval operator+(const Interval& a, const Rational& b) {
    return a + Interval(b);
  }
  friend Interval operator*(const Interval& a, const Rational& b) {
    return a * Interval(b);
  }
  friend Interval operator*(const Rational& b, const Interval& a) {
    return a * Interval(b);
  }

  // Elementwise min/max (encloses min(x, y) for x in a, y in b).
  static Interval min(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  static Interval max(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  // Exact rational value of an endpoint (every finite float is rational).
  Rational lower_rational() const {
    Rational r;
    mpfr_get_q(r.get_mpq_t(), lo_);
    return r;
  }
  Rational upper_rational() const {
    Rational r;
    mpfr_get_q(r.get_mpq_t(), hi_);
    return r;
  }

  static Interval hull(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_set(r.lo_, mpfr_cmp(a.lo_, b.lo_) <= 0 ? a.lo_ : b.lo_, MPFR_RNDD);
    mpfr_set(r.hi_, mpfr_cmp(a.hi_, b.hi_) >= 0 ? a.hi_ : b.hi_, MPFR_RNDU);
    return r;
  }

  // ---- elementary enclosures ------------------------------------------

  static Interval pi() {
    Interval r;
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval exp(const Interval& a) { return monotone(a, mpfr_exp); }
  friend Interval sinh(const Interval& a) { return monotone(a, mpfr_sinh); }
  friend Interval tanh(const Interval& a) { return monotone(a, mpfr_tanh); }
  friend Interval asinh(const Interval& a) { return monotone(a, mpfr_asinh); }
  friend Interval log(const Interval& a) {
    if (mpfr_sgn(a.lo_) <= 0) throw DomainError("log: domain requires lo > 0");
    return monotone(a, mpfr_log);
  }
  friend Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.lo_) < 0) throw DomainError("sqrt: negative lower bound");
    return monotone(a, mpfr_sqrt);
  }
  friend Interval cosh(const Interval& a) {
    Interval r;
    if (a.contains_zero()) {
      mpfr_set_si(r.lo_, 1, MPFR_RNDD);
      mpfr_t t;
      mpfr_init2(t, prec::working_bits());
      mpfr_cosh(r.hi_, a.hi_, MPFR_RNDU);
      mpfr_cosh(t, a.lo_, MPFR_RNDU);
      if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      mpfr_clear(t);
      return r;
    }
    if (mpfr_sgn(a.lo_) > 0) return monotone(a, mpfr_cosh);
    return monotone(-a, mpfr_cosh);
  }
  friend Interval cos(const Interval& a) { return cos_impl(a); }
  friend Interval sin(const Interval& a) {
    // sin(x) = cos(x - pi/2); the pi/2 enclosure adds negligible width.
    Interval half_pi = pi() * Rational(1, 2);
    return cos_impl(a - half_pi);
  }
  // x^alpha for rational alpha, base certified positive.
  friend Interval pow_rational(const Interval& x, const Rational& alpha) {
    if (mpfr_sgn(x.lo()) <= 0) throw DomainError("pow: base must be > 0");
    return exp(Interval(alpha) * log(x));
  }

  // coefficient * e^{exponent}, both exact rationals (ExpScaledRational).
  static Interval exp_scaled(const Rational& coefficient,
                             const Rational& exponent) {
    return Interval(coefficient) * exp(Interval(exponent));
  }

 private:
  void init() {
    mpfr_init2(lo_, prec::working_bits());
    mpfr_init2(hi_, prec::working_bits());
    mpfr_set_zero(lo_, 0);
    mpfr_set_zero(hi_, 0);
  }
  static std::string fmt(const mpfr_t v, int digits, mpfr_rnd_t rnd) {
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*R*e", digits, rnd, v);
    return std::string(buf.data());
  }

  using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  static Interval monotone(const Interval& a, MpfrUnary fn) {
    Interval r;
    fn(r.lo_, a.lo_, MPFR_RNDD);
    fn(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  static Interval cos_impl(const Interval& a) {
    Interval r;
    Interval two_pi = pi() * Rational(2);
    mpfr_t w;
    mpfr_init2(w, prec::working_bits());
    mpfr_sub(w, a.hi_, a.lo_, MPFR_RNDU);
    if (mpfr_cmp(w, two_pi.lo_) >= 0) {
      mpfr_clear(w);
      mpfr_set_si(r.lo_, -1, MPFR_RNDD);
      mpfr_set_si(r.hi_, 1, MPFR_RNDU);
      return r;
    }
    mpfr_clear(w);
    // endpoint values, outward
    mpfr_t t;
    mpfr_init2(t, prec::working_bits());
    mpfr_cos(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_cos(t, a.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_cos(r.hi_, a.lo_, MPFR_RNDU);
    mpfr_cos(t, a.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    // interior extrema: multiples of pi possibly inside [lo, hi]
    Interval p = pi();
    Interval k_lo = Interval::raw(a.lo_) / p;
    Interval k_hi = Interval::raw(a.hi_) / p;
    long klo = static_cast<long>(std::floor(k_lo.lo_d())) - 1;
    long khi = static_cast<long>(std::ceil(k_hi.hi_d())) + 1;
    for (long k = klo; k <= khi; ++k) {
      Interval kp = p * Rational(k);
      bool possibly_inside = mpfr_cmp(kp.hi_, a.lo_) >= 0 &&
                             mpfr_cmp(kp.lo_, a.hi_) <= 0;
      if (!possibly_inside) continue;
      if (k % 2 == 0)
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
      else
        mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    }
    return r;
  }

  static Interval raw(const mpfr_t v) {
    Interval r;
    mpfr_set(r.lo_, v, MPFR_RNDD);
    mpfr_set(r.hi_, v, MPFR_RNDU);
    return r;
  }

  mpfr_t lo_, hi_;
  bool moved_ = false;
};

}  // namespace hyplp
