// Exact rational arithmetic: thin layer over GMP's mpq_class plus the
// parsing/formatting and approximation helpers the rest of the library needs.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hyplp {

// Invariants (lowest terms, denominator > 0) are maintained by GMP's
// canonicalization; every helper below goes through mpq_class.
using Rational = mpq_class;

struct ZeroPolynomial : std::runtime_error {
  ZeroPolynomial() : std::runtime_error("polynomial is identically zero") {}
};
struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "num", "num/den" or a plain decimal literal like "-2.317" exactly.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos)
      throw DomainError("rational literal mixes '.' and '/': " + s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0) throw DomainError("trailing '.' in rational literal: " + s);
    mpz_class num, den;
    if (num.set_str(digits, 10) != 0)
      throw DomainError("bad rational literal: " + s);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
  if (sgn(r.get_den()) == 0) throw DomainError("zero denominator in: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) {
  return r.get_str();
}

inline int sign(const Rational& r) { return sgn(r); }

inline Rational abs_rat(const Rational& r) { return abs(r); }

// Best rational approximation with denominator <= max_den, via continued
// fractions (semiconvergent refinement of the last step).
inline Rational rationalize(double x, std::uint64_t max_den) {
  if (max_den < 1) throw DomainError("rationalize: max_den must be >= 1");
  if (!std::isfinite(x)) throw DomainError("rationalize: non-finite input");
  const bool neg = x < 0;
  double v = neg ? -x : x;
  // Continued-fraction convergents p_k/q_k of v.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;  // p_{-1}/q_{-1}, p_0/q_0 seeds
  double frac = v;
  const mpz_class cap(static_cast<unsigned long>(max_den));
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > 9e18) break;
    mpz_class a(static_cast<long>(fl));
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > cap) {
      // Largest semiconvergent with denominator within the cap.
      if (q1 == 0) break;
      mpz_class t = (cap - q0) / q1;
      if (t > 0) {
        mpz_class ps = t * p1 + p0;
        mpz_class qs = t * q1 + q0;
        // Choose the closer of semiconvergent and previous convergent.
        Rational r1(ps, qs), r2(p1, q1);
        r1.canonicalize();
        r2.canonicalize();
        double d1 = std::fabs(r1.get_d() - v), d2 = std::fabs(r2.get_d() - v);
        Rational best = (d1 < d2) ? r1 : r2;
        return neg ? Rational(-best) : best;
      }
      break;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  Rational best(p1, q1 == 0 ? mpz_class(1) : q1);
  best.canonicalize();
  return neg ? Rational(-best) : best;
}

}  // namespace hyplp
