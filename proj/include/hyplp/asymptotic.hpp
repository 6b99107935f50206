// Certified evaluation of the asymptotic constants via exact
// head/middle/tail decompositions: the singular heads x^{-2a} and
// (x - k0)^{2a} near their base points are bounded in closed form, the
// compact middles by certified quadrature, and the tails by explicit
// Gaussian or power-law bounds. All bounds are one-sided in exactly the
// direction the final inequalities need.
#pragma once

#include <hyplp/quad.hpp>

#include <array>
#include <optional>
#include <utility>

namespace hyplp {

struct ParameterDomainError : std::runtime_error {
  explicit ParameterDomainError(const std::string& what)
      : std::runtime_error(what) {}
};

// h_c(x) = (c - 1 + x^2) e^{-x^2/2}; h_c(b i/2) = (c - 1 - b^2/4) e^{b^2/8}.
namespace detail {

inline Interval h_c_at(const Rational& c, const Rational& x) {
  return Interval(c - 1 + x * x) * exp(Interval(-(x * x) / 2));
}

inline Interval h_c_at_half_i(const Rational& c, const Rational& b) {
  return Interval(c - 1 - b * b / 4) * exp(Interval(b * b / 8));
}

}  // namespace detail

struct SystoleConstSpec {
  Rational alpha = rat(559, 1000);
  Rational b = rat(10286, 10000);
  Rational c = rat(23726, 10000);
  Rational kappa0 = rat(1814, 10000);
  Rational A = rat(1, 1000000);
  Rational B = Rational(10);
  double tol = 1e-12;
};

// Encloses  b k0 + 2 log( 2^{1-2a} / h_c(b i/2) * J )  with
// J = int_0^inf h_c(bx) tanh(pi x) / x^{2a} dx, bounded by
//   head <= pi (c - 1 + b^2 A^2) A^{2-2a} / (2 - 2a),
//   middle on [A, B] by quadrature,
//   tail <= h_c(bB) / ((2a-1) B^{2a-1})   (h_c decreasing past bB, B >= 1).
inline Interval const_systole(const SystoleConstSpec& s = {}) {
  if (!(s.c > 1 + s.b * s.b / 4))
    throw ParameterDomainError("const_systole: requires c > 1 + b^2/4");
  if (!(2 * s.alpha - 1 > 0 && 2 - 2 * s.alpha > 0))
    throw ParameterDomainError("const_systole: requires 1/2 < alpha < 1");
  if (!(s.B >= 1))
    throw ParameterDomainError("const_systole: requires B >= 1");
  if (!(Rational(0) < s.A && s.A < s.B))
    throw ParameterDomainError("const_systole: requires 0 < A < B");

  Interval head = Interval::pi() * Interval(s.c - 1 + s.b * s.b * s.A * s.A) *
                  pow_rational(Interval(s.A), 2 - 2 * s.alpha) /
                  Interval(2 - 2 * s.alpha);
  using namespace ex;
  ExprPtr x = var();
  ExprPtr f = apply_poly(RationalPoly(std::vector<Rational>{
                             s.c - 1, s.b * s.b}),
                         x * x) *
              exp(-(lit(s.b * s.b) * (x * x)) / lit(2)) * tanh(pi() * x) *
              pow(x, -2 * s.alpha);
  QuadResult mid = integrate_compact(f, s.A, s.B, s.tol);
  Interval tail = detail::h_c_at(s.c, s.b * s.B) /
                  (Interval(2 * s.alpha - 1) *
                   pow_rational(Interval(s.B), 2 * s.alpha - 1));
  // J in [middle.lo, head + middle + tail].hi (head, tail >= 0)
  Interval J = Interval::hull(mid.value, mid.value + head + tail);
  Interval coef =
      pow_rational(Interval(2L), 1 - 2 * s.alpha) /
      detail::h_c_at_half_i(s.c, s.b);
  return Interval(s.b * s.kappa0) + Interval(2L) * log(coef * J);
}

struct LemmaNegativeSpec {
  Rational alpha = rat(559, 1000);
  Rational c = rat(23726, 10000);
  Rational kappa0 = rat(1814, 10000);
  Rational A = rat(1, 10000);
  Rational B = Rational(10);
  double tol = 1e-12;
};

namespace detail {

// One-sided upper bound of int over [lo, hi] of
//   pow(x - shift, 2a) * w(x) * e^{-x^2/2}
// by certified quadrature (lo > shift required so the power is regular).
inline Interval shifted_power_integral(const Rational& shift,
                                       const Rational& two_alpha,
                                       const RationalPoly& w,
                                       const Rational& lo, const Rational& hi,
                                       double tol) {
  using namespace ex;
  ExprPtr x = var();
  ExprPtr f = pow(x - lit(shift), two_alpha) * apply_poly(w, x) *
              exp(-(x * x) / lit(2));
  return integrate_compact(f, lo, hi, tol).value;
}

// Tight enclosure of the singular head
//   int_{x0}^{x0+delta} (x - x0)^{2a} w(x) e^{-x^2/2} dx
// via the range of the smooth factor: the integral lies in
//   range(w e^{-x^2/2} on [x0, x0+delta]) * delta^{2a+1}/(2a+1).
inline Interval singular_head(const Rational& x0, const Rational& two_alpha,
                              const RationalPoly& w, const Rational& delta) {
  using namespace ex;
  ExprPtr x = var();
  Interval srange = eval_interval(apply_poly(w, x) * exp(-(x * x) / lit(2)),
                                  Interval(x0, x0 + delta));
  return srange * pow_rational(Interval(delta), two_alpha + 1) /
         Interval(two_alpha + 1);
}

}  // namespace detail

// The three-part negativity argument for
//   I(k) = int_k^inf (x - k)^{2a} (c - x^2) e^{-x^2/2} dx :
//  [0] upper bound of I(k0)  (head device + middle, tail dropped as <= 0),
//  [1] upper bound of I'(k) on [k0, 0.7],
//  [2] upper bound of I(k) on [0.7, sqrt(c)].
inline std::array<Interval, 3> lemma_negative(const LemmaNegativeSpec& s = {}) {
  const RationalPoly cx2(std::vector<Rational>{s.c, Rational(0), Rational(-1)});
  const Rational two_alpha = 2 * s.alpha;

  // --- part 1: I(k0) ---
  // head: int_{k0}^{k0+A} <= A^{2a} int (c - x^2) e^{-x^2/2}
  using namespace ex;
  ExprPtr x = var();
  ExprPtr smooth = apply_poly(cx2, x) * exp(-(x * x) / lit(2));
  Interval head1 = pow_rational(Interval(s.A), two_alpha) *
                   integrate_compact(smooth, s.kappa0, s.kappa0 + s.A, s.tol)
                       .value;
  Interval mid1 = detail::shifted_power_integral(s.kappa0, two_alpha, cx2,
                                                 s.kappa0 + s.A, s.B, s.tol);
  Interval part1 = head1 + mid1;  // tail beyond B is <= 0 and dropped

  // --- part 2: I'(k) <= first + second for k in [k0, 0.7] ---
  // integrand weight: x (x^2 - (c+2))
  const RationalPoly wder(std::vector<Rational>{Rational(0), -(s.c + 2),
                                                Rational(0), Rational(1)});
  // sqrt(c+2) bracketed by rational endpoints of a tight enclosure
  Interval sc2 = sqrt(Interval(s.c + 2));
  const Rational s_lo = sc2.lower_rational();   // <= sqrt(c+2)
  const Rational s_hi = sc2.upper_rational();   // >= sqrt(c+2)
  // first integral: negative integrand on [0.7, sqrt(c+2)]; tight singular
  // head on [0.7, 0.7+A], quadrature on [0.7+A, s_lo]; the sliver
  // [s_lo, sqrt(c+2)] is negative and dropping it only increases the value.
  Interval first2 = detail::singular_head(rat(7, 10), two_alpha, wder, s.A) +
                    detail::shifted_power_integral(
                        rat(7, 10), two_alpha, wder, rat(7, 10) + s.A, s_lo,
                        s.tol);
  // second integral: positive integrand on [sqrt(c+2), inf).
  //   sliver [sqrt(c+2), s_hi]: bounded by sup of the integrand * width,
  //   middle [s_hi, B] by quadrature,
  //   tail beyond B: (x-k0)^{2a} <= x^2 (a < 1, x > 1), so the integrand is
  //   at most x^3 (x^2 - (c+2)) e^{-x^2/2} <= x^5 e^{-x^2/2}.
  Interval sliver_rng = eval_interval(
      ex::pow(x - lit(s.kappa0), two_alpha) * apply_poly(wder, x) *
          exp(-(x * x) / lit(2)),
      Interval(s_lo, s_hi));
  Interval sliver2 = Interval::max(sliver_rng, Interval(0L)) *
                     Interval(s_hi - s_lo);
  Interval mid2 = detail::shifted_power_integral(s.kappa0, two_alpha, wder,
                                                 s_hi, s.B, s.tol);
  Interval tail2 = gaussian_poly_tail(
      RationalPoly(std::vector<Rational>{Rational(0), Rational(0),
                                         Rational(1)}),
      s.B);  // int_B^inf x^5 e^{-x^2/2} dx
  Interval part2 = first2 + Interval::hull(Interval(0L), sliver2) + mid2 +
                   Interval::hull(Interval(0L), tail2);

  // --- part 3: I(k) <= first + second for k in [0.7, sqrt(c)] ---
  Interval sc = sqrt(Interval(s.c));
  const Rational c_lo = sc.lower_rational();
  const Rational c_hi = sc.upper_rational();
  // first: positive integrand on [0.7, sqrt(c)]; tight singular head at 0.7,
  // sliver [c_lo, sqrt(c)] bounded by sup * width.
  Interval head3 = detail::singular_head(rat(7, 10), two_alpha, cx2, s.A);
  Interval mid3 = detail::shifted_power_integral(rat(7, 10), two_alpha, cx2,
                                                 rat(7, 10) + s.A, c_lo,
                                                 s.tol);
  Interval sliver3_rng = eval_interval(
      ex::pow(x - lit(rat(7, 10)), two_alpha) * apply_poly(cx2, x) *
          exp(-(x * x) / lit(2)),
      Interval(c_lo, c_hi));
  Interval sliver3 = Interval::max(sliver3_rng, Interval(0L)) *
                     Interval(c_hi - c_lo);
  // second: negative integrand on [sqrt(c), inf); since c - x^2 < 0 there and
  // (x - sqrt(c))^{2a} >= (x - c_hi)^{2a} for x >= c_hi, replacing the shift
  // by c_hi and dropping [sqrt(c), c_hi + A] and the tail beyond B increases
  // the value.
  Interval second3 = detail::shifted_power_integral(c_hi, two_alpha, cx2,
                                                    c_hi + s.A, s.B, s.tol);
  Interval part3 = head3 + Interval::hull(Interval(0L), sliver3) + mid3 +
                   second3;

  return {part1, part2, part3};
}

struct KissingConstSpec {
  Rational alpha = rat(592, 1000);
  Rational b = rat(981, 1000);
  Rational kappa0 = rat(61, 1000);
  Rational A = rat(1, 10000);
  Rational B = Rational(10000);
  double tol = 1e-11;
  Rational c() const { return 1 + b * b / 4; }
};

// Companion negativity bound: for every k in [k0, sqrt(c)],
//   I(k) <= int_{k0}^{sqrt c} (x-k0)^{2a}(c-x^2)e^{-x^2/2}
//         + int_{sqrt c}^inf (x-sqrt c)^{2a}(c-x^2)e^{-x^2/2},
// with the first integral split at k0 + 1/100 (head device) and the second
// at 100 (tail dropped as <= 0).
inline Interval kissing_lemma_negative(const KissingConstSpec& s = {}) {
  const Rational c = s.c();
  const RationalPoly cx2(std::vector<Rational>{c, Rational(0), Rational(-1)});
  const Rational two_alpha = 2 * s.alpha;
  const Rational Ah = rat(1, 100);
  using namespace ex;
  ExprPtr x = var();
  Interval sc = sqrt(Interval(c));
  const Rational c_lo = sc.lower_rational();
  const Rational c_hi = sc.upper_rational();

  Interval head = detail::singular_head(s.kappa0, two_alpha, cx2, Ah);
  Interval mid = detail::shifted_power_integral(s.kappa0, two_alpha, cx2,
                                                s.kappa0 + Ah, c_lo, s.tol);
  Interval sliver_rng = eval_interval(
      ex::pow(x - lit(s.kappa0), two_alpha) * apply_poly(cx2, x) *
          exp(-(x * x) / lit(2)),
      Interval(c_lo, c_hi));
  Interval sliver = Interval::max(sliver_rng, Interval(0L)) *
                    Interval(c_hi - c_lo);
  Interval second = detail::shifted_power_integral(c_hi, two_alpha, cx2,
                                                   c_hi + s.A, Rational(100),
                                                   s.tol);
  return head + Interval::hull(Interval(0L), sliver) + mid + second;
}

// Crude negativity bound for kappa at or beyond sqrt(c): the integrand is
// non-positive, so [-(crude magnitude), 0] encloses I(kappa).
inline Interval kissing_lemma_trivial(const KissingConstSpec& s,
                                      const Rational& kappa) {
  const Rational c = s.c();
  if (!(kappa * kappa >= c))
    throw ParameterDomainError("kissing_lemma_trivial: requires kappa >= sqrt(c)");
  // |I| <= int_0^inf (1 + x^2)(x^2 + c) e^{-x^2/2} dx
  using namespace ex;
  ExprPtr x = var();
  RationalPoly w = RationalPoly(std::vector<Rational>{Rational(1), Rational(0),
                                                      Rational(1)}) *
                   RationalPoly(std::vector<Rational>{c, Rational(0),
                                                     Rational(1)});
  Interval mag = integrate_compact(apply_poly(w, x) * exp(-(x * x) / lit(2)),
                                   Rational(0), Rational(30), 1e-6)
                     .value +
                 Interval(Rational(0), Rational(1));  // crude super-tail
  return Interval::hull(-mag, Interval(0L));
}

// 2 sqrt(2 pi) L2 / L1 with
//  L2 = (2 b^2/pi) int_0^inf tanh(pi x)/x^{2a} (x^2 + 1/4) e^{-b^2x^2/2} dx
//       (upper bound: closed-form head, quadrature middle, exact Gaussian
//        tail identity (b^2B^2+2)/(b^4 B^{2a}) e^{-b^2B^2/2}),
//  L1 = (4 b^{2a} |cos((2a+1) pi/2)| / pi) * C * (-I(k0)), bounded below by
//       restricting C = int (1-cos x)/x^{2a+1} to [A, B] and bounding
//       -I(k0) = -int_{k0}^inf (x-k0)^{2a}(c-x^2)e^{-x^2/2} dx from below
//       (head device at k0 + A, negative tail beyond B dropped).
inline Interval const_kissing(const KissingConstSpec& s = {}) {
  if (!(Rational(0) < s.A && s.A < 2 && Rational(2) < s.B))
    throw ParameterDomainError("const_kissing: requires 0 < A < 2 < B");
  if (!(2 * s.alpha - 1 > 0 && 1 - s.alpha > 0))
    throw ParameterDomainError("const_kissing: requires 1/2 < alpha < 1");
  const Rational b = s.b;
  const Rational two_alpha = 2 * s.alpha;
  using namespace ex;
  ExprPtr x = var();

  // ---- L2 upper ----
  Interval head2 = Interval::pi() * Interval(s.A * s.A + rat(1, 4)) *
                   pow_rational(Interval(s.A), 2 - two_alpha) /
                   Interval(2 - two_alpha);
  ExprPtr f2 = tanh(pi() * x) * pow(x, -two_alpha) *
               apply_poly(RationalPoly(std::vector<Rational>{rat(1, 4),
                                                             Rational(1)}),
                          x * x) *
               exp(-(lit(b * b) * (x * x)) / lit(2));
  QuadResult mid2 = integrate_compact(f2, s.A, s.B, s.tol);
  Interval tail2 = Interval(b * b * s.B * s.B + 2) /
                   (Interval(b * b * b * b) *
                    pow_rational(Interval(s.B), two_alpha)) *
                   exp(Interval(-(b * b * s.B * s.B) / 2));
  Interval L2int = Interval::hull(mid2.value, mid2.value + head2 + tail2);
  Interval L2 = Interval(2 * b * b) / Interval::pi() * L2int;

  // ---- L1 lower ----
  Interval cosfac = cos((Interval(two_alpha) + Interval(1L)) *
                        Interval::pi() / Interval(2L));
  if (!cosfac.certainly_negative())
    throw ParameterDomainError(
        "const_kissing: cos((2a+1)pi/2) not certified negative");
  QuadResult C = integrate_compact(
      (lit(1) - cos(x)) * pow(x, -(two_alpha + 1)), s.A, s.B, s.tol);
  // I(k0) itself (shift k0 throughout): crude head device at k0 + A, middle
  // [k0 + A, B] by quadrature, negative tail beyond B dropped.
  const Rational c = s.c();
  const RationalPoly cx2(std::vector<Rational>{c, Rational(0), Rational(-1)});
  ExprPtr smooth = apply_poly(cx2, x) * exp(-(x * x) / lit(2));
  Interval headI =
      pow_rational(Interval(s.A), two_alpha) *
      integrate_compact(smooth, s.kappa0, s.kappa0 + s.A, s.tol).value;
  Interval midI = detail::shifted_power_integral(s.kappa0, two_alpha, cx2,
                                                 s.kappa0 + s.A, s.B, s.tol);
  Interval I = headI + midI;  // upper bound of I(k0) < 0
  if (!I.certainly_negative())
    throw ParameterDomainError("const_kissing: I(kappa0) not certified negative");
  // L1 = (4 b^{2a}/pi) * (-cos) * C * (-I); lower bound via the lower ends
  Interval L1 = Interval(4L) * pow_rational(Interval(b), two_alpha) /
                Interval::pi() * (-cosfac) * C.value * (-I);

  return Interval(2L) * sqrt(Interval(2L) * Interval::pi()) * L2 / L1;
}

struct LambdaConstSpec {
  Rational A = rat(1, 1000000);
  Rational B = Rational(500);
  double tol = 1e-12;
};

// (pi^2/2) int_0^inf (sinh x cosh x - x)/(x^3 cosh^2 x) dx.
// Lower bound from [A, B] (positive integrand); upper bound adds the head
// loss (integrand <= 0.67 for x <= 1/100) and the tail loss
// (integrand <= 1/x^3, so the tail is <= 1/(2B^2)).
inline Interval const_lambda(const LambdaConstSpec& s = {}) {
  if (!(Rational(0) < s.A && s.A <= rat(1, 100) && s.A < s.B))
    throw ParameterDomainError("const_lambda: requires 0 < A <= 1/100 < B");
  using namespace ex;
  ExprPtr x = var();
  ExprPtr ch = cosh(x);
  ExprPtr f = (sinh(x) * ch - x) / (x * x * x * ch * ch);
  QuadResult mid = integrate_compact(f, s.A, s.B, s.tol);
  Interval head_loss = Interval(Rational(0), rat(67, 100) * s.A);
  Interval tail_loss = Interval(Rational(0), Rational(1) / (2 * s.B * s.B));
  Interval full = mid.value + head_loss + tail_loss;
  return Interval::pi() * Interval::pi() / Interval(2L) * full;
}

// Exact rational multiples of powers of pi.
struct PiPower {
  Rational coefficient;
  int pi_exponent = 0;
  Interval enclose() const {
    Interval p(1L);
    for (int i = 0; i < pi_exponent; ++i) p = p * Interval::pi();
    return Interval(coefficient) * p;
  }
  bool operator==(const PiPower& o) const {
    return coefficient == o.coefficient && pi_exponent == o.pi_exponent;
  }
};

namespace detail {

// Gamma(n/2) for positive n, exactly, as rational * sqrt(pi)^{0 or 1}.
// Returned as (coefficient, count of sqrt(pi) factors in {0,1}).
inline std::pair<Rational, int> gamma_half(long n) {
  if (n <= 0) throw DomainError("gamma_half: argument must be positive");
  if (n % 2 == 0) {  // Gamma(m) = (m-1)!
    Rational f(1);
    for (long k = 2; k < n / 2; ++k) f *= k;
    return {f, 0};
  }
  // Gamma(m + 1/2) = (2m)!/(4^m m!) sqrt(pi)
  long m = (n - 1) / 2;
  Rational f(1);
  for (long k = 1; k <= 2 * m; ++k) f *= k;
  Rational mf(1);
  for (long k = 1; k <= m; ++k) mf *= k;
  Rational four_m(1);
  for (long k = 0; k < m; ++k) four_m *= 4;
  return {f / (four_m * mf), 1};
}

}  // namespace detail

struct NSmallMoments {
  Rational first;                 // int fhat(y) y dy = 16 a^2/(4a - 2)
  std::optional<PiPower> second;  // closed form on the half-integer grid
};

// Exact moment formulas behind the small-eigenvalue asymptotics; the final
// assembled constants are 16 (= 2 * 8, first moment minimized at a = 1) and
// 24 pi^2 (= 2 pi * 12 pi, second moment minimized at a = 3/2).
inline NSmallMoments nsmall_moments(const Rational& alpha) {
  if (!(alpha > rat(1, 2)))
    throw DomainError("nsmall_moments: requires alpha > 1/2");
  NSmallMoments out;
  out.first = 16 * alpha * alpha / (4 * alpha - 2);

  // second moment: (2^{8a-6}/pi) a^2 (a-1)^2/(4a-3) Gamma(a-1)^4/Gamma(4a-4),
  // defined here on the half-integer grid alpha in {3/2, 2, 5/2, ...}.
  Rational twice = 2 * alpha;
  if (twice.get_den() == 1 && alpha > 1) {
    long n2 = twice.get_num().get_si();        // alpha = n2/2
    auto g1 = detail::gamma_half(n2 - 2);      // Gamma(alpha - 1)
    auto g2 = detail::gamma_half(4 * n2 - 8);  // Gamma(4a - 4), integer arg
    if (g2.second != 0)
      throw DomainError("nsmall_moments: unexpected sqrt(pi) in Gamma(4a-4)");
    // Gamma(a-1)^4 = g1.coeff^4 * pi^{2 * (sqrt-pi count)}
    Rational num = g1.first * g1.first * g1.first * g1.first;
    int pi_num = 2 * g1.second;
    // 2^{8a-6}: 8a - 6 = 4*n2 - 6, an integer
    long e2 = 4 * n2 - 6;
    Rational pw(1);
    for (long i = 0; i < (e2 > 0 ? e2 : -e2); ++i) pw *= 2;
    if (e2 < 0) pw = 1 / pw;
    Rational coef = pw * alpha * alpha * (alpha - 1) * (alpha - 1) /
                    (4 * alpha - 3) * num / g2.first;
    out.second = PiPower{coef, pi_num - 1};  // the leading 1/pi
  }
  return out;
}

// The assembled constants reported by the asymptotic theorem.
inline PiPower nsmall_final_first() { return {Rational(16), 0}; }
inline PiPower nsmall_final_second() { return {Rational(24), 2}; }

}  // namespace hyplp
