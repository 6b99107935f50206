// Rigorous sign and extremum certificates built on exact Sturm counting:
//  - certify_sign: constant-sign certificates for p on intervals and rays,
//  - certify_ratio_sinh: certified bound for sinh(s/2)/(-s f(s)),
//  - min_exp_poly: certified minimum of r(t) e^{-t/2} on an interval.
#pragma once

#include <hyplp/interval.hpp>
#include <hyplp/poly.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace hyplp {

struct NotDoubleRoot : std::runtime_error {
  explicit NotDoubleRoot(const std::string& what) : std::runtime_error(what) {}
};
struct OrderTooLow : std::runtime_error {
  OrderTooLow()
      : std::runtime_error(
            "certify_ratio_sinh: polynomial test failed at this Taylor order") {}
};

enum class ClaimedSign { NonNegative, NonPositive };

// Domain in the u variable: [a, b], [a, +inf), (-inf, b] or all of R.
struct SignDomain {
  std::optional<Rational> a, b;
  static SignDomain closed(const Rational& a, const Rational& b) {
    if (a > b) throw DomainError("SignDomain: a > b");
    return {a, b};
  }
  static SignDomain ray_from(const Rational& a) { return {a, std::nullopt}; }
  static SignDomain ray_to(const Rational& b) { return {std::nullopt, b}; }
  static SignDomain whole_line() { return {std::nullopt, std::nullopt}; }
  bool contains(const Rational& x) const {
    return (!a || *a <= x) && (!b || x <= *b);
  }
};

struct SignCertificate {
  RationalPoly poly;
  SignDomain domain;
  ClaimedSign claimed;
  std::vector<Rational> imposed_zeros;
  int sturm_count = -1;           // distinct roots counted in the domain
  std::optional<Rational> cauchy_bound;  // recorded for ray domains
  std::optional<Rational> witness_point;
  bool certified = false;
  std::string reason;  // non-empty when rejected
};

// Constant-sign certificate for p on the domain. Soundness:
//  1. every imposed zero is a root of even multiplicity (so p cannot change
//     sign there),
//  2. the number of distinct roots in the domain (left endpoint excluded;
//     roots exactly at a closed left endpoint are checked for sign
//     compatibility instead) equals the number of imposed zeros, so all roots
//     in the domain are the imposed even-multiplicity points,
//  3. a strict-sign witness fixes the sign on the (connected) complement.
inline SignCertificate certify_sign(const RationalPoly& p,
                                    const SignDomain& domain,
                                    ClaimedSign claimed,
                                    const std::vector<Rational>& imposed_zeros) {
  SignCertificate cert;
  cert.poly = p;
  cert.domain = domain;
  cert.claimed = claimed;
  cert.imposed_zeros = imposed_zeros;
  const int want = (claimed == ClaimedSign::NonNegative) ? 1 : -1;

  if (p.is_zero()) {
    cert.certified = true;  // the zero polynomial is both >= 0 and <= 0
    cert.sturm_count = 0;
    return cert;
  }

  for (const auto& z : imposed_zeros) {
    if (!domain.contains(z))
      throw DomainError("certify_sign: imposed zero outside the domain");
    int mult = p.root_multiplicity(z);
    if (mult < 2)
      throw NotDoubleRoot("imposed zero " + to_string(z) +
                          " has multiplicity " + std::to_string(mult));
    if (mult % 2 != 0) {
      cert.reason = "imposed zero " + to_string(z) +
                    " has odd multiplicity " + std::to_string(mult) +
                    " (sign change)";
      return cert;
    }
  }

  // Distinct-root count over the domain, excluding a finite left endpoint
  // (handled separately below).
  int count = 0;
  if (domain.a && domain.b)
    count = count_roots(p, *domain.a, *domain.b);
  else if (domain.a)
    count = count_roots_above(p, *domain.a);
  else if (domain.b)
    count = count_roots_below(p, *domain.b);
  else
    count = count_roots_real_line(p);
  cert.sturm_count = count;

  int imposed_not_at_left = 0;
  for (const auto& z : imposed_zeros)
    if (!(domain.a && z == *domain.a)) ++imposed_not_at_left;
  if (count != imposed_not_at_left) {
    cert.reason = "Sturm count " + std::to_string(count) +
                  " != " + std::to_string(imposed_not_at_left) +
                  " imposed zeros in domain";
    return cert;
  }

  // Left endpoint of a closed/ray domain: value must not violate the sign.
  if (domain.a) {
    int s = sgn(p.eval(*domain.a));
    if (s != 0 && s != want) {
      cert.reason = "sign violated at left endpoint " + to_string(*domain.a);
      return cert;
    }
  }
  if (domain.b) {
    int s = sgn(p.eval(*domain.b));
    if (s != 0 && s != want) {
      cert.reason = "sign violated at right endpoint " + to_string(*domain.b);
      return cert;
    }
  }

  // Unbounded domains: record the Cauchy bound and check the sign at
  // infinity against the leading coefficient.
  if (!domain.a || !domain.b) {
    cert.cauchy_bound = p.cauchy_root_bound();
    int at_inf = (!domain.b) ? detail::sign_at_pos_inf(p)
                             : detail::sign_at_neg_inf(p);
    if (at_inf != want) {
      cert.reason = "sign at infinity disagrees with the claim";
      return cert;
    }
  }

  // Strict witness: a rational sample point of the claimed strict sign, or a
  // second-derivative check at an imposed zero. Candidate samples: midpoints
  // between consecutive special points and points beyond them.
  std::vector<Rational> specials = imposed_zeros;
  if (domain.a) specials.push_back(*domain.a);
  if (domain.b) specials.push_back(*domain.b);
  std::vector<Rational> candidates = specials;
  std::sort(specials.begin(), specials.end());
  for (std::size_t i = 0; i + 1 < specials.size(); ++i)
    candidates.push_back((specials[i] + specials[i + 1]) / 2);
  if (!specials.empty()) {
    Rational margin =
        domain.b ? (*domain.b - specials.front()) / 2 + 1 : Rational(1);
    if (!domain.a || cert.cauchy_bound)
      candidates.push_back(specials.back() +
                           (cert.cauchy_bound ? *cert.cauchy_bound : margin));
    candidates.push_back(specials.front() - 1);
  } else {
    candidates.push_back(Rational(0));
    candidates.push_back(Rational(1));
    candidates.push_back(Rational(-1));
  }
  for (const auto& c : candidates) {
    if (!domain.contains(c)) continue;
    if (sgn(p.eval(c)) == want) {
      cert.witness_point = c;
      cert.certified = true;
      return cert;
    }
  }
  // Fallback witness: second derivative strictly of the claimed sign at an
  // imposed double zero.
  RationalPoly p2 = p.derivative().derivative();
  for (const auto& z : imposed_zeros) {
    if (sgn(p2.eval(z)) == want) {
      cert.witness_point = z;
      cert.certified = true;
      return cert;
    }
  }
  cert.reason = "no strict-sign witness found";
  return cert;
}

namespace detail {

// Upper Taylor polynomial for sinh(x/2) on [0, b]: odd Taylor sum plus the
// remainder cap cosh(b)*(b/2)^{2n+1}/(2n+1)! rationalized upward.
inline RationalPoly sinh_half_upper(int order_n, const Rational& b) {
  std::vector<Rational> c(2 * order_n + 2, Rational(0));
  Rational fact(1);
  for (int k = 0; k <= 2 * order_n; ++k) {
    if (k > 0) fact *= k;
    if (k % 2 == 1) {
      // (x/2)^k / k!
      Rational pw(1);
      for (int j = 0; j < k; ++j) pw /= 2;
      c[k] = pw / fact;
    }
  }
  // remainder cap as a rational constant, rounded up
  Interval cap = cosh(Interval(b));
  Rational half_b = b / 2;
  Rational pw(1);
  Rational fct(1);
  for (int j = 1; j <= 2 * order_n + 1; ++j) {
    pw *= half_b;
    fct *= j;
  }
  Interval rem = cap * Interval(pw / fct);
  c[0] += rem.upper_rational();  // exact value of the rounded-up endpoint
  return RationalPoly(std::move(c));
}

// Lower Taylor polynomial for e^{-x^2/2} on all of R: truncate the series
// sum_j (-x^2/2)^j / j! after an odd number of terms (odd top index k), which
// under-estimates e^{-t} for every t >= 0.
inline RationalPoly exp_msq_lower(int order_n) {
  int k_top = order_n;
  if (k_top % 2 == 0) ++k_top;
  std::vector<Rational> c(2 * k_top + 1, Rational(0));
  Rational fact(1);
  for (int j = 0; j <= k_top; ++j) {
    if (j > 0) fact *= j;
    Rational term(1);
    for (int i = 0; i < j; ++i) term /= -2;
    c[2 * j] = term / fact;
  }
  return RationalPoly(std::move(c));
}

}  // namespace detail

// True => sinh(s/2) <= B * (-s * f(s)) for every s in [a, b], where
// f(s) = p(s^2) e^{-s^2/2} and p <= 0 on [a^2, b^2] was certified by the
// caller. Test polynomial: T(x) = S_n(x) + B x p(x^2) E_n(x) < 0 on [a, b].
inline bool certify_ratio_sinh(const RationalPoly& p, const Rational& a,
                               const Rational& b, const Rational& B,
                               int taylor_order) {
  if (!(Rational(0) < a && a <= b))
    throw DomainError("certify_ratio_sinh: need 0 < a <= b");
  if (sgn(B) < 0) return false;
  RationalPoly S = detail::sinh_half_upper(taylor_order, b);
  RationalPoly E = detail::exp_msq_lower(taylor_order);
  RationalPoly xp = RationalPoly::monomial(1) * p.substitute_square();
  RationalPoly T = S + B * (xp * E);
  if (T.is_zero()) throw OrderTooLow();
  // T < 0 on [a, b]: no roots in (a, b], T(a) < 0, T(mid) < 0.
  if (sgn(T.eval(a)) >= 0) throw OrderTooLow();
  if (sgn(T.eval((a + b) / 2)) >= 0) throw OrderTooLow();
  if (count_roots(T, a, b) != 0) throw OrderTooLow();
  return true;
}

// Escalating driver per the order schedule (start 12, +4 up to 40).
inline bool certify_ratio_sinh_auto(const RationalPoly& p, const Rational& a,
                                    const Rational& b, const Rational& B) {
  for (int n = 12; n <= 40; n += 4) {
    try {
      return certify_ratio_sinh(p, a, b, B, n);
    } catch (const OrderTooLow&) {
      if (n + 4 > 40) return false;
    }
  }
  return false;
}

// Certified enclosure of min over [a, b] of h(t) = r(t) e^{-t/2}.
// Fast path: h' has the sign pattern of at most one interior critical point
// that is a local maximum, so the minimum sits at an endpoint. Otherwise a
// certified subdivision enclosure.
inline Interval min_exp_poly(const RationalPoly& r, const Rational& a,
                             const Rational& b) {
  if (!(a < b)) throw DomainError("min_exp_poly: need a < b");
  if (r.is_zero()) return Interval(0L);
  auto h_at = [&](const Rational& t) {
    return Interval(r.eval(t)) * exp(Interval(-t / 2));
  };
  Interval at_a = h_at(a), at_b = h_at(b);
  Interval end_min = Interval::min(at_a, at_b);

  RationalPoly d = r.derivative() - r * rat(1, 2);  // sign of h'(t) * e^{t/2}
  int crit = count_roots(d, a, b);
  bool endpoint_case = false;
  if (crit == 0) {
    endpoint_case = true;
  } else if (crit == 1 && sgn(d.eval(a)) > 0 && sgn(d.eval(b)) < 0) {
    endpoint_case = true;  // single interior critical point, local maximum
  }
  if (endpoint_case) return end_min;

  // Subdivision fallback: certified branch-and-bound for the minimum.
  // Cell enclosure by the mean-value form h(m) + h'([lo,hi])*([lo,hi] - m),
  // whose width is O(w^2) near critical points, so the band of unprunable
  // cells stays O(1) per refinement level.
  auto horner = [](const RationalPoly& s, const Interval& t) {
    Interval acc(0L);
    const auto& cs = s.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * t + Interval(cs[i]);
    return acc;
  };
  struct Cell {
    Rational lo, hi;
  };
  std::vector<Cell> work{{a, b}};
  Interval best = end_min;  // encloses h at the best sample point so far
  double best_hi = best.hi_d();
  double settled_lower = std::numeric_limits<double>::infinity();
  double live_lower = end_min.lo_d();
  for (int round = 0; round < 60 && !work.empty(); ++round) {
    std::vector<Cell> next;
    double round_lower = std::numeric_limits<double>::infinity();
    for (const auto& cell : work) {
      Interval tcell(cell.lo, cell.hi);
      Rational mid = (cell.lo + cell.hi) / 2;
      Interval hm = h_at(mid);
      // h'(t) = d(t) e^{-t/2} with d = r' - r/2
      Interval hp = horner(d, tcell) * exp(-tcell * rat(1, 2));
      Interval hv = hm + hp * (tcell - Interval(mid));
      if (hm.hi_d() < best_hi) {
        best_hi = hm.hi_d();
        best = hm;
      }
      if (hv.lo_d() > best_hi) continue;  // cannot contain the minimum
      if (hv.width_d() > 1e-16 * (1.0 + std::abs(best_hi)) &&
          Rational(cell.hi - cell.lo).get_d() > 1e-14) {
        round_lower = std::min(round_lower, hv.lo_d());
        next.push_back({cell.lo, mid});
        next.push_back({mid, cell.hi});
      } else {
        settled_lower = std::min(settled_lower, hv.lo_d());
      }
    }
    work = std::move(next);
    live_lower = round_lower;
    if (work.empty()) break;
  }
  double lower = std::min(settled_lower, work.empty()
                                             ? std::numeric_limits<double>::infinity()
                                             : live_lower);
  lower = std::min(lower, best_hi);  // never empty: min <= sampled value
  // enclosure: [certified lower bound over all cells, certified upper bound]
  return Interval::hull(Interval(lower), best);
}

}  // namespace hyplp
