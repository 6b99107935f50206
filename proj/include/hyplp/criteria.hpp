// Theorem verifiers: each consumes a Gaussian-polynomial pair plus instance
// data, checks every hypothesis with rigorous certificates, and emits a
// Certificate carrying a certified bound.
//
// All trace-formula comparisons are certified in their STRICT form, so a
// one-sided enclosure comparison suffices.
#pragma once

#include <hyplp/certify.hpp>
#include <hyplp/pair.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace hyplp {

struct DenominatorNotPositive : std::runtime_error {
  explicit DenominatorNotPositive(const std::string& what)
      : std::runtime_error(what) {}
};
struct CoverageGap : std::runtime_error {
  explicit CoverageGap(const std::string& what) : std::runtime_error(what) {}
};

enum class InvariantKind {
  Systole,
  Kissing,
  KissingGlobal,
  Lambda1,
  Multiplicity,
  NSmall,
  Ramanujan,
};

inline const char* invariant_name(InvariantKind k) {
  switch (k) {
    case InvariantKind::Systole: return "systole";
    case InvariantKind::Kissing: return "kissing";
    case InvariantKind::KissingGlobal: return "kissing_global";
    case InvariantKind::Lambda1: return "lambda1";
    case InvariantKind::Multiplicity: return "multiplicity";
    case InvariantKind::NSmall: return "nsmall";
    case InvariantKind::Ramanujan: return "ramanujan";
  }
  return "?";
}

struct SubCertificate {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Certificate {
  InvariantKind invariant{};
  int genus = 0;  // 0 = genus-free statement
  bool certified = false;
  std::string reason;  // first failing hypothesis when rejected
  std::vector<SubCertificate> hypotheses;
  Interval bound;                  // certified enclosure of the bound
  std::optional<Rational> target;  // principal target (R, L, ...)
  std::optional<Rational> segment_lo, segment_hi;  // kissing / multiplicity
  std::optional<Interval> genus_free_coefficient;  // nsmall coefficient
  bool conditional = false;  // depends on a non-certified external input
};

// Known double-zero locations (in the u = x^2 variable) of p and q, used as
// imposed zeros for the sign certificates. Entries outside a certificate's
// domain are filtered before use.
struct ZeroHints {
  std::vector<Rational> p_zeros;
  std::vector<Rational> q_zeros;
};

namespace detail {

inline std::vector<Rational> hints_in(const std::vector<Rational>& zs,
                                      const SignDomain& dom) {
  std::vector<Rational> out;
  for (const auto& z : zs)
    if (dom.contains(z)) out.push_back(z);
  return out;
}

inline bool record(Certificate& cert, const std::string& name, bool ok,
                   std::string detail) {
  cert.hypotheses.push_back({name, ok, std::move(detail)});
  if (!ok && cert.reason.empty()) cert.reason = name;
  return ok;
}

inline bool record_sign(Certificate& cert, const std::string& name,
                        const RationalPoly& poly, const SignDomain& dom,
                        ClaimedSign claimed, const std::vector<Rational>& hints) {
  try {
    SignCertificate sc = certify_sign(poly, dom, claimed, hints_in(hints, dom));
    return record(cert, name, sc.certified, sc.certified ? "" : sc.reason);
  } catch (const NotDoubleRoot& e) {
    return record(cert, name, false, e.what());
  }
}

inline void require_genus(int genus) {
  if (genus < 2) throw DomainError("hyperbolic surfaces require genus >= 2");
}

// Strict enclosure comparison a < b.
inline bool strictly_less(const Interval& a, const Interval& b) {
  return a.certainly_less(b);
}

}  // namespace detail

// Certified ==> sys(M) <= R for every closed hyperbolic surface of genus g.
// Hypotheses: (i) p <= 0 on [R^2, inf); (ii) q >= 0 on [-1/4, inf) (covers
// both the real line and the imaginary segment in the u variable);
// (iii) fhat(i/2) > 2(g-1) * trace integral, strictly.
inline Certificate verify_systole(const GaussianPair& pair, int genus,
                                  const Rational& R, const Rational& b_split,
                                  const ZeroHints& hints = {},
                                  double tol = 1e-12) {
  detail::require_genus(genus);
  if (!(R > 0)) throw DomainError("verify_systole: R must be positive");
  Certificate cert;
  cert.invariant = InvariantKind::Systole;
  cert.genus = genus;
  cert.target = R;
  cert.bound = Interval(R);

  if (!detail::record_sign(cert, "f_nonpositive_beyond_R", pair.p,
                           SignDomain::ray_from(R * R),
                           ClaimedSign::NonPositive, hints.p_zeros))
    return cert;
  if (!detail::record_sign(cert, "fhat_nonnegative", pair.q,
                           SignDomain::ray_from(rat(-1, 4)),
                           ClaimedSign::NonNegative, hints.q_zeros))
    return cert;
  // (ii) gives q >= 0 on [b^2, inf), the tail certificate for the trace
  // integral.
  QuadResult tr =
      trace_integral(pair, b_split, tol, TailSign::NonNegative);
  Interval lhs = eval_fhat_i_half(pair).enclose();
  Interval rhs = Interval(2L * (genus - 1)) * tr.value;
  bool ok = tr.tol_reached && detail::strictly_less(rhs, lhs);
  if (!detail::record(cert, "trace_inequality", ok,
                      ok ? "" : "fhat(i/2) not strictly above the trace term"))
    return cert;
  cert.certified = true;
  return cert;
}

// Certified ==> lambda_1(M) <= L in genus g.
// Hypotheses: (i) p >= 0 on [0, inf); (ii) q <= 0 on [L - 1/4, inf);
// (iii) fhat(i/2) < 2(g-1) * trace integral, strictly.
inline Certificate verify_lambda(const GaussianPair& pair, int genus,
                                 const Rational& L, const Rational& b_split,
                                 const ZeroHints& hints = {},
                                 double tol = 1e-12) {
  detail::require_genus(genus);
  if (!(L > rat(1, 4)))
    throw DomainError("verify_lambda: requires L > 1/4");
  Certificate cert;
  cert.invariant = InvariantKind::Lambda1;
  cert.genus = genus;
  cert.target = L;
  cert.bound = Interval(L);

  if (!detail::record_sign(cert, "f_nonnegative", pair.p,
                           SignDomain::ray_from(Rational(0)),
                           ClaimedSign::NonNegative, hints.p_zeros))
    return cert;
  if (!detail::record_sign(cert, "fhat_nonpositive_beyond_L", pair.q,
                           SignDomain::ray_from(L - rat(1, 4)),
                           ClaimedSign::NonPositive, hints.q_zeros))
    return cert;
  // the tail sign certificate needs [b^2, inf) inside [L - 1/4, inf)
  if (!detail::record(cert, "tail_domain", b_split * b_split >= L - rat(1, 4),
                      "split point b with b^2 < L - 1/4"))
    return cert;
  QuadResult tr =
      trace_integral(pair, b_split, tol, TailSign::NonPositive);
  Interval lhs = eval_fhat_i_half(pair).enclose();
  Interval rhs = Interval(2L * (genus - 1)) * tr.value;
  bool ok = tr.tol_reached && detail::strictly_less(lhs, rhs);
  if (!detail::record(cert, "trace_inequality", ok,
                      ok ? "" : "fhat(i/2) not strictly below the trace term"))
    return cert;
  cert.certified = true;
  return cert;
}

// Certified ==> every genus-g surface with sys(M) in [s_lo, s_hi] has
// kiss(M) <= 4 sqrt(2 pi) (g-1) B * trace integral (ORIENTED count).
// Hypotheses: (i) q >= 0 on [-1/4, inf); (ii) p <= 0 on [s_lo^2, inf) with
// f(s_lo) < 0 strictly; (iii) sinh(s/2) <= B * (-s f(s)) on [s_lo, s_hi].
inline Certificate verify_kissing(const GaussianPair& pair, int genus,
                                  const Rational& s_lo, const Rational& s_hi,
                                  const Rational& B, const Rational& b_split,
                                  const ZeroHints& hints = {},
                                  double tol = 1e-12) {
  detail::require_genus(genus);
  if (!(Rational(0) < s_lo && s_lo <= s_hi))
    throw DomainError("verify_kissing: need 0 < s_lo <= s_hi");
  Certificate cert;
  cert.invariant = InvariantKind::Kissing;
  cert.genus = genus;
  cert.segment_lo = s_lo;
  cert.segment_hi = s_hi;

  if (!detail::record_sign(cert, "fhat_nonnegative", pair.q,
                           SignDomain::ray_from(rat(-1, 4)),
                           ClaimedSign::NonNegative, hints.q_zeros))
    return cert;
  if (!detail::record_sign(cert, "f_nonpositive_beyond_s_lo", pair.p,
                           SignDomain::ray_from(s_lo * s_lo),
                           ClaimedSign::NonPositive, hints.p_zeros))
    return cert;
  if (!detail::record(cert, "f_strictly_negative_at_s_lo",
                      sgn(pair.p.eval(s_lo * s_lo)) < 0,
                      "f(s_lo) = 0: strictness witness fails"))
    return cert;
  bool ratio_ok = certify_ratio_sinh_auto(pair.p, s_lo, s_hi, B);
  if (!detail::record(cert, "sinh_ratio_bound", ratio_ok,
                      "B rejected by the sinh-ratio certificate"))
    return cert;
  QuadResult tr =
      trace_integral(pair, b_split, tol, TailSign::NonNegative);
  if (!detail::record(cert, "trace_enclosure", tr.tol_reached,
                      "trace integral tolerance not reached"))
    return cert;
  cert.bound = Interval(4L) * sqrt(Interval(2L) * Interval::pi()) *
               Interval(Rational(genus - 1)) * Interval(B) * tr.value;
  cert.certified = true;
  return cert;
}

namespace detail {

// 2 arcsinh(1), the collar-lemma systole threshold.
inline Interval collar_threshold() { return Interval(2L) * asinh(Interval(1L)); }

}  // namespace detail

// Assembles per-segment kissing certificates into a global genus-g bound:
//   max( 6(g-1)   [collar bound, sys <= 2 arcsinh(1)],
//        segment bounds covering [2 arcsinh(1), min(6, sys_bound)],
//        monotone extension bound at s = sys_bound when sys_bound > 6 ).
// The monotonicity of the kissing profile is applied only on [6, inf).
inline Certificate kissing_global(int genus,
                                  const std::vector<Certificate>& segment_certs,
                                  const Certificate& sys_cert) {
  detail::require_genus(genus);
  Certificate cert;
  cert.invariant = InvariantKind::KissingGlobal;
  cert.genus = genus;

  if (!(sys_cert.certified && sys_cert.invariant == InvariantKind::Systole &&
        sys_cert.genus == genus && sys_cert.target))
    throw DomainError("kissing_global: needs a certified systole bound for "
                      "this genus");
  const Rational sys_bound = *sys_cert.target;
  const Rational cover_hi = std::min(Rational(6), sys_bound);

  std::vector<const Certificate*> segs;
  for (const auto& c : segment_certs) {
    if (!(c.certified && c.invariant == InvariantKind::Kissing &&
          c.genus == genus && c.segment_lo && c.segment_hi))
      throw DomainError("kissing_global: every segment must be a certified "
                        "kissing certificate for this genus");
    segs.push_back(&c);
  }
  std::sort(segs.begin(), segs.end(), [](const Certificate* a,
                                         const Certificate* b) {
    return *a->segment_lo < *b->segment_lo;
  });

  // coverage of [2 arcsinh(1), cover_hi]
  Interval thr = detail::collar_threshold();
  if (segs.empty() || !Interval(*segs.front()->segment_lo).certainly_less(thr))
    throw CoverageGap("uncovered: [2 arcsinh(1), " +
                      (segs.empty() ? std::string("cover end")
                                    : to_string(*segs.front()->segment_lo)) +
                      ")");
  // continuity is required only up to the cover target min(6, sys_bound);
  // segments beyond it (e.g. the extension certificate) may be disjoint.
  Rational covered = *segs.front()->segment_hi;
  Interval seg_max = segs.front()->bound;
  for (std::size_t i = 1; i < segs.size(); ++i) {
    if (covered < cover_hi && *segs[i]->segment_lo > covered)
      throw CoverageGap("uncovered: (" + to_string(covered) + ", " +
                        to_string(*segs[i]->segment_lo) + ")");
    if (*segs[i]->segment_hi > covered && *segs[i]->segment_lo <= covered)
      covered = *segs[i]->segment_hi;
    seg_max = Interval::max(seg_max, segs[i]->bound);
  }

  Interval global = Interval::max(Interval(Rational(6L * (genus - 1))), seg_max);

  if (sys_bound > 6) {
    // the segments must reach 6; the stretch [6, sys_bound] is handled by the
    // monotone extension, which is valid only from 6 upward.
    if (covered < 6)
      throw CoverageGap("uncovered: (" + to_string(covered) +
                        ", 6) — monotone extension applies only on [6, inf)");
    const Certificate* ext = nullptr;
    for (const auto* s : segs)
      if (*s->segment_lo <= sys_bound && sys_bound <= *s->segment_hi) ext = s;
    if (!ext)
      throw CoverageGap("no certificate at s = sys_bound = " +
                        to_string(sys_bound) +
                        " for the monotone extension on [6, sys_bound]");
    global = Interval::max(global, ext->bound);
    detail::record(cert, "monotone_extension", true, "");
  } else {
    if (covered < cover_hi)
      throw CoverageGap("uncovered: (" + to_string(covered) + ", " +
                        to_string(cover_hi) + ")");
  }

  detail::record(cert, "collar_bound", true, "");
  detail::record(cert, "segment_cover", true, "");
  detail::record(cert, "systole_input", true, "");
  cert.bound = global;
  cert.certified = true;
  return cert;
}

// Certified ==> every genus-g surface with lambda_1(M) in [lam_lo, lam_hi]
// has m_1(M) <= upper(bound).
// Hypotheses: (i) p >= 0 on [0, inf); (ii) q <= 0 on [lam_lo - 1/4, inf);
// the denominator -max fhat over the interval must be certified positive.
inline Certificate verify_multiplicity(const GaussianPair& pair, int genus,
                                       const Rational& lam_lo,
                                       const Rational& lam_hi,
                                       const Rational& b_split,
                                       const ZeroHints& hints = {},
                                       double tol = 1e-12) {
  detail::require_genus(genus);
  if (!(rat(1, 4) < lam_lo && lam_lo <= lam_hi))
    throw DomainError(
        "verify_multiplicity: requires 1/4 < lam_lo <= lam_hi (the criterion "
        "cannot see below 1/4)");
  Certificate cert;
  cert.invariant = InvariantKind::Multiplicity;
  cert.genus = genus;
  cert.segment_lo = lam_lo;
  cert.segment_hi = lam_hi;

  if (!detail::record_sign(cert, "f_nonnegative", pair.p,
                           SignDomain::ray_from(Rational(0)),
                           ClaimedSign::NonNegative, hints.p_zeros))
    return cert;
  if (!detail::record_sign(cert, "fhat_nonpositive_beyond_lam_lo", pair.q,
                           SignDomain::ray_from(lam_lo - rat(1, 4)),
                           ClaimedSign::NonPositive, hints.q_zeros))
    return cert;
  if (!detail::record(cert, "tail_domain",
                      b_split * b_split >= lam_lo - rat(1, 4),
                      "split point b with b^2 < lam_lo - 1/4"))
    return cert;
  QuadResult tr =
      trace_integral(pair, b_split, tol, TailSign::NonPositive);
  if (!detail::record(cert, "trace_enclosure", tr.tol_reached,
                      "trace integral tolerance not reached"))
    return cert;
  // denominator: min over [lam_lo - 1/4, lam_hi - 1/4] of -q(t) e^{-t/2}
  Interval den = min_exp_poly(-pair.q, lam_lo - rat(1, 4), lam_hi - rat(1, 4));
  if (!den.certainly_positive())
    throw DenominatorNotPositive(
        "the interval maximum of fhat is not certified < 0");
  detail::record(cert, "denominator_positive", true, "");
  Interval num = eval_fhat_i_half(pair).enclose() -
                 Interval(2L * (genus - 1)) * tr.value;
  cert.bound = num / den;
  cert.certified = true;
  return cert;
}

// Low-lambda_1 multiplicity regimes stitched around the LP certificates:
//   lambda_1 in [0, 1/4]        -> 2g - 3,
//   lambda_1 in (1/4, a_g]      -> 2g - 1, with a_g bounded below through the
//   first Dirichlet eigenvalue of a disk of radius R_g = 2 arcsinh(sqrt(g-1)):
//   lambda_0(D_R) >= 1/4 + pi^2/R^2 - 4 pi^2/R^3 (clamped at 1/4 when the
//   cubic correction dominates; then the 2g-1 band is empty and the literature
//   fallback 2g+3 applies to the unstitched region).
struct PiecewiseMultiplicity {
  int genus = 0;
  Interval disk_radius;          // R_g = 2 arcsinh(sqrt(g-1))
  Interval a_g;                  // Dirichlet lower bound at R_g (may be < 1/4)
  Rational a_g_lower;            // clamped certified lower bound, >= 1/4
  bool vacuous = false;          // a_g_lower == 1/4: the 2g-1 band is empty
  Rational bound_up_to_quarter;  // 2g - 3 on [0, 1/4]
  Rational bound_low_band;       // 2g - 1 on (1/4, a_g_lower]
  Rational fallback_bound;       // 2g + 3 when stitching is unavailable
};

namespace detail {

// lambda_0(D_R) >= 1/4 + pi^2/R^2 - 4 pi^2/R^3, as an interval in R.
inline Interval savo_bound(const Interval& R) {
  Interval pi2 = Interval::pi() * Interval::pi();
  return Interval(rat(1, 4)) + pi2 / (R * R) -
         Interval(4L) * pi2 / (R * R * R);
}

}  // namespace detail

inline PiecewiseMultiplicity multiplicity_piecewise(int genus) {
  detail::require_genus(genus);
  PiecewiseMultiplicity out;
  out.genus = genus;
  out.disk_radius =
      Interval(2L) * asinh(sqrt(Interval(Rational(genus - 1))));
  out.a_g = detail::savo_bound(out.disk_radius);
  Rational lo = out.a_g.lower_rational();
  if (lo <= rat(1, 4)) {
    out.a_g_lower = rat(1, 4);
    out.vacuous = true;
  } else {
    out.a_g_lower = lo;
  }
  out.bound_up_to_quarter = Rational(2L * genus - 3);
  out.bound_low_band = Rational(2L * genus - 1);
  out.fallback_bound = Rational(2L * genus + 3);
  return out;
}

// Monotone sharpening of the disk bound: the disk of radius R' >= R_g
// contains the one of radius R_g, so lambda_0(D_{R_g}) >= lambda_0(D_{R'})
// >= the Dirichlet lower bound at R'. The bound R -> 1/4 + pi^2/R^2 -
// 4 pi^2/R^3 is maximized at R = 6, so evaluating at R' = max(R_g, 6) is
// always valid and strictly better for small genus.
inline Interval multiplicity_disk_bound_monotone(int genus) {
  detail::require_genus(genus);
  Interval Rg = Interval(2L) * asinh(sqrt(Interval(Rational(genus - 1))));
  Interval six(6L);
  Interval Rp = Interval::max(Rg, six);
  // max is elementwise; for the bound we need a single valid radius >= R_g,
  // so fall back to R_g itself when R_g may exceed 6.
  if (Rg.certainly_less(six)) Rp = six;
  else Rp = Rg;
  return detail::savo_bound(Rp);
}

// Stitches the piecewise regimes with LP multiplicity certificates into a
// global bound valid for all genus-g surfaces with lambda_1 <= lambda_upper.
// The LP segments must cover (band_top, lambda_upper] without gaps, where
// band_top is the certified top of the 2g-1 band (or 1/4 when vacuous).
inline Rational stitch_multiplicity(const PiecewiseMultiplicity& piecewise,
                                    const Rational& band_top,
                                    const std::vector<Certificate>& lp_segments,
                                    const Rational& lambda_upper) {
  if (band_top < rat(1, 4))
    throw DomainError("stitch_multiplicity: band_top below 1/4");
  Rational best = std::max(piecewise.bound_up_to_quarter,
                           band_top > rat(1, 4) ? piecewise.bound_low_band
                                                : piecewise.bound_up_to_quarter);
  std::vector<const Certificate*> segs;
  for (const auto& c : lp_segments) {
    if (!(c.certified && c.invariant == InvariantKind::Multiplicity &&
          c.genus == piecewise.genus && c.segment_lo && c.segment_hi))
      throw DomainError("stitch_multiplicity: invalid LP segment certificate");
    segs.push_back(&c);
  }
  std::sort(segs.begin(), segs.end(), [](const Certificate* a,
                                         const Certificate* b) {
    return *a->segment_lo < *b->segment_lo;
  });
  Rational covered = band_top;
  Interval lp_max(Rational(0));
  for (const auto* s : segs) {
    if (*s->segment_lo > covered)
      throw CoverageGap("uncovered: (" + to_string(covered) + ", " +
                        to_string(*s->segment_lo) + ")");
    covered = std::max(covered, *s->segment_hi);
    lp_max = Interval::max(lp_max, s->bound);
  }
  if (covered < lambda_upper)
    throw CoverageGap("uncovered: (" + to_string(covered) + ", " +
                      to_string(lambda_upper) + ")");
  // ceil-free: the certified bound is the rational upper enclosure end
  return std::max(best, lp_max.upper_rational());
}

// Certified ==> every genus-g surface with sys(M) >= R satisfies
//   N_{[0,L]}(M) <= 2(g-1) * trace + 1 - fhat(i/2),
// reported both as the genus-free coefficient (the trace enclosure, per
// 2g - 2) and, when a genus is supplied, the full genus-specific bound.
// Hypotheses: (i) p <= 0 on [R^2, inf); (ii) q >= 0 on [0, inf);
// (iii) q(u) e^{-u/2} >= 1 on [-1/4, L - 1/4].
inline Certificate verify_nsmall(const GaussianPair& pair,
                                 std::optional<int> genus, const Rational& R,
                                 const Rational& L, const Rational& b_split,
                                 const ZeroHints& hints = {},
                                 double tol = 1e-12) {
  if (genus) detail::require_genus(*genus);
  if (!(L > 0)) throw DomainError("verify_nsmall: L must be positive");
  if (!(R > 0)) throw DomainError("verify_nsmall: R must be positive");
  Certificate cert;
  cert.invariant = InvariantKind::NSmall;
  cert.genus = genus ? *genus : 0;
  cert.target = R;

  if (!detail::record_sign(cert, "f_nonpositive_beyond_R", pair.p,
                           SignDomain::ray_from(R * R),
                           ClaimedSign::NonPositive, hints.p_zeros))
    return cert;
  if (!detail::record_sign(cert, "fhat_nonnegative_real", pair.q,
                           SignDomain::ray_from(Rational(0)),
                           ClaimedSign::NonNegative, hints.q_zeros))
    return cert;
  Interval m = min_exp_poly(pair.q, rat(-1, 4), L - rat(1, 4));
  bool above_one = m.lower_rational() >= 1;
  if (!detail::record(cert, "fhat_at_least_one_low_spectrum", above_one,
                      "q(u) e^{-u/2} not certified >= 1 on [-1/4, L-1/4]"))
    return cert;
  QuadResult tr =
      trace_integral(pair, b_split, tol, TailSign::NonNegative);
  if (!detail::record(cert, "trace_enclosure", tr.tol_reached,
                      "trace integral tolerance not reached"))
    return cert;
  cert.genus_free_coefficient = tr.value;
  if (genus) {
    cert.bound = Interval(2L * (*genus - 1)) * tr.value + Interval(1L) -
                 eval_fhat_i_half(pair).enclose();
  } else {
    cert.bound = tr.value;
  }
  cert.certified = true;
  return cert;
}

// Certified ==> every genus-g surface with sys(M) >= R has N_{[0,L]}(M) < 2,
// hence lambda_1(M) > L. Uses the FULL bound including 1 - fhat(i/2).
inline Certificate verify_ramanujan(const GaussianPair& pair, int genus,
                                    const Rational& R, const Rational& L,
                                    const Rational& b_split,
                                    const ZeroHints& hints = {},
                                    double tol = 1e-12) {
  detail::require_genus(genus);
  Certificate nsm =
      verify_nsmall(pair, genus, R, L, b_split, hints, tol);
  Certificate cert;
  cert.invariant = InvariantKind::Ramanujan;
  cert.genus = genus;
  cert.target = R;
  cert.segment_hi = L;  // certified spectral-gap level
  cert.hypotheses = nsm.hypotheses;
  cert.reason = nsm.reason;
  if (!nsm.certified) return cert;
  cert.bound = nsm.bound;
  bool below_two = detail::strictly_less(nsm.bound, Interval(2L));
  if (!detail::record(cert, "count_below_two", below_two,
                      "N_{[0,L]} bound not strictly below 2"))
    return cert;
  cert.certified = true;
  return cert;
}

}  // namespace hyplp
