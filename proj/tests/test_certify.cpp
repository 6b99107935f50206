#include <catch2/catch_amalgamated.hpp>

#include <hyplp/certify.hpp>

#include <cmath>
#include <random>

using namespace hyplp;

namespace {

RationalPoly from_longs(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.push_back(Rational(c));
  return RationalPoly(std::move(v));
}

// Grid-scan oracle: true if p attains the forbidden strict sign somewhere on
// the sampled part of the domain.
bool scan_violates(const RationalPoly& p, const Rational& lo, const Rational& hi,
                   ClaimedSign claimed, int samples) {
  const int bad = (claimed == ClaimedSign::NonNegative) ? -1 : 1;
  for (int i = 0; i <= samples; ++i) {
    Rational t = lo + (hi - lo) * Rational(i) / Rational(samples);
    if (sgn(p.eval(t)) == bad) return true;
  }
  return false;
}

// Two-stage scan: coarse grid, then a fine local refinement around the best
// coarse point, so the result overestimates the true minimum by O(step^2)
// of the fine stage only.
double min_scan_oracle(const RationalPoly& r, double a, double b, int samples) {
  auto h = [&](double t) { return r.eval_double(t) * std::exp(-t / 2); };
  double best = std::numeric_limits<double>::infinity(), argbest = a;
  double step = (b - a) / samples;
  for (int i = 0; i <= samples; ++i) {
    double t = a + step * i;
    if (h(t) < best) {
      best = h(t);
      argbest = t;
    }
  }
  double lo = std::max(a, argbest - step), hi = std::min(b, argbest + step);
  for (int i = 0; i <= 4000; ++i) {
    double t = lo + (hi - lo) * i / 4000;
    best = std::min(best, h(t));
  }
  return best;
}

}  // namespace

TEST_CASE("certify_sign frozen examples") {
  SECTION("(u-2)^2 on [1,3], >=0, zeros {2}: Certified") {
    RationalPoly p = from_longs({4, -4, 1});
    auto cert = certify_sign(p, SignDomain::closed(Rational(1), Rational(3)),
                             ClaimedSign::NonNegative, {Rational(2)});
    CHECK(cert.certified);
    CHECK(cert.sturm_count == 1);
  }
  SECTION("u-2 on [1,3], >=0, no zeros: Rejected") {
    RationalPoly p = from_longs({-2, 1});
    auto cert = certify_sign(p, SignDomain::closed(Rational(1), Rational(3)),
                             ClaimedSign::NonNegative, {});
    CHECK_FALSE(cert.certified);
    CHECK_FALSE(cert.reason.empty());
  }
  SECTION("-(u-4)^2 (u-9)^2 on [2,inf), <=0, zeros {4,9}: Certified") {
    RationalPoly p = -(from_longs({-4, 1}) * from_longs({-4, 1}) *
                       from_longs({-9, 1}) * from_longs({-9, 1}));
    auto cert = certify_sign(p, SignDomain::ray_from(Rational(2)),
                             ClaimedSign::NonPositive,
                             {Rational(4), Rational(9)});
    CHECK(cert.certified);
    CHECK(cert.sturm_count == 2);
    REQUIRE(cert.cauchy_bound.has_value());
    CHECK(*cert.cauchy_bound >= 9);
    // sanity oracle on a finite window
    CHECK_FALSE(scan_violates(p, Rational(2), Rational(50),
                              ClaimedSign::NonPositive, 2000));
  }
  SECTION("imposed zero that is not a double root throws") {
    RationalPoly p = from_longs({-2, 1});  // simple root at 2
    CHECK_THROWS_AS(
        certify_sign(p, SignDomain::closed(Rational(1), Rational(3)),
                     ClaimedSign::NonNegative, {Rational(2)}),
        NotDoubleRoot);
    RationalPoly p3 = from_longs({1, 1});  // 2 is not a root at all
    CHECK_THROWS_AS(
        certify_sign(p3, SignDomain::closed(Rational(1), Rational(3)),
                     ClaimedSign::NonNegative, {Rational(2)}),
        NotDoubleRoot);
  }
  SECTION("odd multiplicity >= 3 is rejected, not certified") {
    RationalPoly p = from_longs({-2, 1});
    RationalPoly cubed = p * p * p;
    auto cert = certify_sign(cubed,
                             SignDomain::closed(Rational(1), Rational(3)),
                             ClaimedSign::NonNegative, {Rational(2)});
    CHECK_FALSE(cert.certified);
  }
  SECTION("extra uncounted root is rejected") {
    RationalPoly p =
        from_longs({4, -4, 1}) * from_longs({-5, 1});  // (u-2)^2 (u-5)
    auto cert = certify_sign(p, SignDomain::closed(Rational(1), Rational(6)),
                             ClaimedSign::NonNegative, {Rational(2)});
    CHECK_FALSE(cert.certified);
  }
  SECTION("left-endpoint root of odd multiplicity is tolerated by half-open count") {
    // q with a simple root exactly at the left endpoint, nonnegative to the
    // right of it: (u + 1/4) on [-1/4, inf).
    RationalPoly p(std::vector<Rational>{rat(1, 4), Rational(1)});
    auto cert = certify_sign(p, SignDomain::ray_from(rat(-1, 4)),
                             ClaimedSign::NonNegative, {});
    CHECK(cert.certified);
  }
  SECTION("negative beyond the right endpoint does not block a closed domain") {
    // (u-2)^2 (5-u): nonnegative on [1,4], negative after 5.
    RationalPoly p = from_longs({4, -4, 1}) * from_longs({5, -1});
    auto cert = certify_sign(p, SignDomain::closed(Rational(1), Rational(4)),
                             ClaimedSign::NonNegative, {Rational(2)});
    CHECK(cert.certified);
  }
}

TEST_CASE("certify_sign randomized soundness vs grid oracle") {
  std::mt19937 rng(9001);
  std::uniform_int_distribution<long> coef(-6, 6);
  std::uniform_int_distribution<int> degd(0, 6);
  std::uniform_int_distribution<int> domd(0, 2);
  int certified_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> cs;
    int d = degd(rng);
    for (int i = 0; i <= d; ++i) cs.push_back(Rational(coef(rng)));
    RationalPoly p(std::move(cs));
    if (p.is_zero()) continue;
    Rational a(coef(rng)), b = a + 1 + Rational(degd(rng));
    SignDomain dom;
    int which = domd(rng);
    if (which == 0)
      dom = SignDomain::closed(a, b);
    else if (which == 1)
      dom = SignDomain::ray_from(a);
    else
      dom = SignDomain::ray_to(b);
    for (ClaimedSign cl : {ClaimedSign::NonNegative, ClaimedSign::NonPositive}) {
      auto cert = certify_sign(p, dom, cl, {});
      if (!cert.certified) continue;
      ++certified_seen;
      Rational lo = dom.a ? *dom.a : a - 30;
      Rational hi = dom.b ? *dom.b : b + 30;
      CHECK_FALSE(scan_violates(p, lo, hi, cl, 500));
    }
  }
  CHECK(certified_seen > 20);  // the fuzz actually exercises the certifier
}

TEST_CASE("certify_ratio_sinh frozen examples") {
  SECTION("p = -1 on [2,3] with oracle B") {
    RationalPoly p = from_longs({-1});
    // ratio max <= sinh(3/2) e^{9/2} / 2; take the rounded-up enclosure end.
    Interval bmax = sinh(Interval(rat(3, 2))) * exp(Interval(rat(9, 2))) *
                    Interval(rat(1, 2));
    Rational B = bmax.upper_rational();
    CHECK(certify_ratio_sinh_auto(p, Rational(2), Rational(3), B));
    SECTION("monotone in B at a fixed order") {
      CHECK(certify_ratio_sinh(p, Rational(2), Rational(3), B, 16));
      CHECK(certify_ratio_sinh(p, Rational(2), Rational(3), B * 2, 16));
    }
  }
  SECTION("B = 0 is rejected") {
    RationalPoly p = from_longs({-1});
    CHECK_FALSE(certify_ratio_sinh_auto(p, Rational(2), Rational(3),
                                        Rational(0)));
  }
  SECTION("p = -(u-100)^2 on [2,3] with inflated grid oracle B") {
    RationalPoly p = -(from_longs({-100, 1}) * from_longs({-100, 1}));
    // oracle: max over a grid of sinh(s/2)/(-s p(s^2) e^{-s^2/2})
    double best = 0;
    for (int i = 0; i <= 4000; ++i) {
      double s = 2.0 + i / 4000.0;
      double f = p.eval_double(s * s) * std::exp(-s * s / 2);
      best = std::max(best, std::sinh(s / 2) / (-s * f));
    }
    Rational B = rationalize(best * 1.01, 1000000000L);
    CHECK(certify_ratio_sinh_auto(p, Rational(2), Rational(3), B));
    // 10% below the oracle maximum must be rejected
    Rational Blow = rationalize(best * 0.9, 1000000000L);
    CHECK_FALSE(certify_ratio_sinh_auto(p, Rational(2), Rational(3), Blow));
  }
  SECTION("preconditions") {
    RationalPoly p = from_longs({-1});
    CHECK_THROWS_AS(
        certify_ratio_sinh(p, Rational(0), Rational(1), Rational(1), 12),
        DomainError);
    CHECK_FALSE(certify_ratio_sinh(p, Rational(2), Rational(3), Rational(-1), 12));
  }
}

TEST_CASE("min_exp_poly frozen examples") {
  SECTION("r = 1 on [0,1]: minimum e^{-1/2} at t = 1") {
    Interval m = min_exp_poly(from_longs({1}), Rational(0), Rational(1));
    Interval target = exp(Interval(rat(-1, 2)));
    CHECK(m.intersects(target));
    CHECK(m.width_d() < 1e-20);
  }
  SECTION("r = t on [0,1]: minimum 0 at t = 0") {
    Interval m = min_exp_poly(from_longs({0, 1}), Rational(0), Rational(1));
    CHECK(m.contains(Rational(0)));
    CHECK(m.width_d() < 1e-20);
  }
  SECTION("r = 1 + t^2 on [0,6]: subdivision fallback vs scan oracle") {
    RationalPoly r = from_longs({1, 0, 1});
    Interval m = min_exp_poly(r, Rational(0), Rational(6));
    double oracle = min_scan_oracle(r, 0.0, 6.0, 100000);
    CHECK(m.lo_d() <= oracle + 1e-12);
    CHECK(m.hi_d() >= oracle - 1e-12);
    CHECK(m.width_d() < 1e-6);
  }
}

TEST_CASE("min_exp_poly randomized containment and split consistency") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::uniform_int_distribution<int> degd(0, 8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> cs;
    int d = degd(rng);
    for (int i = 0; i <= d; ++i) cs.push_back(Rational(coef(rng)));
    RationalPoly r(std::move(cs));
    if (r.is_zero()) r = from_longs({1});
    Rational a(coef(rng)), b = a + 2;
    Interval m = min_exp_poly(r, a, b);
    double oracle = min_scan_oracle(r, a.get_d(), b.get_d(), 3000);
    double slack = 1e-6 * (1.0 + std::abs(oracle));
    CHECK(m.lo_d() <= oracle + slack);
    CHECK(m.hi_d() >= oracle - slack);
    // Splitting the interval must agree: min over [a,b] equals elementwise
    // min of the halves, up to enclosure overlap.
    Rational mid = (a + b) / 2;
    Interval halves = Interval::min(min_exp_poly(r, a, mid),
                                    min_exp_poly(r, mid, b));
    CHECK(m.intersects(halves));
  }
}
