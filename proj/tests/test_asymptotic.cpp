#include <catch2/catch_amalgamated.hpp>

#include <hyplp/asymptotic.hpp>

using namespace hyplp;

namespace {

// 50-digit oracle values for the exact device decompositions
// (independent high-precision quadrature, test-only).
const char* kSystoleUpper =
    "2.4089651107943261672688437352310838107627399883934";
const char* kLemmaP1 =
    "-0.000011781252618225916748066827175635810694424369253444";
const char* kLemmaP2 =
    "-0.046496122545564818452417099908545867345314623736111";
const char* kLemmaP3 =
    "-0.090742711368448309760062100007484543357217939649";
const char* kKissLemma =
    "-0.27662238060893015232073737144027660050396287617353";
const char* kKissConst =
    "2.9219009228522889009493306408640017059411108009437";
const char* kLambdaMid =
    "4.2071860015860452139648899549541429784044293045779";

Rational oracle(const char* digits) { return parse_rational(digits); }

// pinned published constants, with the agreed 1e-9 acceptance slack
const double kSlack = 1e-9;

}  // namespace

TEST_CASE("const_systole") {
  SECTION("defaults hit the pinned constant") {
    Interval k = const_systole();
    CHECK(k.hi_d() <= 2.40896511079437 + kSlack);
    CHECK(k.hi_d() < 2.409);
    CHECK(k.contains(oracle(kSystoleUpper)));
    CHECK(k.lo_d() > 2.3);
  }
  SECTION("parameter domain errors") {
    SystoleConstSpec bad;
    bad.c = rat(1, 1);  // c <= 1 + b^2/4
    CHECK_THROWS_AS(const_systole(bad), ParameterDomainError);
    SystoleConstSpec half;
    half.alpha = rat(1, 2);  // tail denominator 2a-1 vanishes
    CHECK_THROWS_AS(const_systole(half), ParameterDomainError);
    SystoleConstSpec smallB;
    smallB.B = rat(1, 2);  // monotonicity guard needs B >= 1
    CHECK_THROWS_AS(const_systole(smallB), ParameterDomainError);
  }
  SECTION("halving B widens but stays consistent") {
    SystoleConstSpec s5;
    s5.B = Rational(5);
    Interval k5 = const_systole(s5);
    Interval k10 = const_systole();
    CHECK(k5.intersects(k10));
    CHECK(k5.hi_d() >= k10.hi_d() - 1e-12);
  }
}

TEST_CASE("lemma_negative") {
  auto parts = lemma_negative();
  SECTION("pinned constants") {
    CHECK(parts[0].hi_d() <= -0.0000117812526025449 + kSlack);
    CHECK(parts[1].hi_d() <= -0.0464961225743898 + kSlack);
    CHECK(parts[2].hi_d() <= -0.0907427113682867 + kSlack);
    for (const auto& p : parts) CHECK(p.certainly_negative());
  }
  SECTION("device oracles are contained") {
    CHECK(parts[0].contains(oracle(kLemmaP1)));
    // parts 2 and 3 include one-sided sliver/tail allowances; the oracle of
    // the two-sided pieces must lie within the enclosure
    CHECK(parts[1].lo_d() <= oracle(kLemmaP2).get_d());
    CHECK(parts[1].hi_d() >= oracle(kLemmaP2).get_d() - 1e-15);
    CHECK(parts[2].lo_d() <= oracle(kLemmaP3).get_d());
    CHECK(parts[2].hi_d() >= oracle(kLemmaP3).get_d() - 1e-15);
  }
}

TEST_CASE("kissing companion lemma") {
  SECTION("pinned constant") {
    Interval i = kissing_lemma_negative();
    CHECK(i.hi_d() <= -0.276593809735452 + kSlack);
    CHECK(i.certainly_negative());
    CHECK(i.lo_d() <= oracle(kKissLemma).get_d());
    CHECK(i.hi_d() >= oracle(kKissLemma).get_d() - 1e-15);
  }
  SECTION("kappa at or beyond sqrt(c) is trivial") {
    KissingConstSpec s;
    Interval t = kissing_lemma_trivial(s, rat(3, 2));  // (3/2)^2 > c
    CHECK(t.hi_d() <= 0.0);
    CHECK_THROWS_AS(kissing_lemma_trivial(s, rat(1, 2)),
                    ParameterDomainError);
  }
}

TEST_CASE("const_kissing") {
  Interval k = const_kissing();
  CHECK(k.hi_d() <= 2.92190512955185 + kSlack);
  CHECK(k.hi_d() < 2.922);
  CHECK(k.contains(oracle(kKissConst)));
  CHECK(k.lo_d() > 2.8);

  KissingConstSpec bad;
  bad.alpha = rat(1, 2);
  CHECK_THROWS_AS(const_kissing(bad), ParameterDomainError);
}

TEST_CASE("const_lambda") {
  Interval l = const_lambda();
  SECTION("pinned constant and containment") {
    CHECK(l.lo_d() >= 4.20718596495552 - kSlack);
    CHECK(l.lo_d() >= 4.20718);
    CHECK(l.contains(oracle(kLambdaMid)));
  }
  SECTION("monotone in the splits") {
    LambdaConstSpec s50;
    s50.B = Rational(50);
    Interval l50 = const_lambda(s50);
    CHECK(l50.lo_d() >= 4.2);
    CHECK(l50.lo_d() <= l.lo_d() + 1e-15);

    LambdaConstSpec wideA;
    wideA.A = rat(1, 100);
    Interval lA = const_lambda(wideA);
    CHECK(lA.lo_d() <= l.lo_d() + 1e-15);
  }
  SECTION("domain guard") {
    LambdaConstSpec bad;
    bad.A = rat(1, 10);  // head loss bound requires A <= 1/100
    CHECK_THROWS_AS(const_lambda(bad), ParameterDomainError);
  }
}

TEST_CASE("nsmall_moments") {
  SECTION("exact symbolic identities") {
    auto m1 = nsmall_moments(Rational(1));
    CHECK(m1.first == Rational(8));
    CHECK_FALSE(m1.second.has_value());

    auto m32 = nsmall_moments(rat(3, 2));
    CHECK(m32.first == Rational(9));
    REQUIRE(m32.second.has_value());
    CHECK(*m32.second == PiPower{Rational(12), 1});

    auto m2 = nsmall_moments(Rational(2));
    CHECK(m2.first == rat(32, 3));
    REQUIRE(m2.second.has_value());
    // Gamma(1)^4 / Gamma(4) = 1/6; 2^10 * 4 * 1 / 5 / 6 / pi
    CHECK(m2.second->pi_exponent == -1);
  }
  SECTION("assembled final constants") {
    CHECK(nsmall_final_first() == PiPower{Rational(16), 0});
    CHECK(nsmall_final_second() == PiPower{Rational(24), 2});
    Interval f = nsmall_final_second().enclose();
    CHECK(f.lo_d() > 236.8);  // 24 pi^2 ~ 236.87
    CHECK(f.hi_d() < 236.9);
  }
  SECTION("first moment minimized at alpha = 1") {
    for (long n : {3L, 4L, 5L, 6L}) {
      CHECK(nsmall_moments(rat(n, 2)).first > Rational(8));
    }
    CHECK(nsmall_moments(rat(3, 4)).first > Rational(8));
  }
  SECTION("domain error below 1/2") {
    CHECK_THROWS_AS(nsmall_moments(rat(1, 2)), DomainError);
    CHECK_THROWS_AS(nsmall_moments(rat(1, 4)), DomainError);
  }
}
