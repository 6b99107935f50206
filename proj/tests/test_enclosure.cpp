#include <catch2/catch_amalgamated.hpp>

#include <hyplp/quad.hpp>

#include <random>

using namespace hyplp;

namespace {

// 50-digit oracle values (independent high-precision computations).
const char* kTanh1 =
    "0.76159415595576488811945828260479359041276859725793";
const char* kInvSqrt2 =
    "0.70710678118654752440084436210484903928483593768847";
// int_0^10 x tanh(pi x) e^{-x^2/2} dx
const char* kTrace10 =
    "0.96156924049453440722343198373300257445550634193566";
// int_0^infinity x tanh(pi x) e^{-x^2/2} dx
const char* kTraceInf =
    "0.96156924049453440722362485871779896623380807621719";
// int_{1e-4}^{1e4} (1 - cos x) / x^{2.184} dx  (by-parts remainder < 2e-19)
const char* kKissIntegrand =
    "1.4999032508795808455709166703324227380931367818533";

Rational oracle(const char* digits) { return parse_rational(digits); }

}  // namespace

TEST_CASE("interval arithmetic basics") {
  Interval a(Rational(1), Rational(2)), b(Rational(3), Rational(4));
  Interval s = a + b;
  CHECK(s.contains(Rational(4)));
  CHECK(s.contains(Rational(6)));
  CHECK(s.width_d() <= 2.0);

  Interval u(Rational(-1), Rational(1));
  Interval p = u * u;
  CHECK(p.contains(Rational(-1)));
  CHECK(p.contains(Rational(1)));
  CHECK_FALSE(p.contains(rat(-101, 100)));

  CHECK_THROWS_AS(a / u, DivisionByZeroInterval);
}

TEST_CASE("elementary enclosures vs oracles") {
  Interval e0 = exp(Interval(0L));
  CHECK(e0.contains(Rational(1)));
  CHECK(e0.width_d() < 1e-30);

  CHECK(tanh(Interval(1L)).contains(oracle(kTanh1)));
  CHECK(pow_rational(Interval(2L), rat(-1, 2)).contains(oracle(kInvSqrt2)));
  CHECK(pow_rational(Interval(2L), rat(-1, 2)).width_d() < 1e-30);

  CHECK_THROWS_AS(log(Interval(Rational(-1), Rational(1))), DomainError);
  CHECK_THROWS_AS(sqrt(Interval(Rational(-1), Rational(1))), DomainError);
}

TEST_CASE("integrate_compact frozen examples") {
  using namespace ex;
  SECTION("constant 1 on [0,1]") {
    QuadResult r = integrate_compact(lit(1), Rational(0), Rational(1), 1e-20);
    CHECK(r.tol_reached);
    CHECK(r.value.contains(Rational(1)));
    CHECK(r.value.width_d() <= 1e-20);
  }
  SECTION("x tanh(pi x) e^{-x^2/2} on [0,10]") {
    ExprPtr x = var();
    ExprPtr f = x * tanh(pi() * x) * exp(-(x * x) / lit(2));
    QuadResult r = integrate_compact(f, Rational(0), Rational(10), 1e-15);
    CHECK(r.tol_reached);
    CHECK(r.value.contains(oracle(kTrace10)));
  }
  SECTION("(1 - cos x)/x^{2.184} on [1e-4, 1e4]") {
    ExprPtr x = var();
    ExprPtr f = (lit(1) - cos(x)) * pow(x, rat(-273, 125));
    QuadResult r =
        integrate_compact(f, rat(1, 10000), Rational(10000), 1e-6);
    CHECK(r.tol_reached);
    CHECK(r.value.contains(oracle(kKissIntegrand)));
  }
}

TEST_CASE("gaussian_poly_tail") {
  SECTION("q = 1, b = 0 encloses 1 exactly") {
    Interval t = gaussian_poly_tail(RationalPoly::constant(Rational(1)),
                                    Rational(0));
    CHECK(t.contains(Rational(1)));
    CHECK(t.width_d() < 1e-30);
  }
  SECTION("q = u, b = B encloses (B^2 + 2) e^{-B^2/2}") {
    for (long B : {1L, 2L, 5L}) {
      Interval t = gaussian_poly_tail(RationalPoly::monomial(1), Rational(B));
      Interval expect =
          Interval(Rational(B * B + 2)) * exp(Interval(Rational(-B * B) / 2));
      CHECK(t.intersects(expect));
      CHECK(t.width_d() < 1e-25);
    }
  }
  SECTION("primitive identity Q - 2Q' = q holds symbolically") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> qc;
      for (int i = 0; i <= 5; ++i) qc.push_back(rat(coef(rng), 3));
      RationalPoly q(std::move(qc));
      if (q.is_zero()) continue;
      // same triangular recurrence as the implementation
      const auto& cs = q.coeffs();
      std::vector<Rational> Qc(cs.size());
      for (std::size_t j = cs.size(); j-- > 0;) {
        Qc[j] = cs[j];
        if (j + 1 < cs.size())
          Qc[j] += Rational(2 * static_cast<long>(j + 1)) * Qc[j + 1];
      }
      RationalPoly Q(std::move(Qc));
      CHECK(Q - Rational(2) * Q.derivative() == q);
      // and the implementation agrees with the recomputed primitive
      Interval impl = gaussian_poly_tail(q, Rational(3));
      Interval mine = Interval(Q.eval(Rational(9))) * exp(Interval(rat(-9, 2)));
      CHECK(impl.intersects(mine));
    }
  }
  SECTION("tail consistent with quadrature on [3, 40] plus super-tail") {
    using namespace ex;
    std::mt19937 rng(2718);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rational> qc;
      for (int i = 0; i <= 5; ++i) qc.push_back(Rational(coef(rng)));
      RationalPoly q(std::move(qc));
      if (q.is_zero()) continue;
      Interval exact = gaussian_poly_tail(q, Rational(3));
      ExprPtr x = var();
      ExprPtr f = x * apply_poly(q, x * x) * exp(-(x * x) / lit(2));
      QuadResult mid = integrate_compact(f, Rational(3), Rational(40), 1e-20);
      std::vector<Rational> ac;
      for (const auto& c : q.coeffs()) ac.push_back(abs_rat(c));
      Interval super = gaussian_poly_tail(RationalPoly(std::move(ac)),
                                          Rational(40));
      Interval recon = mid.value +
                       Interval(Rational(-1), Rational(1)) * super;
      CHECK(exact.intersects(recon));
    }
  }
}

TEST_CASE("trace_integral_q") {
  RationalPoly one = RationalPoly::constant(Rational(1));
  SECTION("q = 1, b = 10") {
    QuadResult r = trace_integral_q(one, Rational(10), 1e-12,
                                    TailSign::NonNegative);
    CHECK(r.value.width_d() <= 1e-10);
    CHECK(r.value.contains(oracle(kTraceInf)));
  }
  SECTION("b = 20 refines b = 10") {
    QuadResult r10 = trace_integral_q(one, Rational(10), 1e-14,
                                      TailSign::NonNegative);
    QuadResult r20 = trace_integral_q(one, Rational(20), 1e-14,
                                      TailSign::NonNegative);
    CHECK(r20.value.contains(oracle(kTraceInf)));
    // refinement monotonicity up to outward rounding
    Interval slack(rat(-1, 1000000000000000L), rat(1, 1000000000000000L));
    CHECK((r10.value + slack).contains(r20.value));
  }
  SECTION("sign-flipped q") {
    RationalPoly mone = RationalPoly::constant(Rational(-1));
    QuadResult r = trace_integral_q(mone, Rational(10), 1e-12,
                                    TailSign::NonPositive);
    CHECK(r.value.contains(-oracle(kTraceInf)));
  }
  SECTION("missing sign certificate") {
    CHECK_THROWS_AS(trace_integral_q(one, Rational(10), 1e-12, std::nullopt),
                    SignNotConstant);
  }
}

namespace {

// Random elementary expression trees for the containment fuzz.
ExprPtr random_tree(std::mt19937& rng, int depth) {
  using namespace ex;
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 12);
  std::uniform_int_distribution<long> cnum(1, 5);
  switch (pick(rng)) {
    case 0:
      return var();
    case 1:
      return lit(rat(cnum(rng), cnum(rng)));
    case 2:
      return random_tree(rng, depth - 1) + random_tree(rng, depth - 1);
    case 3:
      return random_tree(rng, depth - 1) - random_tree(rng, depth - 1);
    case 4:
      return random_tree(rng, depth - 1) * random_tree(rng, depth - 1);
    case 5:
      return random_tree(rng, depth - 1) / random_tree(rng, depth - 1);
    case 6:
      return exp(-random_tree(rng, depth - 1));
    case 7:
      return sin(random_tree(rng, depth - 1));
    case 8:
      return cos(random_tree(rng, depth - 1));
    case 9:
      return tanh(random_tree(rng, depth - 1));
    case 10:
      return sqrt(lit(1) + random_tree(rng, depth - 1) *
                               random_tree(rng, depth - 1));
    case 11:
      return log(lit(1) + random_tree(rng, depth - 1) *
                              random_tree(rng, depth - 1));
    default:
      return sinh(random_tree(rng, depth - 1)) +
             cosh(random_tree(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("containment and outward-rounding fuzz") {
  std::mt19937 rng(123456);
  std::uniform_int_distribution<long> pnum(-8, 8);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    ExprPtr t = random_tree(rng, 3);
    Rational x0 = rat(pnum(rng), 4);
    Interval coarse, fine, wide;
    try {
      {
        prec::Scope s(128);
        coarse = eval_interval(t, Interval(x0));
        wide = eval_interval(t, Interval(x0 - rat(1, 8), x0 + rat(1, 8)));
      }
      {
        prec::Scope s(384);
        fine = eval_interval(t, Interval(x0));
      }
    } catch (const DomainError&) {
      continue;
    } catch (const DivisionByZeroInterval&) {
      continue;
    }
    ++checked;
    // the refined enclosure and the coarse one enclose the same real number
    CHECK(coarse.contains(fine));
    // widening the input never shrinks the output
    CHECK(wide.contains(coarse));
  }
  CHECK(checked > 100);
}
