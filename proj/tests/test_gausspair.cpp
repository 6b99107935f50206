#include <catch2/catch_amalgamated.hpp>

#include <hyplp/pair.hpp>

#include <random>

using namespace hyplp;

namespace {

Rational rr(std::mt19937& rng, long lo = -9, long hi = 9) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, 7);
  return rat(num(rng), den(rng));
}

RationalPoly random_poly(std::mt19937& rng, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i) c.push_back(rr(rng));
  c.push_back(Rational(1));
  return RationalPoly(std::move(c));
}

// Series definition L_n^{(-1/2)}(u) = sum_k (-1)^k binom(n-1/2, n-k) u^k / k!
RationalPoly laguerre_series_oracle(int n) {
  std::vector<Rational> c(n + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    // binom(n - 1/2, n - k) = prod_{j=1}^{n-k} (n - 1/2 - j + 1) / j
    Rational b(1);
    for (int j = 1; j <= n - k; ++j)
      b *= (Rational(n) - rat(1, 2) - Rational(j) + 1) / Rational(j);
    Rational kfact(1);
    for (int j = 2; j <= k; ++j) kfact *= j;
    c[k] = ((k % 2 == 0) ? b : -b) / kfact;
  }
  return RationalPoly(std::move(c));
}

}  // namespace

TEST_CASE("laguerre_basis closed forms and series oracle") {
  CHECK(laguerre_basis(0) == RationalPoly::constant(Rational(1)));
  CHECK(laguerre_basis(1) ==
        RationalPoly(std::vector<Rational>{rat(1, 2), Rational(-1)}));
  CHECK(laguerre_basis(2) ==
        RationalPoly(std::vector<Rational>{rat(3, 8), rat(-3, 2), rat(1, 2)}));
  for (int n = 0; n <= 12; ++n)
    CHECK(laguerre_basis(n) == laguerre_series_oracle(n));
}

TEST_CASE("laguerre_transform basics") {
  CHECK(laguerre_transform(RationalPoly::constant(Rational(1))) ==
        RationalPoly::constant(Rational(1)));
  CHECK(laguerre_transform(
            RationalPoly(std::vector<Rational>{rat(1, 2), Rational(-1)})) ==
        RationalPoly(std::vector<Rational>{rat(-1, 2), Rational(1)}));
  // p = u -> q = 1 - u
  CHECK(laguerre_transform(RationalPoly::monomial(1)) ==
        RationalPoly(std::vector<Rational>{Rational(1), Rational(-1)}));
}

TEST_CASE("involution up to degree 60 and eigenvectors up to n = 40") {
  std::mt19937 rng(2024);
  for (int deg : {3, 11, 25, 41, 60}) {
    RationalPoly p = random_poly(rng, deg);
    CHECK(laguerre_transform(laguerre_transform(p)) == p);
  }
  for (int n = 0; n <= 40; ++n) {
    RationalPoly L = laguerre_basis(n);
    RationalPoly t = laguerre_transform(L);
    if (n % 2 == 0)
      CHECK(t == L);
    else
      CHECK(t == -L);
  }
}

TEST_CASE("cosine-transform quadrature oracle at sample points") {
  // fhat(y) = sqrt(2/pi) * int_0^inf p(x^2) e^{-x^2/2} cos(y x) dx must agree
  // with q(y^2) e^{-y^2/2} within the certified quadrature error.
  std::mt19937 rng(555);
  using namespace ex;
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> dd(0, 10);
    RationalPoly p = random_poly(rng, dd(rng));
    RationalPoly q = laguerre_transform(p);
    Rational y = rat(trial + 1, 7);

    ExprPtr x = var();
    ExprPtr f = apply_poly(p, x * x) * exp(-(x * x) / lit(2)) *
                cos(lit(y) * x);
    const Rational cut(16);
    QuadResult quad = integrate_compact(f, Rational(0), cut, 1e-22);
    // |integrand| <= x * pabs(x^2) e^{-x^2/2} for x >= 1, so the dropped tail
    // is bounded by the exact Gaussian tail of the absolute-value polynomial.
    std::vector<Rational> ac;
    for (const auto& cc : p.coeffs()) ac.push_back(abs_rat(cc));
    Interval tail_mag = gaussian_poly_tail(RationalPoly(std::move(ac)), cut);
    Interval enclosure =
        (quad.value + Interval(-Rational(1), Rational(1)) * tail_mag) *
        sqrt(Interval(2L) / Interval::pi());

    Interval expected = Interval(q.eval(y * y)) * exp(Interval(-(y * y) / 2));
    CHECK(enclosure.intersects(expected));
    // and the agreement is tight
    CHECK(enclosure.width_d() < 1e-18);
  }
}

TEST_CASE("eval_f / eval_fhat_i_half") {
  GaussianPair one = GaussianPair::from_p(RationalPoly::constant(Rational(1)));
  auto v = eval_f(one, Rational(0));
  CHECK(v.coefficient == 1);
  CHECK(v.exponent == 0);

  GaussianPair pm1 = GaussianPair::from_p(
      RationalPoly(std::vector<Rational>{Rational(-1), Rational(1)}));
  CHECK(eval_f(pm1, Rational(1)).coefficient == 0);

  GaussianPair pu = GaussianPair::from_p(RationalPoly::monomial(1));
  auto w = eval_f(pu, Rational(2));
  CHECK(w.coefficient == 4);
  CHECK(w.exponent == -2);

  GaussianPair q1 = GaussianPair::from_q(RationalPoly::constant(Rational(1)));
  auto ih = eval_fhat_i_half(q1);
  CHECK(ih.coefficient == 1);
  CHECK(ih.exponent == rat(1, 8));

  GaussianPair q2 = GaussianPair::from_q(
      RationalPoly(std::vector<Rational>{rat(-1, 2), Rational(1)}));
  CHECK(eval_fhat_i_half(q2).coefficient == rat(-3, 4));

  GaussianPair q3 = GaussianPair::from_q(
      RationalPoly(std::vector<Rational>{rat(1, 4), Rational(1)}));
  CHECK(eval_fhat_i_half(q3).is_zero());
}

TEST_CASE("build_pair") {
  SECTION("degree 2 with f double zero at 1") {
    std::vector<LinearConstraint> cs;
    cs.push_back({LinearConstraint::FDoubleZero{Rational(1)}});
    cs.push_back({LinearConstraint::Normalization{2, Rational(2)}});
    GaussianPair pr = build_pair(2, cs);
    CHECK(pr.p == RationalPoly(std::vector<Rational>{Rational(1), Rational(-2),
                                                     Rational(1)}));
    CHECK(pr.q == laguerre_transform(pr.p));
  }
  SECTION("degree 2 with fhat double zero at 1 (involution)") {
    std::vector<LinearConstraint> cs;
    cs.push_back({LinearConstraint::FhatDoubleZero{Rational(1)}});
    cs.push_back({LinearConstraint::Normalization{2, Rational(2)}});
    GaussianPair pr = build_pair(2, cs);
    CHECK(pr.q == RationalPoly(std::vector<Rational>{Rational(1), Rational(-2),
                                                     Rational(1)}));
    CHECK(pr.p == laguerre_transform(pr.q));
  }
  SECTION("random fhat double zeros are exact") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
      std::uniform_int_distribution<int> md(1, 4);
      int m = md(rng);
      std::vector<Rational> zeros;
      while (static_cast<int>(zeros.size()) < m) {
        Rational z = rr(rng, 1, 40);
        bool dup = false;
        for (auto& u : zeros) dup |= (u == z);
        if (!dup && sgn(z) > 0) zeros.push_back(z);
      }
      std::vector<LinearConstraint> cs;
      for (auto& z : zeros) cs.push_back({LinearConstraint::FhatDoubleZero{z}});
      cs.push_back({LinearConstraint::Normalization{
          static_cast<std::size_t>(2 * m), Rational(1)}});
      GaussianPair pr = build_pair(2 * m, cs);
      for (auto& z : zeros) {
        CHECK(pr.q.eval(z * z) == 0);
        CHECK(pr.q.derivative().eval(z * z) == 0);
      }
      CHECK(laguerre_transform(pr.p) == pr.q);
    }
  }
  SECTION("dependent constraints raise SingularSystem") {
    std::vector<LinearConstraint> cs;
    cs.push_back({LinearConstraint::FDoubleZero{Rational(1)}});
    cs.push_back({LinearConstraint::FDoubleZero{Rational(1)}});
    CHECK_THROWS_AS(build_pair(4, cs), SingularSystem);  // wrong row count
    std::vector<LinearConstraint> cs2;
    cs2.push_back({LinearConstraint::FDoubleZero{Rational(1)}});
    cs2.push_back({LinearConstraint::FDoubleZero{Rational(1)}});
    cs2.push_back({LinearConstraint::Normalization{4, Rational(1)}});
    CHECK_THROWS_AS(build_pair(4, cs2), SingularSystem);  // dependent rows
  }
}

TEST_CASE("fhat_value_at_i_half constraint row") {
  // degree 1: impose q(-1/4)*e_conv = 3 and normalization c_0 = 1.
  std::vector<LinearConstraint> cs;
  cs.push_back({LinearConstraint::FhatValueAtIHalf{Rational(3)}});
  cs.push_back({LinearConstraint::Normalization{0, Rational(1)}});
  GaussianPair pr = build_pair(1, cs);
  CHECK(pr.q.eval(rat(-1, 4)) * e_eighth_convergent() == 3);
}
