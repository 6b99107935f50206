#include <catch2/catch_amalgamated.hpp>

#include <hyplp/matrix.hpp>
#include <hyplp/poly.hpp>
#include <hyplp/rational.hpp>

#include <random>

using namespace hyplp;

namespace {

RationalPoly poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

Rational random_rational(std::mt19937& rng, long lo = -20, long hi = 20) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, 12);
  return rat(num(rng), den(rng));
}

// Independent oracle: power-by-power evaluation (no Horner).
Rational eval_oracle(const RationalPoly& p, const Rational& x) {
  Rational acc(0), xp(1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    acc += p.coeffs()[i] * xp;
    xp *= x;
  }
  return acc;
}

}  // namespace

TEST_CASE("poly_eval basics and Horner oracle") {
  RationalPoly p = poly({-1, 0, 1});  // u^2 - 1
  CHECK(p.eval(Rational(2)) == Rational(3));
  CHECK(RationalPoly().eval(parse_rational("5/3")) == Rational(0));

  std::mt19937 rng(12345);
  for (int t = 0; t < 25; ++t) {
    std::vector<Rational> c;
    for (int i = 0; i <= 7; ++i) c.push_back(random_rational(rng));
    RationalPoly q(std::move(c));
    Rational x = random_rational(rng);
    CHECK(q.eval(x) == eval_oracle(q, x));
  }
}

TEST_CASE("poly_derivative") {
  CHECK(poly({-1, 0, 1}).derivative() == poly({0, 2}));
  CHECK(poly({3}).derivative().is_zero());
  CHECK(poly({4, -4, 1}).derivative() == poly({-4, 2}));  // (u-2)^2 -> 2u-4
}

TEST_CASE("sturm_sequence shapes") {
  SECTION("u^2 - 1: textbook chain up to positive scaling") {
    auto chain = sturm_sequence(poly({-1, 0, 1}));
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == poly({-1, 0, 1}));
    CHECK(chain[1].degree() == 1);
    CHECK(sgn(chain[1].leading()) > 0);
    CHECK(chain[2].degree() == 0);
    CHECK(sgn(chain[2].leading()) > 0);
  }
  SECTION("(u-2)^2: chain terminates at the gcd") {
    auto chain = sturm_sequence(poly({4, -4, 1}));
    CHECK(chain.back().degree() == 1);
    CHECK(chain.back().monic() == poly({-2, 1}));
  }
  SECTION("degrees strictly decrease") {
    std::mt19937 rng(99);
    for (int t = 0; t < 20; ++t) {
      std::vector<Rational> c;
      for (int i = 0; i <= 9; ++i) c.push_back(random_rational(rng));
      c.push_back(Rational(1));
      auto chain = sturm_sequence(RationalPoly(std::move(c)));
      for (std::size_t i = 1; i < chain.size(); ++i)
        CHECK(chain[i].degree() < chain[i - 1].degree());
    }
  }
  SECTION("zero polynomial rejected") {
    CHECK_THROWS_AS(sturm_sequence(RationalPoly()), ZeroPolynomial);
  }
}

TEST_CASE("count_roots on (a,b]") {
  CHECK(count_roots(poly({-1, 0, 1}), Rational(0), Rational(2)) == 1);
  CHECK(count_roots(poly({1, -2, 1}), Rational(0), Rational(2)) == 1);
  // half-open semantics: a root exactly at a is excluded, at b included
  CHECK(count_roots(poly({-1, 1}), Rational(1), Rational(2)) == 0);
  CHECK(count_roots(poly({-1, 1}), Rational(0), Rational(1)) == 1);
}

TEST_CASE("count_roots against planted-root construction") {
  std::mt19937 rng(777);
  for (int t = 0; t < 100; ++t) {
    // Product of k distinct rational linear factors and complex-conjugate
    // quadratic factors: the real-root count is known by construction.
    std::uniform_int_distribution<int> kd(0, 4);
    int k = kd(rng);
    std::vector<Rational> roots;
    RationalPoly p = RationalPoly::constant(Rational(1));
    while (static_cast<int>(roots.size()) < k) {
      Rational r = random_rational(rng, -10, 10);
      bool dup = false;
      for (auto& x : roots) dup |= (x == r);
      if (dup) continue;
      roots.push_back(r);
      std::uniform_int_distribution<int> md(1, 2);
      int mult = md(rng);
      for (int j = 0; j < mult; ++j)
        p = p * RationalPoly(std::vector<Rational>{-r, Rational(1)});
    }
    std::uniform_int_distribution<int> qd(0, 2);
    int nq = qd(rng);
    for (int j = 0; j < nq; ++j) {
      Rational a = random_rational(rng, -5, 5);
      Rational b = random_rational(rng, 1, 9);  // disc = a^2 - 4b
      if (a * a - 4 * b >= 0) b = a * a / 4 + 1;
      p = p * RationalPoly(std::vector<Rational>{b, a, Rational(1)});
    }
    Rational lo(-1000), hi(1000);
    int expect = 0;
    for (auto& r : roots)
      if (r > lo && r <= hi) ++expect;
    CHECK(count_roots(p, lo, hi) == expect);
    CHECK(count_roots_real_line(p) == static_cast<int>(roots.size()));
    CHECK(count_roots_above(p, lo) == static_cast<int>(roots.size()));
  }
}

TEST_CASE("root_multiplicity and squarefree part") {
  RationalPoly p = poly({4, -4, 1});  // (u-2)^2
  CHECK(p.root_multiplicity(Rational(2)) == 2);
  CHECK(p.root_multiplicity(Rational(3)) == 0);
  CHECK(p.squarefree_part().monic() == poly({-2, 1}));
}

TEST_CASE("cauchy bound contains all planted roots") {
  RationalPoly p = RationalPoly::constant(rat(3, 7));
  for (long r : {-9, -1, 4, 15})
    p = p * RationalPoly(std::vector<Rational>{Rational(-r), Rational(1)});
  Rational m = p.cauchy_root_bound();
  CHECK(m > 15);
  CHECK(count_roots(p, -m, m) == 4);
  CHECK(count_roots_above(p, m) == 0);
}

TEST_CASE("solve_linear") {
  SECTION("identity") {
    RationalMatrix a(3, 3);
    for (int i = 0; i < 3; ++i) a.at(i, i) = 1;
    std::vector<Rational> b{rat(1, 2), Rational(-3), rat(7, 5)};
    CHECK(solve_linear(a, b) == b);
  }
  SECTION("2x2 example") {
    RationalMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = -1;
    auto x = solve_linear(a, {Rational(2), Rational(0)});
    CHECK(x == std::vector<Rational>{Rational(1), Rational(1)});
  }
  SECTION("random 12x12 exact residual") {
    std::mt19937 rng(4242);
    for (int t = 0; t < 5; ++t) {
      RationalMatrix a(12, 12);
      std::vector<Rational> b(12);
      for (int i = 0; i < 12; ++i) {
        b[i] = random_rational(rng);
        for (int j = 0; j < 12; ++j) a.at(i, j) = random_rational(rng);
      }
      std::vector<Rational> x;
      try {
        x = solve_linear(a, b);
      } catch (const SingularSystem&) {
        continue;  // random matrix happened to be singular; skip
      }
      for (int i = 0; i < 12; ++i) {
        Rational acc(0);
        for (int j = 0; j < 12; ++j) acc += a.at(i, j) * x[j];
        CHECK(acc == b[i]);
      }
    }
  }
  SECTION("singular detection") {
    RationalMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 2;
    a.at(1, 1) = 4;
    CHECK_THROWS_AS(solve_linear(a, {Rational(1), Rational(2)}),
                    SingularSystem);
  }
}

TEST_CASE("rationalize continued fractions") {
  CHECK(rationalize(0.5, 10) == rat(1, 2));
  CHECK(rationalize(3.14159265358979, 113) == rat(355, 113));
  double e18 = 1.1331484530668263;  // e^{1/8}
  Rational r = rationalize(e18, 1000000);
  Rational diff = abs_rat(r - rationalize(e18, 2000000000UL));
  CHECK(diff.get_d() < 1e-11);
  CHECK(r.get_den() <= 1000000);
}
