// Dense univariate polynomials over exact rationals: evaluation, calculus,
// Euclidean algebra, Sturm chains and distinct-real-root counting.
#pragma once

#include <hyplp/rational.hpp>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace hyplp {

class RationalPoly {
 public:
  RationalPoly() = default;  // identically zero
  explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static RationalPoly constant(const Rational& v) {
    return RationalPoly(std::vector<Rational>{v});
  }
  // c * u^k
  static RationalPoly monomial(std::size_t k, const Rational& c = Rational(1)) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return RationalPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is reported as -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
  }
  const Rational& leading() const {
    if (c_.empty()) throw ZeroPolynomial();
    return c_.back();
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double eval_double(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + it->get_d();
    return acc;
  }

  RationalPoly derivative() const {
    if (c_.size() <= 1) return RationalPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RationalPoly(std::move(d));
  }

  RationalPoly operator-() const {
    std::vector<Rational> r(c_);
    for (auto& x : r) x = -x;
    return RationalPoly(std::move(r));
  }
  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RationalPoly(std::move(r));
  }
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
    return a + (-b);
  }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return RationalPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly(std::move(r));
  }
  friend RationalPoly operator*(const RationalPoly& a, const Rational& s) {
    std::vector<Rational> r(a.c_);
    for (auto& x : r) x *= s;
    return RationalPoly(std::move(r));
  }
  friend RationalPoly operator*(const Rational& s, const RationalPoly& a) {
    return a * s;
  }
  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

  // Exact Euclidean division: returns (quotient, remainder).
  static std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a,
                                                      const RationalPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial();
    std::vector<Rational> rem(a.c_);
    const int db = b.degree();
    if (a.degree() < db) return {RationalPoly(), a};
    std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
    for (int i = a.degree(); i >= db; --i) {
      Rational f = rem[i] / b.c_.back();
      if (sgn(f) == 0) continue;
      quo[i - db] = f;
      for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
    }
    return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
  }

  // Divides out all rational-coefficient content so signs are preserved but
  // coefficient growth in Euclidean chains stays tame.
  RationalPoly primitive_part() const {
    if (is_zero()) return *this;
    mpz_class gnum(0), lden(1);
    for (const auto& x : c_) {
      mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), x.get_num().get_mpz_t());
      mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), x.get_den().get_mpz_t());
    }
    Rational scale(lden, gnum);
    scale.canonicalize();
    return *this * scale;
  }

  // Monic gcd.
  static RationalPoly gcd(RationalPoly a, RationalPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    while (!b.is_zero()) {
      RationalPoly r = divmod(a, b).second.primitive_part();
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  RationalPoly monic() const {
    if (is_zero()) return *this;
    return *this * Rational(Rational(1) / c_.back());
  }

  RationalPoly squarefree_part() const {
    if (is_zero()) throw ZeroPolynomial();
    if (degree() == 0) return *this;
    RationalPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    return divmod(*this, g).first;
  }

  // p(u) -> p(x^2) as a polynomial in x.
  RationalPoly substitute_square() const {
    if (is_zero()) return *this;
    std::vector<Rational> r(2 * c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
    return RationalPoly(std::move(r));
  }

  // Multiplicity of the exact rational root z (0 if not a root).
  int root_multiplicity(const Rational& z) const {
    if (is_zero()) throw ZeroPolynomial();
    RationalPoly p = *this;
    int m = 0;
    while (!p.is_zero() && sgn(p.eval(z)) == 0) {
      // synthetic division by (u - z)
      std::vector<Rational> q(p.c_.size() - 1, Rational(0));
      Rational carry(0);
      for (int i = p.degree(); i >= 1; --i) {
        carry = p.c_[i] + carry * z;
        q[i - 1] = carry;
      }
      p = RationalPoly(std::move(q));
      ++m;
    }
    return m;
  }

  // All real roots lie in [-M, M] with M = 1 + max |a_i / a_d| (Cauchy bound).
  Rational cauchy_root_bound() const {
    if (is_zero()) throw ZeroPolynomial();
    Rational m(0);
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
      Rational t = abs(c_[i] / c_.back());
      if (t > m) m = t;
    }
    return m + 1;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;  // ascending degree order
};

// Standard Sturm chain p, p', -rem(...), ... terminating at the last nonzero
// element (a constant for squarefree p, the gcd otherwise). Elements are
// scaled by positive rationals only, which leaves sign variations intact.
inline std::vector<RationalPoly> sturm_sequence(const RationalPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::vector<RationalPoly> chain;
  chain.push_back(p);
  RationalPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const RationalPoly& a = chain[chain.size() - 2];
    const RationalPoly& b = chain[chain.size() - 1];
    RationalPoly r = RationalPoly::divmod(a, b).second;
    if (r.is_zero()) break;
    RationalPoly next = (-r).primitive_part();
    // primitive_part scales by lden/gnum whose sign follows the leading
    // coefficient of gnum; make sure the scale was positive.
    if (sgn(next.leading()) * sgn((-r).leading()) < 0) next = -next;
    chain.push_back(std::move(next));
  }
  return chain;
}

namespace detail {

inline int sign_at(const RationalPoly& p, const Rational& x) {
  return sgn(p.eval(x));
}
inline int sign_at_pos_inf(const RationalPoly& p) { return sgn(p.leading()); }
inline int sign_at_neg_inf(const RationalPoly& p) {
  return (p.degree() % 2 == 0) ? sgn(p.leading()) : -sgn(p.leading());
}

template <typename SignFn>
inline int variations(const std::vector<RationalPoly>& chain, SignFn sign_of) {
  int var = 0, prev = 0;
  for (const auto& q : chain) {
    int s = sign_of(q);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace detail

// Distinct real roots of p in the half-open interval (a, b].
inline int count_roots(const RationalPoly& p, const Rational& a,
                       const Rational& b) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (a > b) throw DomainError("count_roots: a > b");
  if (p.degree() == 0) return 0;
  auto chain = sturm_sequence(p.squarefree_part());
  int va = detail::variations(
      chain, [&](const RationalPoly& q) { return detail::sign_at(q, a); });
  int vb = detail::variations(
      chain, [&](const RationalPoly& q) { return detail::sign_at(q, b); });
  return va - vb;
}

// Distinct real roots in (a, +infinity).
inline int count_roots_above(const RationalPoly& p, const Rational& a) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (p.degree() == 0) return 0;
  auto chain = sturm_sequence(p.squarefree_part());
  int va = detail::variations(
      chain, [&](const RationalPoly& q) { return detail::sign_at(q, a); });
  int vinf = detail::variations(chain, detail::sign_at_pos_inf);
  return va - vinf;
}

// Distinct real roots on the whole line.
inline int count_roots_real_line(const RationalPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (p.degree() == 0) return 0;
  auto chain = sturm_sequence(p.squarefree_part());
  int vn = detail::variations(chain, detail::sign_at_neg_inf);
  int vp = detail::variations(chain, detail::sign_at_pos_inf);
  return vn - vp;
}

// Distinct real roots in (-infinity, b].
inline int count_roots_below(const RationalPoly& p, const Rational& b) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (p.degree() == 0) return 0;
  auto chain = sturm_sequence(p.squarefree_part());
  int vn = detail::variations(chain, detail::sign_at_neg_inf);
  int vb = detail::variations(
      chain, [&](const RationalPoly& q) { return detail::sign_at(q, b); });
  return vn - vb;
}

}  // namespace hyplp
