// Expression trees for integrands, evaluated in interval "jet" (truncated
// Taylor series with interval coefficients) arithmetic. Jets deliver both the
// centered Taylor polynomial of an integrand and a rigorous Lagrange-remainder
// coefficient, which is what the certified quadrature consumes.
#pragma once

#include <hyplp/interval.hpp>
#include <hyplp/poly.hpp>

#include <memory>
#include <utility>
#include <vector>

namespace hyplp {

enum class ExprOp {
  Var,
  ConstRat,
  Pi,
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  Exp,
  Log,
  Sin,
  Cos,
  Sinh,
  Cosh,
  Tanh,
  Sqrt,
  Pow,   // rational exponent in `value`; base must stay positive
  Poly,  // rational polynomial `poly` applied to the child expression
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprOp op;
  Rational value;       // ConstRat payload or Pow exponent
  RationalPoly poly;    // Poly payload
  ExprPtr a, b;
};

namespace ex {

inline ExprPtr var() {
  return std::make_shared<Expr>(Expr{ExprOp::Var, Rational(0), {}, {}, {}});
}
inline ExprPtr lit(const Rational& v) {
  return std::make_shared<Expr>(Expr{ExprOp::ConstRat, v, {}, {}, {}});
}
inline ExprPtr lit(long v) { return lit(Rational(v)); }
inline ExprPtr pi() {
  return std::make_shared<Expr>(Expr{ExprOp::Pi, Rational(0), {}, {}, {}});
}
inline ExprPtr unary(ExprOp op, ExprPtr a) {
  return std::make_shared<Expr>(
      Expr{op, Rational(0), {}, std::move(a), {}});
}
inline ExprPtr binary(ExprOp op, ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(
      Expr{op, Rational(0), {}, std::move(a), std::move(b)});
}
inline ExprPtr operator+(ExprPtr a, ExprPtr b) {
  return binary(ExprOp::Add, std::move(a), std::move(b));
}
inline ExprPtr operator-(ExprPtr a, ExprPtr b) {
  return binary(ExprOp::Sub, std::move(a), std::move(b));
}
inline ExprPtr operator*(ExprPtr a, ExprPtr b) {
  return binary(ExprOp::Mul, std::move(a), std::move(b));
}
inline ExprPtr operator/(ExprPtr a, ExprPtr b) {
  return binary(ExprOp::Div, std::move(a), std::move(b));
}
inline ExprPtr operator-(ExprPtr a) { return unary(ExprOp::Neg, std::move(a)); }
inline ExprPtr exp(ExprPtr a) { return unary(ExprOp::Exp, std::move(a)); }
inline ExprPtr log(ExprPtr a) { return unary(ExprOp::Log, std::move(a)); }
inline ExprPtr sin(ExprPtr a) { return unary(ExprOp::Sin, std::move(a)); }
inline ExprPtr cos(ExprPtr a) { return unary(ExprOp::Cos, std::move(a)); }
inline ExprPtr sinh(ExprPtr a) { return unary(ExprOp::Sinh, std::move(a)); }
inline ExprPtr cosh(ExprPtr a) { return unary(ExprOp::Cosh, std::move(a)); }
inline ExprPtr tanh(ExprPtr a) { return unary(ExprOp::Tanh, std::move(a)); }
inline ExprPtr sqrt(ExprPtr a) { return unary(ExprOp::Sqrt, std::move(a)); }
inline ExprPtr pow(ExprPtr a, const Rational& alpha) {
  return std::make_shared<Expr>(
      Expr{ExprOp::Pow, alpha, {}, std::move(a), {}});
}
inline ExprPtr apply_poly(const RationalPoly& p, ExprPtr arg) {
  return std::make_shared<Expr>(
      Expr{ExprOp::Poly, Rational(0), p, std::move(arg), {}});
}

}  // namespace ex

// Truncated Taylor series with interval coefficients: c[k] encloses the k-th
// Taylor coefficient f^{(k)}(x0)/k! of the represented function at the
// (possibly thick) expansion point.
struct Jet {
  std::vector<Interval> c;
  std::size_t order() const { return c.size() - 1; }
};

namespace jet {

inline Jet constant(const Interval& v, std::size_t order) {
  Jet j;
  j.c.assign(order + 1, Interval(0L));
  j.c[0] = v;
  return j;
}

inline Jet variable(const Interval& x0, std::size_t order) {
  Jet j = constant(x0, order);
  if (order >= 1) j.c[1] = Interval(1L);
  return j;
}

inline Jet add(const Jet& a, const Jet& b) {
  Jet r = a;
  for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}
inline Jet sub(const Jet& a, const Jet& b) {
  Jet r = a;
  for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}
inline Jet neg(const Jet& a) {
  Jet r = a;
  for (auto& x : r.c) x = -x;
  return r;
}
inline Jet mul(const Jet& a, const Jet& b) {
  const std::size_t n = a.c.size();
  Jet r;
  r.c.assign(n, Interval(0L));
  for (std::size_t k = 0; k < n; ++k) {
    Interval acc(0L);
    for (std::size_t j = 0; j <= k; ++j) acc = acc + a.c[j] * b.c[k - j];
    r.c[k] = acc;
  }
  return r;
}
inline Jet div(const Jet& a, const Jet& b) {
  if (b.c[0].contains_zero()) throw DivisionByZeroInterval();
  const std::size_t n = a.c.size();
  Jet r;
  r.c.assign(n, Interval(0L));
  for (std::size_t k = 0; k < n; ++k) {
    Interval acc = a.c[k];
    for (std::size_t j = 0; j < k; ++j) acc = acc - r.c[j] * b.c[k - j];
    r.c[k] = acc / b.c[0];
  }
  return r;
}
inline Jet exp(const Jet& u) {
  const std::size_t n = u.c.size();
  Jet v;
  v.c.assign(n, Interval(0L));
  v.c[0] = exp(u.c[0]);
  for (std::size_t k = 1; k < n; ++k) {
    Interval acc(0L);
    for (std::size_t j = 1; j <= k; ++j)
      acc = acc + Rational(static_cast<long>(j)) * u.c[j] * v.c[k - j];
    v.c[k] = acc * Rational(1, static_cast<long>(k));
  }
  return v;
}
inline Jet log(const Jet& u) {
  if (!u.c[0].certainly_positive())
    throw DomainError("jet log: argument not certainly positive");
  const std::size_t n = u.c.size();
  Jet v;
  v.c.assign(n, Interval(0L));
  v.c[0] = log(u.c[0]);
  for (std::size_t k = 1; k < n; ++k) {
    Interval acc = u.c[k];
    for (std::size_t j = 1; j < k; ++j)
      acc = acc - (Rational(static_cast<long>(j), static_cast<long>(k)) *
                   v.c[j] * u.c[k - j]);
    v.c[k] = acc / u.c[0];
  }
  return v;
}
inline std::pair<Jet, Jet> sin_cos(const Jet& u) {
  const std::size_t n = u.c.size();
  Jet s, c;
  s.c.assign(n, Interval(0L));
  c.c.assign(n, Interval(0L));
  s.c[0] = sin(u.c[0]);
  c.c[0] = cos(u.c[0]);
  for (std::size_t k = 1; k < n; ++k) {
    Interval sa(0L), ca(0L);
    for (std::size_t j = 1; j <= k; ++j) {
      sa = sa + Rational(static_cast<long>(j)) * u.c[j] * c.c[k - j];
      ca = ca + Rational(static_cast<long>(j)) * u.c[j] * s.c[k - j];
    }
    s.c[k] = sa * Rational(1, static_cast<long>(k));
    c.c[k] = -(ca * Rational(1, static_cast<long>(k)));
  }
  return {s, c};
}
inline std::pair<Jet, Jet> sinh_cosh(const Jet& u) {
  const std::size_t n = u.c.size();
  Jet s, c;
  s.c.assign(n, Interval(0L));
  c.c.assign(n, Interval(0L));
  s.c[0] = sinh(u.c[0]);
  c.c[0] = cosh(u.c[0]);
  for (std::size_t k = 1; k < n; ++k) {
    Interval sa(0L), ca(0L);
    for (std::size_t j = 1; j <= k; ++j) {
      sa = sa + Rational(static_cast<long>(j)) * u.c[j] * c.c[k - j];
      ca = ca + Rational(static_cast<long>(j)) * u.c[j] * s.c[k - j];
    }
    s.c[k] = sa * Rational(1, static_cast<long>(k));
    c.c[k] = ca * Rational(1, static_cast<long>(k));
  }
  return {s, c};
}
inline Jet sqrt(const Jet& u) {
  if (!u.c[0].certainly_positive())
    throw DomainError("jet sqrt: argument not certainly positive");
  const std::size_t n = u.c.size();
  Jet v;
  v.c.assign(n, Interval(0L));
  v.c[0] = sqrt(u.c[0]);
  Interval two_v0 = v.c[0] * Rational(2);
  for (std::size_t k = 1; k < n; ++k) {
    Interval acc = u.c[k];
    for (std::size_t j = 1; j < k; ++j) acc = acc - v.c[j] * v.c[k - j];
    v.c[k] = acc / two_v0;
  }
  return v;
}
inline Jet pow(const Jet& u, const Rational& alpha) {
  if (!u.c[0].certainly_positive())
    throw DomainError("jet pow: base not certainly positive");
  const std::size_t n = u.c.size();
  Jet v;
  v.c.assign(n, Interval(0L));
  v.c[0] = pow_rational(u.c[0], alpha);
  const Interval ia(alpha);
  for (std::size_t k = 1; k < n; ++k) {
    Interval acc(0L);
    for (std::size_t m = 1; m <= k; ++m)
      acc = acc + ia * Rational(static_cast<long>(m)) * u.c[m] * v.c[k - m];
    for (std::size_t m = 1; m < k; ++m)
      acc = acc - Rational(static_cast<long>(m)) * v.c[m] * u.c[k - m];
    v.c[k] = (acc * Rational(1, static_cast<long>(k))) / u.c[0];
  }
  return v;
}
inline Jet poly_horner(const RationalPoly& p, const Jet& x) {
  Jet acc = constant(Interval(0L), x.order());
  const auto& cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    acc = mul(acc, x);
    acc.c[0] = acc.c[0] + Interval(cs[i]);
  }
  return acc;
}

}  // namespace jet

// Evaluates the expression as a jet expanded at x0 (x0 may be a thick
// interval, in which case coefficient k encloses f^{(k)}(xi)/k! for every xi
// in x0 — exactly what the Lagrange remainder bound needs).
inline Jet eval_jet(const ExprPtr& e, const Interval& x0, std::size_t order) {
  switch (e->op) {
    case ExprOp::Var:
      return jet::variable(x0, order);
    case ExprOp::ConstRat:
      return jet::constant(Interval(e->value), order);
    case ExprOp::Pi:
      return jet::constant(Interval::pi(), order);
    case ExprOp::Add:
      return jet::add(eval_jet(e->a, x0, order), eval_jet(e->b, x0, order));
    case ExprOp::Sub:
      return jet::sub(eval_jet(e->a, x0, order), eval_jet(e->b, x0, order));
    case ExprOp::Mul:
      return jet::mul(eval_jet(e->a, x0, order), eval_jet(e->b, x0, order));
    case ExprOp::Div:
      return jet::div(eval_jet(e->a, x0, order), eval_jet(e->b, x0, order));
    case ExprOp::Neg:
      return jet::neg(eval_jet(e->a, x0, order));
    case ExprOp::Exp:
      return jet::exp(eval_jet(e->a, x0, order));
    case ExprOp::Log:
      return jet::log(eval_jet(e->a, x0, order));
    case ExprOp::Sin:
      return jet::sin_cos(eval_jet(e->a, x0, order)).first;
    case ExprOp::Cos:
      return jet::sin_cos(eval_jet(e->a, x0, order)).second;
    case ExprOp::Sinh:
      return jet::sinh_cosh(eval_jet(e->a, x0, order)).first;
    case ExprOp::Cosh:
      return jet::sinh_cosh(eval_jet(e->a, x0, order)).second;
    case ExprOp::Tanh: {
      auto sc = jet::sinh_cosh(eval_jet(e->a, x0, order));
      return jet::div(sc.first, sc.second);
    }
    case ExprOp::Sqrt:
      return jet::sqrt(eval_jet(e->a, x0, order));
    case ExprOp::Pow:
      return jet::pow(eval_jet(e->a, x0, order), e->value);
    case ExprOp::Poly:
      return jet::poly_horner(e->poly, eval_jet(e->a, x0, order));
  }
  throw DomainError("eval_jet: unknown node");
}

// Plain interval evaluation (order-0 jet).
inline Interval eval_interval(const ExprPtr& e, const Interval& x) {
  return eval_jet(e, x, 0).c[0];
}

}  // namespace hyplp
