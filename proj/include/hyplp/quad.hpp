// Certified quadrature: adaptive bisection with Taylor-model enclosures per
// subinterval, plus the exact Gaussian tail primitive.
#pragma once

#include <hyplp/expr.hpp>
#include <hyplp/interval.hpp>
#include <hyplp/poly.hpp>

#include <functional>
#include <optional>

namespace hyplp {

struct SignNotConstant : std::runtime_error {
  SignNotConstant()
      : std::runtime_error(
            "trace_integral requires a tail sign certificate for q beyond b") {}
};

struct QuadOptions {
  std::size_t order = 14;   // Taylor order (even: one-sided remainder weight)
  int max_depth = 48;
  long max_precision_bits = 512;
};

struct QuadResult {
  Interval value;
  bool tol_reached = true;
  long precision_bits = 0;
};

namespace detail {

// Taylor-model enclosure of the integral over [lo, hi]:
//   thin jet at the midpoint -> centered Taylor polynomial, integrated exactly;
//   thick jet over [lo, hi]  -> Lagrange remainder coefficient.
inline std::optional<Interval> taylor_cell(const ExprPtr& f, const Rational& lo,
                                           const Rational& hi,
                                           std::size_t order) {
  const Rational m = (lo + hi) / 2;
  const Rational h = (hi - lo) / 2;
  try {
    Jet thin = eval_jet(f, Interval(m), order);
    Jet wide = eval_jet(f, Interval(lo, hi), order);
    // polynomial part: sum over even k < order of a_k * 2 h^{k+1}/(k+1)
    Interval acc(0L);
    Rational hp = h;  // h^{k+1}
    for (std::size_t k = 0; k < order; ++k) {
      if (k % 2 == 0)
        acc = acc + thin.c[k] * Rational(2 * hp / Rational(static_cast<long>(k + 1)));
      hp *= h;
    }
    // remainder: f - poly has the pointwise form c_order(xi) (x-m)^order with
    // c_order(xi) in wide.c[order]; (x-m)^order in [0, h^order] (order even).
    Interval point_rem = wide.c[order] * Interval(Rational(0), hp / h);
    acc = acc + point_rem * Rational(2 * h);
    return acc;
  } catch (const DomainError&) {
    return std::nullopt;
  } catch (const DivisionByZeroInterval&) {
    return std::nullopt;
  }
}

}  // namespace detail

// Certified enclosure of the integral of `f` over [a, b] with target width
// `tol`, at the current working precision. Deterministic bisection schedule.
inline QuadResult integrate_compact_at_precision(const ExprPtr& f,
                                                 const Rational& a,
                                                 const Rational& b, double tol,
                                                 const QuadOptions& opt = {}) {
  if (!(a < b)) throw DomainError("integrate_compact: requires a < b");
  QuadResult out;
  out.precision_bits = prec::working_bits();
  Interval sum(0L);
  bool ok = true;
  const double total_len = Rational(b - a).get_d();

  std::function<void(const Rational&, const Rational&, int)> rec =
      [&](const Rational& lo, const Rational& hi, int depth) {
        auto cell = detail::taylor_cell(f, lo, hi, opt.order);
        const double frac = Rational(hi - lo).get_d() / total_len;
        if (cell && cell->width_d() <= tol * frac) {
          sum = sum + *cell;
          return;
        }
        if (depth >= opt.max_depth) {
          if (!cell)
            throw DomainError(
                "integrate_compact: integrand not evaluable on a maximal-depth "
                "subinterval");
          sum = sum + *cell;
          ok = false;
          return;
        }
        const Rational mid = (lo + hi) / 2;
        rec(lo, mid, depth + 1);
        rec(mid, hi, depth + 1);
      };
  rec(a, b, 0);
  out.value = sum;
  out.tol_reached = ok && sum.width_d() <= tol;
  return out;
}

// Precision-doubling driver: retries at doubled working precision (up to
// opt.max_precision_bits) while the tolerance is not reached.
inline QuadResult integrate_compact(const ExprPtr& f, const Rational& a,
                                    const Rational& b, double tol,
                                    const QuadOptions& opt = {}) {
  long bits = prec::working_bits();
  QuadResult best;
  bool have = false;
  while (true) {
    prec::Scope scope(bits);
    QuadResult r = integrate_compact_at_precision(f, a, b, tol, opt);
    if (!have || r.value.width_d() < best.value.width_d()) best = r;
    have = true;
    if (best.tol_reached || bits >= opt.max_precision_bits) return best;
    bits = std::min(2 * bits, opt.max_precision_bits);
  }
}

// Exact-primitive enclosure of int_b^infinity x q(x^2) e^{-x^2/2} dx.
// The primitive is -Q(x^2) e^{-x^2/2} with Q - 2Q' = q (triangular recurrence
// from the top coefficient); only e^{-b^2/2} needs an enclosure.
inline Interval gaussian_poly_tail(const RationalPoly& q, const Rational& b) {
  if (q.is_zero()) return Interval(0L);
  const auto& qc = q.coeffs();
  std::vector<Rational> Q(qc.size());
  for (std::size_t j = qc.size(); j-- > 0;) {
    Q[j] = qc[j];
    if (j + 1 < qc.size())
      Q[j] += Rational(2 * static_cast<long>(j + 1)) * Q[j + 1];
  }
  RationalPoly Qp(std::move(Q));
  const Rational value_at_b = Qp.eval(b * b);
  return Interval(value_at_b) * exp(Interval(-(b * b) / 2));
}

enum class TailSign { NonNegative, NonPositive };

// Enclosure of int_0^infinity q(x^2) e^{-x^2/2} x tanh(pi x) dx given a sign
// certificate for q on [b^2, infinity) (in the u variable).
inline QuadResult trace_integral_q(const RationalPoly& q, const Rational& b,
                                   double tol,
                                   std::optional<TailSign> tail_sign,
                                   const QuadOptions& opt = {}) {
  if (!(b > 0)) throw DomainError("trace_integral: b must be positive");
  if (!tail_sign) throw SignNotConstant();
  using namespace ex;
  ExprPtr x = var();
  ExprPtr f = apply_poly(q, x * x) * exp(-(x * x) / lit(2)) * x *
              tanh(pi() * x);
  QuadResult compact = integrate_compact(f, Rational(0), b, tol, opt);
  // tail of the trace integrand lies between tanh(pi b) * T and T, where
  // T = int_b^inf x q(x^2) e^{-x^2/2} dx; the hull covers both orientations.
  Interval T = gaussian_poly_tail(q, b);
  Interval th = tanh(Interval::pi() * Interval(b));
  Interval tail = Interval::hull(th * T, T);
  QuadResult out = compact;
  out.value = compact.value + tail;
  return out;
}

}  // namespace hyplp
