// Gaussian-polynomial test-function pairs: f(x) = p(x^2) e^{-x^2/2} with
// Fourier partner fhat(y) = q(y^2) e^{-y^2/2}, where q is the image of p
// under the transform that is diagonal with eigenvalues (-1)^n in the
// generalized Laguerre basis L_n^{(-1/2)}.
#pragma once

#include <hyplp/interval.hpp>
#include <hyplp/matrix.hpp>
#include <hyplp/poly.hpp>
#include <hyplp/quad.hpp>

#include <optional>
#include <variant>
#include <vector>

namespace hyplp {

// L_n^{(-1/2)} via the three-term recurrence
// (n+1) L_{n+1} = (2n + 1/2 - u) L_n - (n - 1/2) L_{n-1}.
inline RationalPoly laguerre_basis(std::size_t n) {
  RationalPoly prev = RationalPoly::constant(Rational(1));  // L_0
  if (n == 0) return prev;
  RationalPoly cur(std::vector<Rational>{rat(1, 2), Rational(-1)});  // L_1
  for (std::size_t k = 1; k < n; ++k) {
    RationalPoly lin(std::vector<Rational>{
        Rational(2 * static_cast<long>(k)) + rat(1, 2), Rational(-1)});
    RationalPoly next =
        (lin * cur - (Rational(static_cast<long>(k)) - rat(1, 2)) * prev) *
        Rational(1, static_cast<long>(k + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Exact expansion of p in the L_n^{(-1/2)} basis (index = Laguerre mode).
inline std::vector<Rational> laguerre_coefficients(const RationalPoly& p) {
  if (p.is_zero()) return {};
  const int d = p.degree();
  std::vector<RationalPoly> basis(d + 1);
  for (int n = 0; n <= d; ++n) basis[n] = laguerre_basis(n);
  std::vector<Rational> coeffs(d + 1, Rational(0));
  RationalPoly rem = p;
  for (int n = d; n >= 0; --n) {
    if (rem.degree() < n) continue;
    Rational c = rem.coeff(n) / basis[n].coeff(n);
    coeffs[n] = c;
    rem = rem - c * basis[n];
  }
  if (!rem.is_zero()) throw DomainError("laguerre_coefficients: nonzero residue");
  return coeffs;
}

inline RationalPoly from_laguerre_coefficients(
    const std::vector<Rational>& coeffs) {
  RationalPoly p;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (sgn(coeffs[n]) == 0) continue;
    p = p + coeffs[n] * laguerre_basis(n);
  }
  return p;
}

// The Fourier transform on the polynomial part: diagonal (-1)^n in the
// Laguerre basis.
inline RationalPoly laguerre_transform(const RationalPoly& p) {
  auto c = laguerre_coefficients(p);
  for (std::size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
  return from_laguerre_coefficients(c);
}

// coefficient * e^{exponent}, exactly.
struct ExpScaledRational {
  Rational coefficient;
  Rational exponent;
  Interval enclose() const {
    return Interval::exp_scaled(coefficient, exponent);
  }
  bool is_zero() const { return sgn(coefficient) == 0; }
};

struct GaussianPair {
  RationalPoly p;  // f(x)  = p(x^2) e^{-x^2/2}
  RationalPoly q;  // fh(y) = q(y^2) e^{-y^2/2}

  static GaussianPair from_p(RationalPoly p) {
    RationalPoly q = laguerre_transform(p);
    return GaussianPair{std::move(p), std::move(q)};
  }
  static GaussianPair from_q(RationalPoly q) {
    RationalPoly p = laguerre_transform(q);
    return GaussianPair{std::move(p), std::move(q)};
  }
};

inline ExpScaledRational eval_f(const GaussianPair& pair, const Rational& x) {
  return {pair.p.eval(x * x), -(x * x) / 2};
}
inline ExpScaledRational eval_fhat(const GaussianPair& pair,
                                   const Rational& y) {
  return {pair.q.eval(y * y), -(y * y) / 2};
}
// fhat(i/2) = q(-1/4) e^{1/8}.
inline ExpScaledRational eval_fhat_i_half(const GaussianPair& pair) {
  return {pair.q.eval(rat(-1, 4)), rat(1, 8)};
}

// Fixed high-accuracy continued-fraction convergent of e^{1/8} (error
// ~1.3e-39), used wherever a constraint row needs e^{1/8} as a rational.
inline const Rational& e_eighth_convergent() {
  static const Rational v =
      parse_rational("2520469113505390801/2224306185728648399");
  return v;
}

// ---- linear constraints on a pair, in the Laguerre coefficient basis ----

struct LinearConstraint {
  struct FDoubleZero {
    Rational x0;
  };
  struct FhatDoubleZero {
    Rational y0;
  };
  struct FhatValueAtIHalf {
    Rational target;  // q(-1/4) * e_eighth_convergent() = target
  };
  struct Normalization {
    std::size_t index;  // Laguerre mode index
    Rational value;
  };
  struct Generic {
    std::vector<Rational> row;  // over Laguerre coefficients c_0..c_d
    Rational rhs;
  };
  std::variant<FDoubleZero, FhatDoubleZero, FhatValueAtIHalf, Normalization,
               Generic>
      kind;
};

namespace detail {

// Row of L_n(u0) (optionally derivative), with sign (-1)^n when the
// constraint addresses q rather than p.
inline std::vector<Rational> laguerre_eval_row(std::size_t degree,
                                               const Rational& u0,
                                               bool derivative,
                                               bool alternate) {
  std::vector<Rational> row(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) {
    RationalPoly L = laguerre_basis(n);
    if (derivative) L = L.derivative();
    Rational v = L.eval(u0);
    if (alternate && (n % 2 == 1)) v = -v;
    row[n] = v;
  }
  return row;
}

}  // namespace detail

// Solves for the unique pair of the given degree meeting all constraints.
// The system has degree+1 unknown Laguerre coefficients, so exactly
// degree+1 constraint rows are required (double zeros contribute two rows
// each, except a zero imposed at the origin, which contributes one).
inline GaussianPair build_pair(int degree,
                               const std::vector<LinearConstraint>& constraints) {
  if (degree < 0) throw DomainError("build_pair: negative degree");
  const std::size_t d = static_cast<std::size_t>(degree);
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  auto push = [&](std::vector<Rational> row, Rational r) {
    rows.push_back(std::move(row));
    rhs.push_back(std::move(r));
  };
  for (const auto& c : constraints) {
    if (auto* fz = std::get_if<LinearConstraint::FDoubleZero>(&c.kind)) {
      const Rational u0 = fz->x0 * fz->x0;
      push(detail::laguerre_eval_row(d, u0, false, false), Rational(0));
      if (sgn(fz->x0) != 0)
        push(detail::laguerre_eval_row(d, u0, true, false), Rational(0));
    } else if (auto* qz =
                   std::get_if<LinearConstraint::FhatDoubleZero>(&c.kind)) {
      const Rational u0 = qz->y0 * qz->y0;
      push(detail::laguerre_eval_row(d, u0, false, true), Rational(0));
      if (sgn(qz->y0) != 0)
        push(detail::laguerre_eval_row(d, u0, true, true), Rational(0));
    } else if (auto* ih =
                   std::get_if<LinearConstraint::FhatValueAtIHalf>(&c.kind)) {
      auto row = detail::laguerre_eval_row(d, rat(-1, 4), false, true);
      for (auto& v : row) v *= e_eighth_convergent();
      push(std::move(row), ih->target);
    } else if (auto* nm =
                   std::get_if<LinearConstraint::Normalization>(&c.kind)) {
      if (nm->index > d) throw DomainError("normalization index out of range");
      std::vector<Rational> row(d + 1, Rational(0));
      row[nm->index] = 1;
      push(std::move(row), nm->value);
    } else if (auto* gn = std::get_if<LinearConstraint::Generic>(&c.kind)) {
      if (gn->row.size() != d + 1)
        throw DomainError("generic constraint row has wrong length");
      push(gn->row, gn->rhs);
    }
  }
  if (rows.size() != d + 1)
    throw SingularSystem("build_pair: need exactly degree+1 constraint rows, got " +
                         std::to_string(rows.size()));
  RationalMatrix A(d + 1, d + 1);
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; j <= d; ++j) A.at(i, j) = rows[i][j];
  std::vector<Rational> coeffs = solve_linear(A, rhs);
  RationalPoly p = from_laguerre_coefficients(coeffs);
  for (std::size_t n = 1; n < coeffs.size(); n += 2) coeffs[n] = -coeffs[n];
  RationalPoly q = from_laguerre_coefficients(coeffs);
  return GaussianPair{std::move(p), std::move(q)};
}

// Enclosure of int_0^infinity fhat(x) x tanh(pi x) dx for the pair, with a
// caller-supplied sign certificate for q beyond b.
inline QuadResult trace_integral(const GaussianPair& pair, const Rational& b,
                                 double tol,
                                 std::optional<TailSign> tail_sign,
                                 const QuadOptions& opt = {}) {
  return trace_integral_q(pair.q, b, tol, tail_sign, opt);
}

}  // namespace hyplp
