// Exact rational dense matrices and linear solving by Gaussian elimination.
#pragma once

#include <hyplp/rational.hpp>

#include <cstddef>
#include <vector>

namespace hyplp {

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {
    if (rows == 0 || cols == 0) throw DomainError("empty matrix");
  }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

// Exact solve of A x = b for square nonsingular A. Pivot choice: the entry of
// smallest representation in the pivot column (keeps intermediate fractions
// small); any nonzero pivot is exact, so the choice affects speed only.
inline std::vector<Rational> solve_linear(RationalMatrix A,
                                          std::vector<Rational> b) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw SingularSystem("solve_linear: matrix not square");
  if (b.size() != n) throw SingularSystem("solve_linear: size mismatch");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    std::size_t best_size = 0;
    for (std::size_t i = k; i < n; ++i) {
      const Rational& v = A.at(perm[i], k);
      if (sgn(v) == 0) continue;
      std::size_t sz = mpz_sizeinbase(v.get_num().get_mpz_t(), 2) +
                       mpz_sizeinbase(v.get_den().get_mpz_t(), 2);
      if (piv == n || sz < best_size) {
        piv = i;
        best_size = sz;
      }
    }
    if (piv == n) throw SingularSystem("solve_linear: zero pivot column");
    std::swap(perm[k], perm[piv]);
    const std::size_t rk = perm[k];
    const Rational pivot = A.at(rk, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::size_t ri = perm[i];
      if (sgn(A.at(ri, k)) == 0) continue;
      Rational f = A.at(ri, k) / pivot;
      A.at(ri, k) = 0;
      for (std::size_t j = k + 1; j < n; ++j) A.at(ri, j) -= f * A.at(rk, j);
      b[ri] -= f * b[rk];
    }
  }

  std::vector<Rational> x(n, Rational(0));
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t rk = perm[k];
    Rational acc = b[rk];
    for (std::size_t j = k + 1; j < n; ++j) acc -= A.at(rk, j) * x[j];
    x[k] = acc / A.at(rk, k);
  }
  return x;
}

}  // namespace hyplp
