#include "obstruct/matrix.hpp"

#include <sstream>

namespace obstruct {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix inverse(const IntMatrix& m) {
  if (!m.is_square()) throw Error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = to_rational(m);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular over Q");
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    const Rational pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = -a(i, k);
      a.add_row(i, k, f);
      inv.add_row(i, k, f);
    }
  }
  return inv;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

Inertia congruence_inertia(const IntMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw Error("congruence diagonalization needs a symmetric matrix");
  RatMatrix a = to_rational(symmetric);
  const std::size_t n = a.rows();
  Inertia result;
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      // Zero diagonal: find an off-diagonal entry and fold it onto the diagonal
      // with e_i -> e_i + e_j, which puts 2 a_ij in position (i, i).
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      a.add_row(pi, pj, Rational(1));
      a.add_col(pi, pj, Rational(1));
      pivot = pi;
    }
    a.swap_rows(k, pivot);
    a.swap_cols(k, pivot);
    const Rational d = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rational f = -a(r, k) / d;
      a.add_row(r, k, f);
      a.add_col(r, k, f);
    }
    if (d > 0)
      ++result.positive;
    else
      ++result.negative;
  }
  result.zero = static_cast<int>(n - k);
  return result;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

}  // namespace obstruct
