#pragma once

// Slow, independent reference computations. Nothing here calls the library's
// algorithms; only its value types are shared.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "obstruct/matrix.hpp"

namespace oracle {

using obstruct::Int;
using obstruct::IntMatrix;
using obstruct::Rational;

// cofactor expansion along the first row
inline Int laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Int term = m(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

// Faddeev-LeVerrier, coefficients from the constant term up (monic).
inline std::vector<Rational> char_poly(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += Rational(a(i, l)) * m[l][j];
        next[i][j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    m = next;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += Rational(a(i, l)) * m[l][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

inline int sign_changes(const std::vector<Rational>& c) {
  int changes = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Symmetric matrices have only real eigenvalues, so Descartes' rule is exact.
inline int signature_by_descartes(const IntMatrix& sym) {
  auto c = char_poly(sym);
  std::size_t zero = 0;
  while (zero < c.size() && c[zero] == 0) ++zero;
  std::vector<Rational> tail(c.begin() + static_cast<long>(zero), c.end());
  std::vector<Rational> neg = tail;
  for (std::size_t i = 0; i < neg.size(); ++i)
    if ((i + zero) % 2 == 1) neg[i] = -neg[i];
  return sign_changes(tail) - sign_changes(neg);
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// d_k = gcd of k x k minors; invariant factors are d_k / d_{k-1}.
inline std::vector<Int> invariant_factors_by_minors(const IntMatrix& m) {
  std::vector<Int> out;
  Int prev = 1;
  const std::size_t r = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    combinations(m.rows(), k, rs);
    combinations(m.cols(), k, cs);
    Int g = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(ri[i], ci[j]);
        Int d = laplace_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline bool qr_bounds_brute(long p, long q) {
  for (long k = 0; k < p; ++k) {
    const long s = k * k % p;
    if (s == q % p || s == (p - q % p) % p) return true;
  }
  return false;
}

// Integer polynomials as plain coefficient vectors.
using Poly = std::vector<long long>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Poly binomial(long degree) {  // t^d - 1
  Poly r(static_cast<std::size_t>(degree) + 1, 0);
  r[0] = -1;
  r.back() = 1;
  return r;
}

// Signature of T(p,q) by counting lattice points: -#{1/2 < i/p + j/q < 3/2} + #rest.
inline int torus_signature(long p, long q) {
  int s = 0;
  for (long i = 1; i < p; ++i)
    for (long j = 1; j < q; ++j) {
      const long num = 2 * (i * q + j * p);  // 2 pq x
      s += (num > p * q && num < 3 * p * q) ? -1 : 1;
    }
  return s;
}

// Random Seifert matrix: symmetric part plus the standard symplectic half,
// conjugated by a random unimodular matrix.
inline IntMatrix random_seifert(std::mt19937_64& rng, std::size_t genus, long range = 2) {
  const std::size_t n = 2 * genus;
  std::uniform_int_distribution<long> d(-range, range);
  IntMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) v(i, j) = v(j, i) = d(rng);
  for (std::size_t k = 0; k < genus; ++k) v(2 * k, 2 * k + 1) += 1;
  IntMatrix p = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> f(-1, 1);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    const auto a = pick(rng);
    const auto b = pick(rng);
    if (a != b) p.add_col(a, b, Int(f(rng)));
  }
  return p.transpose() * v * p;
}

}  // namespace oracle
