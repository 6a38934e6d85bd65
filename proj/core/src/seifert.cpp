#include "obstruct/seifert.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace obstruct {

SeifertMatrix::SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
  if (!v_.is_square()) throw Error("Seifert matrix must be square");
  if (v_.rows() % 2 != 0) throw Error("Seifert matrix must have even size");
  if (determinant(v_ - v_.transpose()) != 1)
    throw Error("Seifert matrix must satisfy det(V - V^T) = 1, got " + determinant(v_ - v_.transpose()).get_str());
}

namespace {

// (n-1)x(n-1): 1 on the diagonal, -1 on the superdiagonal.
IntMatrix a_type_variation(long n) {
  const auto k = static_cast<std::size_t>(n - 1);
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    m(i, i) = 1;
    if (i + 1 < k) m(i, i + 1) = -1;
  }
  return m;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

}  // namespace

SeifertMatrix torus_knot_seifert(long p, long q) {
  const long ap = std::labs(p), aq = std::labs(q);
  if (ap < 2 || aq < 2) throw Error("torus knot parameters need |p|, |q| >= 2");
  if (std::gcd(ap, aq) != 1) throw Error("torus knot parameters must be coprime");
  SeifertMatrix v(-kronecker(a_type_variation(ap), a_type_variation(aq)));
  if (p < 0 && q < 0) return reverse(v);
  if (p < 0 || q < 0) return mirror(v);
  return v;
}

SeifertMatrix whitehead_double_seifert(Clasp clasp) {
  return clasp == Clasp::Positive ? SeifertMatrix(IntMatrix{{-1, 1}, {0, 0}})
                                  : SeifertMatrix(IntMatrix{{1, 1}, {0, 0}});
}

SeifertMatrix twist_knot_seifert(long m) {
  IntMatrix v{{-1, 1}, {0, 0}};
  v(1, 1) = m;
  return SeifertMatrix(std::move(v));
}

SeifertMatrix mirror(const SeifertMatrix& v) { return SeifertMatrix(-v.matrix().transpose()); }
SeifertMatrix reverse(const SeifertMatrix& v) { return SeifertMatrix(v.matrix().transpose()); }
SeifertMatrix concordance_inverse(const SeifertMatrix& v) { return SeifertMatrix(-v.matrix()); }

SeifertMatrix connected_sum(const SeifertMatrix& v, const SeifertMatrix& w) {
  return SeifertMatrix(block_diagonal(v.matrix(), w.matrix()));
}

SeifertMatrix parallel_cable(const SeifertMatrix& v, long n) {
  if (n == 0) throw Error("parallel cable needs n != 0");
  const IntMatrix block = n > 0 ? v.matrix() : v.matrix().transpose();
  const IntMatrix block_t = block.transpose();
  const auto copies = static_cast<std::size_t>(std::labs(n));
  const std::size_t s = block.rows();
  IntMatrix m(s * copies, s * copies);
  for (std::size_t bi = 0; bi < copies; ++bi)
    for (std::size_t bj = 0; bj < copies; ++bj) {
      const IntMatrix& src = bi <= bj ? block : block_t;
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) m(bi * s + i, bj * s + j) = src(i, j);
    }
  return SeifertMatrix(std::move(m));
}

int signature(const SeifertMatrix& v) {
  return congruence_inertia(v.matrix() + v.matrix().transpose()).signature();
}

IntPoly alexander_determinant(const SeifertMatrix& v) {
  const IntMatrix& a = v.matrix();
  const std::size_t n = a.rows();
  Matrix<IntPoly> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = IntPoly(std::vector<Int>{a(i, j), -a(j, i)});
  return determinant(m);
}

LaurentPoly alexander_polynomial(const SeifertMatrix& v) {
  const IntPoly d = alexander_determinant(v);
  if (d.is_zero()) throw Error("det(V - tV^T) vanishes identically");
  return LaurentPoly(d).normalized();
}

// ---------------------------------------------------------------------------

FoxMilnorResult fox_milnor(const LaurentPoly& delta, long degree_bound) {
  if (delta.is_zero()) throw Error("Fox-Milnor test of the zero polynomial");
  const LaurentPoly d = delta.normalized();
  FoxMilnorResult out;
  out.determinant = abs(d.at_minus_one());
  if (!mpz_perfect_square_p(out.determinant.get_mpz_t())) {
    out.witness = "|Delta(-1)| = " + out.determinant.get_str() + " is not a perfect square";
    return out;
  }
  if (d.span() > degree_bound)
    throw DegreeBoundExceeded("Fox-Milnor factorization skipped: span " + std::to_string(d.span()) +
                              " exceeds the degree bound " + std::to_string(degree_bound));

  const Factorization fac = factor(d.to_polynomial());
  Int unit_abs = abs(fac.unit);
  if (!mpz_perfect_square_p(unit_abs.get_mpz_t())) {
    out.witness = "content " + unit_abs.get_str() + " is not a perfect square";
    return out;
  }
  IntPoly f = IntPoly::constant(sqrt(unit_abs));
  for (const auto& [g, m] : fac.factors) {
    const IntPoly r = g.reciprocal().with_positive_leading();
    if (r == g) {
      if (m % 2 != 0) {
        out.witness = "symmetric factor " + g.to_string() + " has odd multiplicity " + std::to_string(m);
        return out;
      }
      for (unsigned k = 0; k < m / 2; ++k) f = f * g;
      continue;
    }
    auto partner = std::find_if(fac.factors.begin(), fac.factors.end(), [&](const auto& e) { return e.first == r; });
    if (partner == fac.factors.end() || partner->second != m) {
      out.witness = "factor " + g.to_string() + " is not matched by its reciprocal " + r.to_string();
      return out;
    }
    // Take one representative of each {g, g*} pair: the one listed first.
    if (partner < std::find_if(fac.factors.begin(), fac.factors.end(), [&](const auto& e) { return e.first == g; }))
      continue;
    for (unsigned k = 0; k < m; ++k) f = f * g;
  }
  const LaurentPoly lf(f);
  if (!unit_equivalent(lf * lf.conjugate(), d)) throw Error("internal error: Fox-Milnor factor does not reproduce Delta");
  out.passes = true;
  out.factor = lf;
  return out;
}

std::string to_string(SliceTag tag) {
  switch (tag) {
    case SliceTag::ObstructedBySignature:
      return "ObstructedBySignature";
    case SliceTag::ObstructedByFoxMilnor:
      return "ObstructedByFoxMilnor";
    case SliceTag::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::string SliceVerdict::witness() const {
  switch (tag) {
    case SliceTag::ObstructedBySignature:
      return "signature = " + std::to_string(signature);
    case SliceTag::ObstructedByFoxMilnor:
      return fox_milnor ? fox_milnor->witness : std::string{};
    case SliceTag::Unknown:
      return note.value_or("no obstruction found");
  }
  return {};
}

SliceVerdict algebraic_slice_verdict(const SeifertMatrix& v, long degree_bound) {
  SliceVerdict out;
  out.signature = signature(v);
  out.alexander = alexander_polynomial(v);
  if (out.signature != 0) {
    out.tag = SliceTag::ObstructedBySignature;
    return out;
  }
  try {
    out.fox_milnor = fox_milnor(out.alexander, degree_bound);
    out.tag = out.fox_milnor->passes ? SliceTag::Unknown : SliceTag::ObstructedByFoxMilnor;
  } catch (const DegreeBoundExceeded& e) {
    out.note = e.what();
  }
  return out;
}

}  // namespace obstruct
