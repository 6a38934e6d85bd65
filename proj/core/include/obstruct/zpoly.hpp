#pragma once

// Dense univariate polynomials over Z and their factorization into
// irreducibles (Berlekamp mod p, Hensel lifting, factor recombination).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "obstruct/matrix.hpp"

namespace obstruct {

class IntPoly {
 public:
  IntPoly() = default;
  /// Coefficients from the constant term upwards.
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }
  static IntPoly monomial(const Int& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Int& operator[](std::size_t i) const { return coeffs_[i]; }
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  const Int& leading() const { return coeffs_.back(); }
  const std::vector<Int>& coefficients() const { return coeffs_; }

  Int evaluate(const Int& x) const;
  Int content() const;
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  /// t^deg * f(1/t)
  IntPoly reciprocal() const;
  /// Multiply by -1 if needed so the leading coefficient is positive.
  IntPoly with_positive_leading() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Int& s, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// Exact quotient a / b over Z, or nullopt when b does not divide a.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

/// Divide every coefficient by an integer that is known to divide them.
IntPoly divide_exact(const IntPoly& a, const Int& d);

/// Primitive gcd with positive leading coefficient (0 if both are 0).
IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b);

struct Factorization {
  Int unit;  // content with sign
  std::vector<std::pair<IntPoly, unsigned>> factors;  // primitive irreducibles, positive leading coefficient

  IntPoly expand() const;
};

/// Complete factorization over Z. Factors are sorted by degree, then
/// coefficients, for deterministic output.
Factorization factor(const IntPoly& f);

IntPoly determinant(const Matrix<IntPoly>& m);

}  // namespace obstruct
