#pragma once

#include <map>
#include <string>
#include <vector>

#include "obstruct/zpoly.hpp"

namespace obstruct {

/// Integer Laurent polynomial sum_k c_k t^k over a finite exponent range.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const IntPoly& p, long shift = 0);
  static LaurentPoly from_terms(const std::map<long, Int>& terms);
  static LaurentPoly constant(const Int& c) { return LaurentPoly(IntPoly::constant(c)); }

  bool is_zero() const { return coeffs_.empty(); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  long span() const { return is_zero() ? 0 : high() - low(); }
  Int coeff(long exponent) const;
  std::map<long, Int> terms() const;

  /// Value at t = 1 or t = -1.
  Int at_one() const;
  Int at_minus_one() const;

  LaurentPoly conjugate() const;                  // t -> t^-1
  LaurentPoly substitute_power(long n) const;     // t -> t^n
  LaurentPoly shifted(long k) const;              // t^k * this
  /// The polynomial t^-low * this, with nonzero constant term.
  IntPoly to_polynomial() const;

  /// Centered on exponent 0 (low = -floor(span / 2)) and signed so that the
  /// value at t = 1 is positive (or, if that vanishes, the top coefficient).
  LaurentPoly normalized() const;
  bool is_symmetric() const { return *this == conjugate(); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Descending exponents, e.g. "t - 1 + t^-1".
  std::string to_string() const;

 private:
  void trim();
  long low_ = 0;
  std::vector<Int> coeffs_;
};

/// Equality up to multiplication by units +-t^k.
bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace obstruct
