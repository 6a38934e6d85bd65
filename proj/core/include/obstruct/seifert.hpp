#pragma once

// Seifert forms of knots in S^3 and the concordance obstructions computable
// from them.
//
// Conventions: V is the Seifert matrix lk(a_i, a_j+). The signature is that of
// V + V^T; the right-handed trefoil T(2,3) has signature -2. The Alexander
// polynomial is det(V - t V^T), centered and signed so that Delta(1) = 1.

#include <optional>
#include <string>

#include "obstruct/laurent.hpp"
#include "obstruct/matrix.hpp"

namespace obstruct {

class SeifertMatrix {
 public:
  /// The unknot (genus 0).
  SeifertMatrix() = default;
  /// Throws unless V is square of even size with det(V - V^T) = 1.
  explicit SeifertMatrix(IntMatrix v);

  const IntMatrix& matrix() const { return v_; }
  std::size_t size() const { return v_.rows(); }
  std::size_t genus() const { return v_.rows() / 2; }

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.v_ == b.v_; }

 private:
  IntMatrix v_;
};

/// Fence-diagram basis of the fibre surface of T(p,q): the negated tensor
/// product of the (p-1) and (q-1) A-type variation matrices. A negative
/// parameter gives the mirror; both negative gives the reverse.
SeifertMatrix torus_knot_seifert(long p, long q);

enum class Clasp { Positive, Negative };

/// Untwisted Whitehead double with the given clasp; independent of the
/// companion.
SeifertMatrix whitehead_double_seifert(Clasp clasp);

/// Genus-one family [[-1, 1], [0, m]]: m = 1 figure-eight, m = 2 stevedore,
/// m = -1 right-handed trefoil, m = 0 unknot.
SeifertMatrix twist_knot_seifert(long m);

SeifertMatrix mirror(const SeifertMatrix& v);          // -V^T
SeifertMatrix reverse(const SeifertMatrix& v);         // V^T
SeifertMatrix concordance_inverse(const SeifertMatrix& v);  // -V, the class of -K
SeifertMatrix connected_sum(const SeifertMatrix& v, const SeifertMatrix& w);

/// Seifert form of the (n,1)-cable from |n| parallel copies of the surface,
/// stacked along the positive normal: block (i, j) is V for i <= j and V^T
/// for i > j. Negative n yields the reverse of the |n|-copy surface. Throws
/// for n = 0.
SeifertMatrix parallel_cable(const SeifertMatrix& v, long n);

int signature(const SeifertMatrix& v);

/// Raw det(V - t V^T) as a polynomial in t.
IntPoly alexander_determinant(const SeifertMatrix& v);
LaurentPoly alexander_polynomial(const SeifertMatrix& v);

// ---------------------------------------------------------------------------
// Fox-Milnor

class DegreeBoundExceeded : public Error {
 public:
  using Error::Error;
};

struct FoxMilnorResult {
  bool passes = false;
  /// On success: f with Delta == f(t) f(t^-1) up to units.
  std::optional<LaurentPoly> factor;
  /// |Delta(-1)|, always reported.
  Int determinant;
  /// Human-readable reason for failure.
  std::string witness;
};

inline constexpr long kDefaultFoxMilnorDegreeBound = 16;

/// Decides whether Delta == f(t) f(t^-1) up to units by exact factorization
/// over Z. Throws DegreeBoundExceeded when the span of Delta exceeds the bound
/// and the determinant test alone cannot decide.
FoxMilnorResult fox_milnor(const LaurentPoly& delta, long degree_bound = kDefaultFoxMilnorDegreeBound);

// ---------------------------------------------------------------------------

enum class SliceTag { ObstructedBySignature, ObstructedByFoxMilnor, Unknown };

std::string to_string(SliceTag tag);

struct SliceVerdict {
  SliceTag tag = SliceTag::Unknown;
  int signature = 0;
  LaurentPoly alexander;
  std::optional<FoxMilnorResult> fox_milnor;
  /// Set when Fox-Milnor could not run within the degree bound.
  std::optional<std::string> note;

  bool obstructed() const { return tag != SliceTag::Unknown; }
  std::string witness() const;
};

/// Signature first, then Fox-Milnor; never claims sliceness.
SliceVerdict algebraic_slice_verdict(const SeifertMatrix& v,
                                     long degree_bound = kDefaultFoxMilnorDegreeBound);

}  // namespace obstruct
