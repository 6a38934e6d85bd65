#pragma once

// Homology and linking numbers in the boundary of a surgery presentation.
//
// Linking numbers of homologically trivial curves in the surgered manifold Y
// follow Hoste's formula
//
//   lk_Y(s, e) = lk_S3(s, e) - a B^-1 b^T
//
// where B is the linking matrix and a, b are the component-linking vectors of
// s and e. For s = e the S^3 term is the linking of s with its pushoff.

#include <optional>
#include <string>
#include <vector>

#include "obstruct/matrix.hpp"
#include "obstruct/surgery.hpp"

namespace obstruct {

struct HomologyReport {
  std::vector<Int> torsion_coefficients;  // each > 1, d_1 | d_2 | ...
  std::size_t free_rank = 0;
  bool is_homology_sphere = false;

  /// e.g. "Z^1 + Z/5"; "0" for a homology sphere.
  std::string describe() const;
};

HomologyReport first_homology(const IntMatrix& linking_matrix);

Rational hoste_linking(const IntMatrix& linking_matrix, const std::vector<Int>& sigma_linkings,
                       const std::vector<Int>& eta_linkings, const Int& s3_linking);

/// Uses sigma's pushoff self-linking when the ids agree, otherwise lk(sigma,
/// eta+) from the cross pushoff data of either curve.
Rational hoste_linking(const IntMatrix& linking_matrix, const CurveSpec& sigma, const CurveSpec& eta);

/// Q(x, y) = a x^2 + b xy + c y^2: the linking in Y of x[alpha] + y[beta] with
/// its pushoff on the torus. Coefficients are integral whenever |det B| = 1.
struct SelfLinkingForm {
  Rational a;
  Rational b;
  Rational c;

  Rational operator()(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }
  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  bool is_integral() const;
  friend bool operator==(const SelfLinkingForm&, const SelfLinkingForm&) = default;
};

SelfLinkingForm self_linking_form(const IntMatrix& linking_matrix, const TorusCurveBasis& basis);

/// A class x[alpha] + y[beta] in H_1 of the torus.
struct TorusClass {
  Int x;
  Int y;
  friend bool operator==(const TorusClass&, const TorusClass&) = default;
};

/// Sign-normalize: y > 0, or y = 0 and x > 0.
TorusClass canonical_sign(TorusClass c);

struct ZeroClasses {
  bool all_classes = false;  // the form vanishes identically
  std::vector<TorusClass> classes;  // primitive, canonical sign, sorted
};

/// Primitive classes with Q = 0, found by factoring Q over Z.
ZeroClasses zero_classes(const SelfLinkingForm& form);

}  // namespace obstruct
