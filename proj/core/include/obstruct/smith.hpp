#pragma once

#include "obstruct/matrix.hpp"

namespace obstruct {

/// D = U * M * V with D diagonal, d_1 | d_2 | ..., all d_i >= 0, and U, V
/// unimodular integer matrices.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Nonzero diagonal entries of D in order.
  std::vector<Int> invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m:
/// nonzero rows only, pivots positive and strictly moving right, entries above
/// each pivot reduced into [0, pivot).
IntMatrix row_hermite_form(const IntMatrix& m);

}  // namespace obstruct
