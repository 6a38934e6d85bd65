#pragma once

// Symmetric unimodular integer forms: parity, signature, the indefinite even
// classification aE8 + bH, splittings constrained by Rohlin invariants, and the
// lens-space quadratic-residue criterion.

#include <optional>
#include <string>
#include <vector>

#include "obstruct/matrix.hpp"

namespace obstruct {

class SymUnimodularForm {
 public:
  /// The rank-0 form.
  SymUnimodularForm() = default;
  /// Throws unless q is symmetric with |det q| = 1.
  explicit SymUnimodularForm(IntMatrix q);

  const IntMatrix& matrix() const { return q_; }
  std::size_t rank() const { return q_.rows(); }

  /// Positive definite E8 (Cartan matrix of the E8 root system).
  static SymUnimodularForm e8();
  static SymUnimodularForm hyperbolic();
  SymUnimodularForm negated() const;
  friend SymUnimodularForm operator+(const SymUnimodularForm& a, const SymUnimodularForm& b);

 private:
  IntMatrix q_;
};

enum class Parity { Even, Odd };

Parity parity(const SymUnimodularForm& q);
int exact_signature(const SymUnimodularForm& q);
bool is_definite(const SymUnimodularForm& q);

/// e8_count copies of E8 (negated when e8_count < 0) plus h_count copies of H.
struct EvenFormClass {
  long e8_count = 0;
  long h_count = 0;

  long rank() const { return 8 * (e8_count < 0 ? -e8_count : e8_count) + 2 * h_count; }
  long signature() const { return 8 * e8_count; }
  std::string to_string() const;
  SymUnimodularForm realize() const;
  friend bool operator==(const EvenFormClass&, const EvenFormClass&) = default;
};

/// Throws for odd forms and for nonzero definite forms.
EvenFormClass classify_indefinite_even(const SymUnimodularForm& q);

/// sigma == residue (mod 16).
struct SignatureCongruence {
  long residue = 0;
  bool admits(long signature) const;
  std::string to_string() const;
  friend bool operator==(const SignatureCongruence&, const SignatureCongruence&) = default;
};

/// Even forms bounded by a homology sphere with Rohlin invariant rho have
/// sigma == 8 rho (mod 16).
SignatureCongruence rohlin_constraint(int rho);

struct Splitting {
  EvenFormClass first;
  EvenFormClass second;
  friend bool operator==(const Splitting&, const Splitting&) = default;
};

/// All ordered pairs of even classes whose ranks and signatures add up to the
/// total and satisfy the per-side congruences (absent = unconstrained).
std::vector<Splitting> enumerate_even_splittings(const EvenFormClass& total,
                                                 const std::optional<SignatureCongruence>& first,
                                                 const std::optional<SignatureCongruence>& second);

/// Residues k^2 mod p for k in [0, p).
std::vector<long> quadratic_residues(long p);

/// True iff q or -q is a square mod p. Requires 0 < q < p, gcd(p, q) = 1.
bool lens_qr_bounding(long p, long q);

}  // namespace obstruct
