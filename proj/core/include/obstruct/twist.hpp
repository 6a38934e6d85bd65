#pragma once

// Dehn twists along a torus, modeled by their classes in H_1(T) = Z^2.
// Composition of twists is addition of classes, so the twists that extend over
// a 4-manifold form a subgroup of Z^2.

#include <optional>
#include <string>
#include <vector>

#include "obstruct/matrix.hpp"

namespace obstruct {

enum class TorusBasis { AlphaBeta, MuLambda };

std::string to_string(TorusBasis b);

struct TwistClass {
  Int x;
  Int y;
  TorusBasis basis = TorusBasis::AlphaBeta;

  std::string to_string() const;
  friend bool operator==(const TwistClass&, const TwistClass&) = default;
};

/// f_{a+b} = f_a o f_b. Throws on basis mismatch.
TwistClass compose(const TwistClass& a, const TwistClass& b);
TwistClass inverse(const TwistClass& a);

/// Subgroup of Z^2 in row Hermite normal form.
struct Subgroup2 {
  TorusBasis basis = TorusBasis::AlphaBeta;
  IntMatrix generators;  // rank x 2
  std::size_t rank = 0;
  std::optional<Int> index;  // nullopt = infinite

  bool is_everything() const { return index && *index == 1; }
  std::string to_string() const;
};

Subgroup2 extension_subgroup(const std::vector<TwistClass>& extending, TorusBasis basis = TorusBasis::AlphaBeta);

/// Orbit of the Seifert fibration on the peripheral torus of T(p,q):
/// lambda + pq mu, as (pq, 1) in the (mu, lambda) basis.
TwistClass seifert_orbit_class(long p, long q);

/// Inverse of alpha -> mu, beta -> mu + lambda.
TwistClass to_alpha_beta(const TwistClass& c);
TwistClass to_mu_lambda(const TwistClass& c);

}  // namespace obstruct
