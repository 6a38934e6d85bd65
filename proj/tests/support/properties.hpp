#pragma once

// Randomized property suites shared by the property tests and the acceptance
// binary. Each returns an empty string on success, otherwise the first failure.

#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "obstruct/forms.hpp"
#include "obstruct/seifert.hpp"
#include "obstruct/smith.hpp"
#include "oracles.hpp"

namespace properties {

using namespace obstruct;

inline std::string seifert_algebra(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::ostringstream fail;
  for (int i = 0; i < count; ++i) {
    const std::size_t genus = 1 + static_cast<std::size_t>(i % 4);
    const IntMatrix raw = oracle::random_seifert(rng, genus);
    const IntMatrix other_raw = oracle::random_seifert(rng, 1 + static_cast<std::size_t>((i / 4) % 3));
    try {
      const SeifertMatrix v(raw);
      const SeifertMatrix w(other_raw);
      if (oracle::laplace_det(raw - raw.transpose()) != 1) fail << "det(V - V^T) != 1 for " << raw;

      const int sv = signature(v);
      if (sv != oracle::signature_by_descartes(raw + raw.transpose())) fail << "signature mismatch for " << raw;
      if (signature(connected_sum(v, w)) != sv + signature(w)) fail << "signature not additive for " << raw;
      if (signature(mirror(v)) != -sv) fail << "mirror signature for " << raw;
      if (signature(concordance_inverse(v)) != -sv) fail << "inverse signature for " << raw;
      if (signature(reverse(v)) != sv) fail << "reverse signature for " << raw;
      // closure: each construction revalidates det(V - V^T) = 1
      (void)parallel_cable(v, 2);
      (void)parallel_cable(v, -1);

      const auto d = alexander_polynomial(v);
      if (!d.is_symmetric()) fail << "Delta not symmetric for " << raw;
      if (d.at_one() != 1) fail << "Delta(1) != 1 for " << raw;
      if (abs(d.at_minus_one()) != abs(oracle::laplace_det(raw + raw.transpose())))
        fail << "|Delta(-1)| != |det(V + V^T)| for " << raw;
      if (!unit_equivalent(alexander_polynomial(mirror(v)), d)) fail << "mirror changes Delta for " << raw;
    } catch (const std::exception& e) {
      fail << "exception for " << raw << ": " << e.what();
    }
    if (!fail.str().empty()) return fail.str();
  }
  return {};
}

inline std::string smith_form(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::ostringstream fail;
  for (int i = 0; i < count; ++i) {
    const std::size_t r = 1 + static_cast<std::size_t>(i % 5);
    const std::size_t c = 1 + static_cast<std::size_t>((i / 5) % 5);
    IntMatrix m(r, c);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b) m(a, b) = entry(rng);
    const auto s = smith_normal_form(m);
    if (s.U * m * s.V != s.D) fail << "D != U M V for " << m;
    if (abs(oracle::laplace_det(s.U)) != 1 || abs(oracle::laplace_det(s.V)) != 1) fail << "non-unimodular factor for " << m;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b)
        if (a != b && s.D(a, b) != 0) fail << "off-diagonal entry for " << m;
    const auto f = s.invariant_factors();
    for (std::size_t k = 0; k + 1 < f.size(); ++k)
      if (f[k + 1] % f[k] != 0) fail << "divisibility fails for " << m;
    if (f != oracle::invariant_factors_by_minors(m)) fail << "invariant factors disagree with minors for " << m;
    if (!fail.str().empty()) return fail.str();
  }
  return {};
}

inline std::string lens_qr(long max_p) {
  for (long p = 2; p <= max_p; ++p)
    for (long q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1 && lens_qr_bounding(p, q) != oracle::qr_bounds_brute(p, q))
        return "mismatch at L(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return {};
}

}  // namespace properties
