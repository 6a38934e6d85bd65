#include <doctest.h>

#include <algorithm>

#include "obstruct/linking.hpp"

using namespace obstruct;

namespace {

// lk_Y(x alpha + y beta, its pushoff) straight from bilinearity of the
// two-curve formula.
Rational grid_value(const IntMatrix& b, const TorusCurveBasis& t, long x, long y) {
  auto lk = [&](const CurveSpec& s, const CurveSpec& e) { return hoste_linking(b, s, e); };
  return Rational(x * x) * lk(t.alpha, t.alpha) + Rational(x * y) * lk(t.alpha, t.beta) +
         Rational(y * x) * lk(t.beta, t.alpha) + Rational(y * y) * lk(t.beta, t.beta);
}

long gcd_l(long a, long b) { return b == 0 ? (a < 0 ? -a : a) : gcd_l(b, a % b); }

}  // namespace

TEST_SUITE("linking_calculus") {
  TEST_CASE("first homology") {
    auto s = first_homology(IntMatrix{{0, 1}, {1, 4}});
    CHECK(s.is_homology_sphere);
    CHECK(s.describe() == "0");
    auto lens = first_homology(IntMatrix{{5}});
    CHECK(lens.torsion_coefficients == std::vector<Int>{5});
    CHECK(lens.describe() == "Z/5");
    auto free = first_homology(IntMatrix{{0}});
    CHECK(free.free_rank == 1);
    CHECK_FALSE(free.is_homology_sphere);
    auto mixed = first_homology(IntMatrix{{2, 0, 0}, {0, 6, 0}, {0, 0, 0}});
    CHECK(mixed.torsion_coefficients == std::vector<Int>{2, 6});
    CHECK(mixed.free_rank == 1);
  }

  TEST_CASE("hoste formula on a lens space") {
    // meridian of a 5-framed unknot
    IntMatrix b{{5}};
    CHECK(hoste_linking(b, {1}, {1}, 0) == Rational(-1, 5));
    CHECK(hoste_linking(b, {2}, {1}, 0) == Rational(-2, 5));
    CHECK_THROWS_AS(hoste_linking(IntMatrix{{0}}, {1}, {1}, 0), SingularMatrixError);
    CHECK_THROWS_AS(hoste_linking(b, {1, 2}, {1}, 0), Error);
  }

  TEST_CASE("self-linking form of the torus example") {
    for (long n = -5; n <= 5; ++n) {
      auto pres = torus_example_presentation(n);
      auto b = boundary_linking_matrix(pres);
      auto basis = torus_basis(pres, "alpha", "beta");
      auto q = self_linking_form(b, basis);
      CHECK(q.a == n);
      CHECK(q.b == -1);
      CHECK(q.c == 0);
      CHECK(q.is_integral());
      for (long x = -5; x <= 5; ++x)
        for (long y = -5; y <= 5; ++y) CHECK(q(x, y) == grid_value(b, basis, x, y));
    }
  }

  TEST_CASE("zero classes agree with a grid search") {
    const std::vector<SelfLinkingForm> forms{
        {0, -1, 0}, {3, -1, 0}, {1, 0, -1}, {1, 0, 1}, {2, 3, 1}, {0, 0, 5}, {4, 4, 1}, {6, -5, 1}, {1, 1, 1}};
    for (const auto& q : forms) {
      std::vector<TorusClass> brute;
      for (long x = -10; x <= 10; ++x)
        for (long y = -10; y <= 10; ++y) {
          if ((x == 0 && y == 0) || gcd_l(x, y) != 1) continue;
          if (q(x, y) == 0) {
            auto c = canonical_sign({x, y});
            if (std::find(brute.begin(), brute.end(), c) == brute.end()) brute.push_back(c);
          }
        }
      auto z = zero_classes(q);
      CHECK_FALSE(z.all_classes);
      CHECK(z.classes.size() == brute.size());
      for (const auto& c : brute) CHECK(std::find(z.classes.begin(), z.classes.end(), c) != z.classes.end());
    }
    CHECK(zero_classes({0, 0, 0}).all_classes);
  }

  TEST_CASE("zero classes of the example are beta and alpha + n beta up to sign") {
    for (long n = -5; n <= 5; ++n) {
      auto z = zero_classes({n, -1, 0});
      REQUIRE(z.classes.size() == (n == 0 ? 2u : 2u));
      auto has = [&](long x, long y) {
        return std::find(z.classes.begin(), z.classes.end(), canonical_sign({x, y})) != z.classes.end();
      };
      CHECK(has(0, 1));
      CHECK(has(1, n));
    }
  }

  TEST_CASE("rational form clears denominators") {
    auto z = zero_classes({Rational(1, 2), Rational(-1, 3), 0});
    CHECK(z.classes.size() == 2);
    CHECK(std::find(z.classes.begin(), z.classes.end(), TorusClass{2, 3}) != z.classes.end());
  }
}
