#include <doctest.h>

#include "obstruct/laurent.hpp"
#include "obstruct/zpoly.hpp"

using namespace obstruct;

namespace {

IntPoly product(const std::vector<IntPoly>& ps) {
  IntPoly r = IntPoly::constant(1);
  for (const auto& p : ps) r = r * p;
  return r;
}

std::size_t factor_count(const Factorization& f) {
  std::size_t n = 0;
  for (const auto& [g, m] : f.factors) n += m;
  return n;
}

}  // namespace

TEST_SUITE("polynomials") {
  TEST_CASE("arithmetic and evaluation") {
    IntPoly p{-1, 0, 1};  // t^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(3) == 8);
    CHECK(p.derivative() == IntPoly{0, 2});
    CHECK((p * IntPoly{1, 1}) == IntPoly{-1, -1, 1, 1});
    CHECK(divide_exact(p, IntPoly{-1, 1}) == IntPoly{1, 1});
    CHECK_FALSE(divide_exact(p, IntPoly{2, 1}).has_value());
    CHECK(IntPoly{6, 4}.content() == 2);
    CHECK(IntPoly{1, 2, 3}.reciprocal() == IntPoly{3, 2, 1});
    CHECK(primitive_gcd(p, IntPoly{1, 2, 1}) == IntPoly{1, 1});
  }

  TEST_CASE("factorization reproduces its input") {
    const std::vector<IntPoly> cases{
        product({IntPoly{1, -1, 1}, IntPoly{1, -1, 1}}),
        product({IntPoly{2, -5, 2}}),
        product({IntPoly{-1, 0, 1}, IntPoly{1, 1, 1}, IntPoly{3, 0, 1}}),
        product({IntPoly{1, 0, 0, 0, 1}}),  // t^4 + 1, reducible mod every prime
        product({IntPoly{1, -1, 1}, IntPoly{1, -3, 1}, IntPoly{2, 0, -1}, IntPoly{2, 0, -1}}),
        IntPoly{6, 12, 6},
        IntPoly{-4},
    };
    for (const auto& p : cases) {
      auto f = factor(p);
      CHECK(f.expand() == p);
    }
  }

  TEST_CASE("irreducible factors are found") {
    CHECK(factor_count(factor(IntPoly{1, 0, 0, 0, 1})) == 1);
    CHECK(factor_count(factor(IntPoly{2, -5, 2})) == 2);
    CHECK(factor_count(factor(product({IntPoly{1, -1, 1}, IntPoly{1, -1, 1}, IntPoly{1, 1}}))) == 3);
    // Swinnerton-Dyer style: x^4 - 10x^2 + 1 is irreducible over Z
    CHECK(factor_count(factor(IntPoly{1, 0, -10, 0, 1})) == 1);
    // cyclotomic product t^12 - 1 has six irreducible factors
    const IntPoly t12 = IntPoly::monomial(1, 12) - IntPoly::constant(1);
    CHECK(factor_count(factor(t12)) == 6);
  }

  TEST_CASE("polynomial determinant") {
    Matrix<IntPoly> m(2, 2);
    m(0, 0) = IntPoly{-1, 1};
    m(0, 1) = IntPoly{1};
    m(1, 0) = IntPoly{0, -1};
    m(1, 1) = IntPoly{-1, 1};
    CHECK(determinant(m) == IntPoly{1, -1, 1});
  }

  TEST_CASE("laurent normalization") {
    LaurentPoly p(IntPoly{1, -1, 1}, 3);
    auto n = p.normalized();
    CHECK(n.low() == -1);
    CHECK(n.high() == 1);
    CHECK(n.to_string() == "t - 1 + t^-1");
    CHECK(n.is_symmetric());
    CHECK(n.at_one() == 1);
    CHECK(n.at_minus_one() == -3);
    CHECK((-p).normalized() == n);
    CHECK(unit_equivalent(p, -n.shifted(5)));
    CHECK(n.substitute_power(2).to_string() == "t^2 - 1 + t^-2");
    CHECK(n.conjugate() == n);
    CHECK(LaurentPoly::constant(1).to_string() == "1");
  }
}
