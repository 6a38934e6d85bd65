#include <doctest.h>

#include <random>

#include "obstruct/matrix.hpp"
#include "obstruct/smith.hpp"
#include "../support/oracles.hpp"

using namespace obstruct;

TEST_SUITE("matrix") {
  TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-9, 9);
    for (std::size_t n = 0; n <= 6; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
        CHECK(determinant(m) == oracle::laplace_det(m));
      }
    }
  }

  TEST_CASE("determinant of a matrix with a zero leading pivot") {
    IntMatrix m{{0, 1, 2}, {3, 0, 1}, {1, 1, 0}};
    CHECK(determinant(m) == oracle::laplace_det(m));
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  }

  TEST_CASE("inverse") {
    IntMatrix b{{0, 1}, {1, 3}};
    auto inv = inverse(b);
    CHECK(inv(0, 0) == -3);
    CHECK(inv(0, 1) == 1);
    CHECK(inv(1, 1) == 0);
    auto half = inverse(IntMatrix{{2}});
    CHECK(half(0, 0) == Rational(1, 2));
    CHECK_THROWS_AS(inverse(IntMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
    CHECK_THROWS_AS(inverse(IntMatrix(2, 3)), Error);
  }

  TEST_CASE("congruence inertia matches the characteristic polynomial") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + trial % 6;
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = (trial % 3 == 0 && i == j) ? 0 : d(rng);
      const auto in = congruence_inertia(m);
      CHECK(in.signature() == oracle::signature_by_descartes(m));
      CHECK(in.positive + in.negative + in.zero == n);
    }
  }

  TEST_CASE("hyperbolic plane has a zero diagonal") {
    auto in = congruence_inertia(IntMatrix{{0, 1}, {1, 0}});
    CHECK(in.positive == 1);
    CHECK(in.negative == 1);
    CHECK(in.zero == 0);
    CHECK(congruence_inertia(IntMatrix{{0, 0}, {0, 0}}).zero == 2);
    CHECK_THROWS_AS(congruence_inertia(IntMatrix{{0, 1}, {0, 0}}), Error);
  }

  TEST_CASE("block diagonal and arithmetic") {
    IntMatrix a{{1, 2}, {3, 4}};
    IntMatrix b{{5}};
    auto c = block_diagonal(a, b);
    CHECK(c.rows() == 3);
    CHECK(c(2, 2) == 5);
    CHECK(c(0, 2) == 0);
    CHECK(a * IntMatrix::identity(2) == a);
    CHECK(a - a == IntMatrix(2, 2));
    CHECK(a.transpose()(0, 1) == 3);
    CHECK(to_string(a) == "[[1,2],[3,4]]");
    CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), Error);
  }
}

TEST_SUITE("smith") {
  TEST_CASE("known normal forms") {
    auto s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(s.invariant_factors() == std::vector<Int>{2, 6, 12});
    auto lens = smith_normal_form(IntMatrix{{5}});
    CHECK(lens.invariant_factors() == std::vector<Int>{5});
    auto zero = smith_normal_form(IntMatrix(2, 3));
    CHECK(zero.rank() == 0);
  }

  TEST_CASE("D = U M V with unimodular factors") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t r = 1 + trial % 4;
      const std::size_t c = 1 + (trial / 4) % 4;
      IntMatrix m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
      auto s = smith_normal_form(m);
      CHECK(s.U * m * s.V == s.D);
      CHECK(abs(oracle::laplace_det(s.U)) == 1);
      CHECK(abs(oracle::laplace_det(s.V)) == 1);
      CHECK(s.invariant_factors() == oracle::invariant_factors_by_minors(m));
    }
  }

  TEST_CASE("row Hermite form") {
    auto h = row_hermite_form(IntMatrix{{1, 0}, {5, 1}});
    CHECK(h == IntMatrix::identity(2));
    auto g = row_hermite_form(IntMatrix{{2, 4}, {0, 6}, {4, 8}});
    CHECK(g == IntMatrix{{2, 4}, {0, 6}});
    auto d = row_hermite_form(IntMatrix{{0, 3}, {0, -6}});
    CHECK(d == IntMatrix{{0, 3}});
    CHECK(row_hermite_form(IntMatrix(2, 2)).rows() == 0);
  }
}
