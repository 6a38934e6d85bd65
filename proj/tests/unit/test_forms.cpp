#include <doctest.h>

#include "obstruct/forms.hpp"
#include "../support/oracles.hpp"

using namespace obstruct;

TEST_SUITE("forms_lattice") {
  TEST_CASE("E8 and H") {
    auto e8 = SymUnimodularForm::e8();
    CHECK(e8.rank() == 8);
    CHECK(oracle::laplace_det(e8.matrix()) == 1);
    CHECK(parity(e8) == Parity::Even);
    CHECK(exact_signature(e8) == 8);
    CHECK(is_definite(e8));
    auto h = SymUnimodularForm::hyperbolic();
    CHECK(exact_signature(h) == 0);
    CHECK_FALSE(is_definite(h));
    CHECK(parity(SymUnimodularForm(IntMatrix{{1}})) == Parity::Odd);
    CHECK_THROWS_AS(SymUnimodularForm(IntMatrix{{2}}), Error);
    CHECK_THROWS_AS(SymUnimodularForm(IntMatrix{{0, 1}, {0, 0}}), Error);
  }

  TEST_CASE("classification of indefinite even forms") {
    auto e8h = SymUnimodularForm::e8() + SymUnimodularForm::hyperbolic();
    auto c = classify_indefinite_even(e8h);
    CHECK(c == EvenFormClass{1, 1});
    CHECK(c.to_string() == "E8 + H");
    auto neg = classify_indefinite_even(SymUnimodularForm::e8().negated() + SymUnimodularForm::hyperbolic() +
                                        SymUnimodularForm::hyperbolic());
    CHECK(neg == EvenFormClass{-1, 2});
    CHECK(neg.rank() == 12);
    CHECK(exact_signature(neg.realize()) == -8);
    CHECK_THROWS_AS(classify_indefinite_even(SymUnimodularForm::e8()), Error);
    CHECK_THROWS_AS(classify_indefinite_even(SymUnimodularForm(IntMatrix{{1, 0}, {0, -1}})), Error);
  }

  TEST_CASE("Rohlin constraint") {
    CHECK(rohlin_constraint(1).residue == 8);
    CHECK(rohlin_constraint(0).residue == 0);
    CHECK(rohlin_constraint(1).admits(-8));
    CHECK_FALSE(rohlin_constraint(1).admits(0));
    CHECK(rohlin_constraint(0).admits(16));
    CHECK_THROWS_AS(rohlin_constraint(2), Error);
  }

  TEST_CASE("splittings") {
    auto two = enumerate_even_splittings({1, 1}, rohlin_constraint(1), rohlin_constraint(0));
    REQUIRE(two.size() == 2);
    CHECK(std::find(two.begin(), two.end(), Splitting{{1, 0}, {0, 1}}) != two.end());
    CHECK(std::find(two.begin(), two.end(), Splitting{{1, 1}, {0, 0}}) != two.end());
    CHECK(enumerate_even_splittings({0, 1}, rohlin_constraint(1), std::nullopt).empty());
    auto free = enumerate_even_splittings({0, 1}, std::nullopt, std::nullopt);
    CHECK(free.size() == 2);
    for (const auto& s : enumerate_even_splittings({0, 3}, std::nullopt, std::nullopt)) {
      CHECK(s.first.rank() + s.second.rank() == 6);
      CHECK(s.first.signature() + s.second.signature() == 0);
    }
  }

  TEST_CASE("quadratic residues and lens spaces") {
    CHECK(quadratic_residues(5) == std::vector<long>{0, 1, 4});
    CHECK_FALSE(lens_qr_bounding(5, 2));
    CHECK(lens_qr_bounding(5, 1));
    CHECK(lens_qr_bounding(5, 4));
    CHECK(lens_qr_bounding(4, 1));
    CHECK_FALSE(lens_qr_bounding(12, 5));
    CHECK_THROWS_AS(lens_qr_bounding(6, 3), Error);
    CHECK_THROWS_AS(lens_qr_bounding(5, 0), Error);
    for (long p = 2; p <= 40; ++p)
      for (long q = 1; q < p; ++q)
        if (std::gcd(p, q) == 1) CHECK(lens_qr_bounding(p, q) == oracle::qr_bounds_brute(p, q));
  }
}
