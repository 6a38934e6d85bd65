#include <doctest.h>

#include "obstruct/json_int.hpp"
#include "obstruct/surgery.hpp"

using namespace obstruct;

namespace {

const char* kExample =
    "# torus in the boundary\n"
    "component L1 dotted\n"
    "component L2 framed 3\n"
    "lk L1 L2 1\n"
    "curve alpha lk ( 1 0 ) self 0\n"
    "curve beta lk ( 0 1 ) self 0\n"
    "pushoff alpha beta 0 1\n";

template <class F>
ParseError parse_error_of(F f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, 0, "");
}

}  // namespace

TEST_SUITE("surgery_model") {
  TEST_CASE("parse and linking matrix") {
    auto pres = parse_presentation(kExample);
    CHECK(pres.components.size() == 2);
    CHECK(pres.curves.size() == 2);
    CHECK(boundary_linking_matrix(pres) == IntMatrix{{0, 1}, {1, 3}});
    CHECK(validate(pres).empty());
    CHECK(*pres.pushoff_linking("beta", "alpha") == 1);
    CHECK(*pres.pushoff_linking("alpha", "beta") == 0);
  }

  TEST_CASE("serialize round trip") {
    auto pres = parse_presentation(kExample);
    auto text = serialize(pres);
    CHECK(serialize(parse_presentation(text)) == text);
    CHECK(text == serialize(torus_example_presentation(3)));
  }

  TEST_CASE("json round trip") {
    auto pres = torus_example_presentation(-4);
    auto j = to_json(pres);
    CHECK(serialize(presentation_from_json(j)) == serialize(pres));
    j["extra"] = 1;
    CHECK_THROWS_AS(presentation_from_json(j), Error);
  }

  TEST_CASE("errors carry line and column") {
    auto e = parse_error_of([] { parse_presentation("component A framed 1\ncomponent A framed 2\n"); });
    CHECK(e.line() == 2);
    CHECK(e.column() == 11);

    e = parse_error_of([] { parse_presentation("component A dotted 4\n"); });
    CHECK(e.line() == 1);

    e = parse_error_of([] {
      parse_presentation("component A framed 0\ncomponent B framed 0\nlk A B 1\nlk B A 2\n");
    });
    CHECK(e.line() == 4);

    e = parse_error_of([] { parse_presentation("component A framed 0\ncurve c lk ( 1 2 ) self 0\n"); });
    CHECK(e.line() == 2);

    e = parse_error_of([] { parse_presentation("component A framed x\n"); });
    CHECK(e.column() == 20);

    e = parse_error_of([] { parse_presentation("knot A\n"); });
    CHECK(e.column() == 1);
  }

  TEST_CASE("curves declared before a component are rejected") {
    CHECK_THROWS_AS(parse_presentation("component A framed 0\ncurve c lk ( 1 ) self 0\ncomponent B framed 0\n"), Error);
  }

  TEST_CASE("torus basis") {
    auto basis = torus_basis(torus_example_presentation(2), "alpha", "beta");
    CHECK(basis.alpha_with_beta_pushoff == 0);
    CHECK(basis.beta_with_alpha_pushoff == 1);
    CHECK_THROWS_AS(torus_basis(torus_example_presentation(2), "alpha", "gamma"), Error);
  }
}

TEST_SUITE("json_int") {
  TEST_CASE("big integers survive as strings") {
    Int big("123456789012345678901234567890");
    auto j = int_to_json(big);
    CHECK(j.is_string());
    CHECK(int_from_json(j) == big);
    CHECK(int_to_json(Int(-5)).is_number_integer());
    CHECK(int_from_json(nlohmann::json("-17")) == -17);
    CHECK_THROWS_AS(int_from_json(nlohmann::json("1.5")), Error);
  }
}
