#include <doctest.h>

#include "../support/properties.hpp"

TEST_CASE("Seifert invariant algebra on random matrices") { CHECK(properties::seifert_algebra(150, 2024) == ""); }

TEST_CASE("Smith normal form on random matrices") { CHECK(properties::smith_form(150, 99) == ""); }

TEST_CASE("lens QR criterion against exhaustive search") { CHECK(properties::lens_qr(200) == ""); }
