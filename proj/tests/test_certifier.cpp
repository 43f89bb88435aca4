#include <catch2/catch_amalgamated.hpp>
#include "cyclojac/certifier.hpp"
TEST_CASE("placeholder test_certifier") { REQUIRE(true); }
