/* Apache License, Version 2.0 */
#include <catch2/catch_amalgamated.hpp>
TEST_CASE("placeholder test_mesher_kite") { SUCCEED(); }
