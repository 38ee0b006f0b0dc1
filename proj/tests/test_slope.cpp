#include <doctest.h>

#include "perimal/error.hpp"
#include "perimal/malnormality.hpp"

using namespace perimal;

TEST_CASE("canonical form: coprime, l > 0 or (l = 0, m > 0)") {
    CHECK(canonical_slope(2, 4) == Slope{1, 2});
    CHECK(canonical_slope(-3, -6) == Slope{1, 2});
    CHECK(canonical_slope(6, 1) == Slope{6, 1});
    CHECK(canonical_slope(-6, -1) == Slope{6, 1});
    CHECK(canonical_slope(5, 0) == Slope{1, 0});
    CHECK(canonical_slope(-5, 0) == Slope{1, 0});
    CHECK(canonical_slope(0, -7) == Slope{0, 1});
    CHECK_THROWS_AS(canonical_slope(0, 0), Error);
}

TEST_CASE("distance is the geometric intersection number") {
    CHECK(slope_distance({1, 0}, {0, 1}) == 1);
    CHECK(slope_distance({1, 0}, {1, 0}) == 0);
    CHECK(slope_distance({2, 4}, {1, 2}) == 0);
    CHECK(slope_distance({2, 1}, {3, 1}) == 1);
    CHECK(slope_distance({1, 2}, {1, 3}) == 1);
    CHECK(slope_distance({3, 1}, {1, 3}) == 8);
    CHECK(slope_distance({1, 0}, {6, 1}) == slope_distance({6, 1}, {1, 0}));
}

TEST_CASE("meridian is distance one from every annulus slope in range") {
    const Slope meridian{1, 0};
    for (i64 p = 2; p <= 7; ++p)
        for (i64 q = p + 1; q <= 7; ++q) {
            if (gcd_i64(p, q) != 1) continue;
            CHECK(slope_distance(meridian, canonical_slope(p * q, 1)) == 1);
        }
    for (i64 a : {2, 3})
        for (i64 b = -7; b <= 7; ++b) {
            if (b == 0 || gcd_i64(a, b < 0 ? -b : b) != 1) continue;
            CHECK(slope_distance(meridian, canonical_slope(a * b, 1)) == 1);
        }
}
