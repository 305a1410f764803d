#include "doctest.h"

#include "g2/points.hpp"

#include <random>

using namespace g2;

namespace {
CurvePoint P(long s, long e, long t) { return CurvePoint::affine(Int(s), Int(e), Int(t)); }
}  // namespace

TEST_CASE("x^5 + 1 has exactly four small points") {
    auto c = make_curve(0, 0, 0, 1);
    std::vector<CurvePoint> expect{CurvePoint::at_infinity(), P(-1, 1, 0), P(0, 1, -1), P(0, 1, 1)};
    std::sort(expect.begin(), expect.end());
    CHECK(search_points(c, 10, 100) == expect);
    CHECK(search_points(c, 6, 200) == expect);
    CHECK(search_points_reference(c, 6, 200) == expect);
}

TEST_CASE("x^5 - x torsion points") {
    auto c = make_curve(0, 0, -1, 0);
    auto pts = search_points(c, 5, 50);
    std::vector<CurvePoint> expect{CurvePoint::at_infinity(), P(-1, 1, 0), P(0, 1, 0), P(1, 1, 0)};
    std::sort(expect.begin(), expect.end());
    CHECK(pts == expect);
    CHECK(!is_on_curve(c, P(1, 2, 0)));
    CHECK(weighted_value(c, Int(1), Int(2)) == -255);
}

TEST_CASE("sieved search equals brute force on random curves") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-12, 12);
    int done = 0;
    while (done < 5) {
        QuinticCurve c;
        try {
            c = make_curve(d(rng), d(rng), d(rng), d(rng));
        } catch (...) {
            continue;
        }
        SearchOptions o;
        o.mod_e6_sieve = (done % 2) == 1;
        CHECK(search_points(c, 4, 120, o) == search_points_reference(c, 4, 120));
        ++done;
    }
}

TEST_CASE("known points on y^2 = x^5 + x^2 + x + 1") {
    auto c = make_curve(0, 1, 1, 1);
    CHECK(is_on_curve(c, P(1, 1, 2)));
    CHECK(is_on_curve(c, P(3, 1, 16)));
    CHECK(is_on_curve(c, P(0, 1, 1)));
    CHECK(is_on_curve(c, P(-8, 3, 143)));
}
