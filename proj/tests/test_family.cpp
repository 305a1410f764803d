#include "doctest.h"

#include "g2/errors.hpp"
#include "g2/family.hpp"

#include <random>

using namespace g2;

TEST_CASE("discriminant of reference quintics") {
    CHECK(discriminant(0, 0, 0, 1) == 3125);
    CHECK(discriminant(0, 0, -1, 0) == -256);
    CHECK(make_curve(0, 0, 0, 1).delta == 256 * 3125);
}

TEST_CASE("Sylvester, expanded polynomial and i128 discriminants agree") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-300, 300);
    for (int i = 0; i < 200; ++i) {
        long a2 = d(rng), a3 = d(rng), a4 = d(rng), a5 = d(rng);
        Int s = discriminant(a2, a3, a4, a5);
        CHECK(s == discriminant_poly(a2, a3, a4, a5));
        __int128 v = discriminant_i128(a2, a3, a4, a5);
        CHECK(Int(static_cast<long>(v >> 64)) * Int("18446744073709551616") + Int(static_cast<unsigned long>(v)) == s);
    }
}

TEST_CASE("singular curves are rejected") {
    CHECK_THROWS_AS(make_curve(0, 0, 0, 0), SingularCurve);
    // (x-1)^2 (x^3 + 2x^2 + 3x + 4)
    CHECK_THROWS_AS(make_curve(0, 0, -5, 4), SingularCurve);
}

TEST_CASE("family counts at T = 1 and T = 2") {
    auto c1 = count_family_reference(1.0);
    CHECK(c1.box == 81);
    CHECK(c1.nonsingular == 70);
    auto c2 = count_family_parallel(2.0);
    CHECK(c2.box == 328185);
    CHECK(c2.nonsingular == 327792);
    CHECK(count_singular_by_factorization(2.0) == c2.box - c2.nonsingular);
    CHECK(count_singular_by_factorization(1.0) == 11);
}

TEST_CASE("enumeration is lexicographic and matches the count") {
    std::vector<std::array<Int, 4>> seen;
    enumerate_family(1.0, [&](const QuinticCurve& c) { seen.push_back(c.coeffs()); });
    CHECK(seen.size() == 70);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("roots are certified and sorted") {
    auto c = make_curve(0, 1, 1, 1);
    const auto& r = c.roots(256);
    REQUIRE(r.size() == 5);
    for (const auto& z : r) CHECK(abs(c.eval(z)).to_double() < 1e-60);
    for (size_t i = 1; i < r.size(); ++i) {
        bool ordered = r[i - 1].re() < r[i].re() || (r[i - 1].re() == r[i].re() && r[i - 1].im() <= r[i].im());
        CHECK(ordered);
    }
}

TEST_CASE("alpha_beta_star on x^5 + 1 avoids adjacent roots") {
    auto c = make_curve(0, 0, 0, 1);
    auto ab = alpha_beta_star(c);
    CHECK(ab.ia != ab.ib);
    double d = abs(ab.alpha - ab.beta).to_double();
    CHECK(d == doctest::Approx(2 * std::sin(2 * M_PI / 5)).epsilon(1e-12));
}
