#include "doctest.h"

#include "g2/errors.hpp"
#include "g2/kummer.hpp"

#include <random>

using namespace g2;

namespace {
CurvePoint P(long s, long e, long t) { return CurvePoint::affine(Int(s), Int(e), Int(t)); }
}  // namespace

TEST_CASE("duplication table checksums") {
    auto cs = delta_checksum(delta_terms());
    CHECK(cs.terms == std::array<int, 4>{23, 40, 32, 41});
    CHECK(cs.coef_sum == std::array<long, 4>{-80, 80, -208, 48});
}

TEST_CASE("kappa normalization") {
    CHECK(kappa(CurvePoint::at_infinity()) == KummerCoords::identity());
    CHECK(kappa(P(-8, 3, 143)).k == Quad{0, 81, -72, 64});
    CHECK(KummerCoords(Quad{0, -2, 4, 6}).k == Quad{0, 1, -2, -3});
}

TEST_CASE("duplication forms are bihomogeneous") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-50, 50);
    std::uniform_int_distribution<long> cd(2, 5);
    for (int i = 0; i < 20; ++i) {
        std::array<Int, 4> a{d(rng), d(rng), d(rng), d(rng)};
        Quad k{d(rng), d(rng), d(rng), d(rng)};
        Int c = cd(rng), lam = 3;
        std::array<Int, 4> ac{a[0] * ipow(c, 2), a[1] * ipow(c, 3), a[2] * ipow(c, 4), a[3] * ipow(c, 5)};
        Quad kc{k[0] * c, k[1] * ipow(c, 2), k[2] * ipow(c, 3), k[3] * ipow(c, 4)};
        Quad kl{k[0] * lam, k[1] * lam, k[2] * lam, k[3] * lam};
        auto base = delta_raw(a, k, delta_terms());
        auto graded = delta_raw(ac, kc, delta_terms());
        auto scaled = delta_raw(a, kl, delta_terms());
        for (int j = 0; j < 4; ++j) {
            CHECK(graded[j] == base[j] * ipow(c, 13 + j));
            CHECK(scaled[j] == base[j] * ipow(lam, 4));
        }
    }
}

TEST_CASE("two-torsion images") {
    auto c = make_curve(0, 0, -1, 0);
    for (long a : {-1L, 0L, 1L}) {
        auto d = delta_raw(c, kappa(P(a, 1, 0)).k);
        Int fp = 5 * a * a * a * a - 1;
        CHECK(d == Quad{0, 0, 0, fp * fp});
    }
}

TEST_CASE("sum and difference on y^2 = x^5 + x^2 + x + 1") {
    auto c = make_curve(0, 1, 1, 1);
    auto [s, d] = sum_and_diff_coords(c, P(1, 1, 2), P(3, 1, 16));
    CHECK(s.k == Quad{1, 4, 3, -4});
    CHECK(d.k == Quad{1, 4, 3, 28});
    CHECK_THROWS_AS(sum_and_diff_coords(c, P(1, 1, 2), P(1, 1, -2)), EqualX);
    CHECK_THROWS_AS(sum_and_diff_coords(c, P(1, 1, 2), CurvePoint::at_infinity()), InfinityOperand);
}

TEST_CASE("doubling a five-torsion point cycles") {
    auto c = make_curve(0, 0, 0, 1);
    auto k = kappa(P(0, 1, 1));
    auto k2 = double_coords(c, k);
    auto k4 = double_coords(c, k2);
    // 4P = -P on the Kummer surface
    CHECK(k4 == k);
}

TEST_CASE("real duplication matches the exact one") {
    auto c = make_curve(0, 1, 1, 1);
    Quad k = kappa(P(3, 1, 16)).k;
    PrecisionScope ps(200);
    std::array<Real, 4> a{Real(c.a2), Real(c.a3), Real(c.a4), Real(c.a5)};
    std::array<Real, 4> kr{Real(k[0]), Real(k[1]), Real(k[2]), Real(k[3])};
    auto dr = delta_real(a, kr);
    auto de = delta_raw(c, k);
    for (int j = 0; j < 4; ++j) CHECK((dr[j] - Real(de[j])).is_zero());
}
