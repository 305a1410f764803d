#include "doctest.h"

#include "g2/errors.hpp"
#include "g2/packing.hpp"

#include <chrono>
#include <cmath>

using namespace g2;

TEST_CASE("kl exponent anchors") {
    CHECK(kl_exponent(0.0).exponent_base == doctest::Approx(1.0));
    CHECK(kl_exponent(0.0).bracket == doctest::Approx(0.0));
    CHECK(kl_exponent(64.0 / 95).exponent_base == doctest::Approx(1.64460084388992).epsilon(1e-12));
    CHECK(kl_exponent(0.75).exponent_base == doctest::Approx(1.88700248480141).epsilon(1e-12));
    CHECK(kl_exponent(39.0 / 59).exponent_base == doctest::Approx(1.61256714526421).epsilon(1e-12));
    CHECK(kl_exponent(0.6334).exponent_base == doctest::Approx(1.54866136881706).epsilon(1e-12));
    CHECK(kl_exponent(0.5).exponent_base == doctest::Approx(1.32080139223503).epsilon(1e-12));
    CHECK(kl_exponent(-0.5).exponent_base == doctest::Approx(kl_exponent(0.5).exponent_base));
    CHECK_THROWS_AS(kl_exponent(1.0), DomainError);
    CHECK_THROWS_AS(kl_exponent(-1.0), DomainError);
    CHECK_THROWS_AS(kl_exponent(std::nan("")), DomainError);
}

TEST_CASE("kl exponent is monotone on [0, 0.95]") {
    double prev = 0.0;
    for (int i = 0; i <= 95; ++i) {
        auto r = kl_exponent(i / 100.0);
        CHECK(r.bracket >= 0.0);
        CHECK(r.exponent_base == doctest::Approx(std::exp(r.bracket)));
        CHECK(r.exponent_base >= prev);
        prev = r.exponent_base;
    }
}

TEST_CASE("genus two optimization") {
    auto r = optimize_genus2();
    CHECK(r.unimodal);
    CHECK(r.alpha_star == doctest::Approx(0.740612517625).epsilon(1e-8));
    CHECK(r.base_S == doctest::Approx(1.85148456888).epsilon(1e-8));
    CHECK(r.base_cluster == doctest::Approx(1.01076329179).epsilon(1e-8));
    CHECK(r.product == doctest::Approx(1.87141263753).epsilon(1e-8));
    CHECK(r.product <= 1.872);
    CHECK(r.max_second_arg <= 1.0);
    OptimizeOptions lo, hi;
    lo.lo_shift = 1e-4;
    hi.hi_shift = -1e-4;
    CHECK(optimize_genus2(lo).alpha_star == doctest::Approx(r.alpha_star).epsilon(1e-8));
    CHECK(optimize_genus2(hi).alpha_star == doctest::Approx(r.alpha_star).epsilon(1e-8));
}

TEST_CASE("general genus optimization") {
    auto inf = optimize_general_genus(std::nullopt);
    CHECK(inf.alpha_star == doctest::Approx(0.481766806311).epsilon(1e-8));
    CHECK(inf.product == doctest::Approx(1.31035547593).epsilon(1e-8));
    CHECK(inf.max_second_arg <= 1.0);
    auto g2 = optimize_general_genus(2);
    CHECK(std::fabs(g2.product - optimize_genus2().product) < 1e-4);
    CHECK(std::fabs(g2.alpha_star - optimize_genus2().alpha_star) < 1e-4);
    CHECK(g2.lo == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(g2.hi == doctest::Approx(0.75));
    CHECK(optimize_general_genus(3).product == doctest::Approx(1.61312973247).epsilon(1e-8));
    CHECK(optimize_general_genus(4).product == doctest::Approx(1.51801058959).epsilon(1e-8));
    CHECK(optimize_general_genus(10).product == doctest::Approx(1.38236475972).epsilon(1e-8));
    for (int g = 2; g <= 50; ++g) CHECK(optimize_general_genus(g).max_second_arg <= 1.0);
    CHECK_THROWS_AS(optimize_general_genus(1), EmptyInterval);
    CHECK_THROWS_AS(optimize_general_genus(0), DomainError);
}
