#include "doctest.h"

#include "g2/constants.hpp"
#include "g2/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

using namespace g2;

namespace {

const std::string kData = G2_DATA_DIR;

std::vector<QuinticCurve> fresh_curves(int n, unsigned seed, double T) {
    std::mt19937_64 rng(seed);
    auto b = family_bounds(T);
    std::vector<QuinticCurve> out;
    while (static_cast<int>(out.size()) < n) {
        auto r = [&](int64_t B) { return static_cast<long>(rng() % static_cast<uint64_t>(2 * B + 1)) - B; };
        try {
            out.push_back(make_curve(r(b[0]), r(b[1]), r(b[2]), r(b[3])));
        } catch (const SingularCurve&) {
        }
    }
    return out;
}

}  // namespace

TEST_CASE("frozen constants file matches the compiled values") {
    auto f = load_constants(kData + "/frozen_constants.json");
    const auto& c = frozen_constants();
    CHECK(f.version == c.version);
    for (const auto& [name, d] : constant_drift(c, f)) {
        INFO(name);
        CHECK(d < 1e-12);
    }
}

TEST_CASE("constants round trip and schema errors") {
    std::string path = "g2_constants_roundtrip.json";
    save_constants(frozen_constants(), path);
    auto back = load_constants(path);
    for (const auto& [name, d] : constant_drift(frozen_constants(), back)) CHECK(d == 0.0);
    {
        std::ofstream out(path);
        out << R"({"version": 1, "constants": {"c_arch": 1.0}})";
    }
    CHECK_THROWS_AS(load_constants(path), Error);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_constants("no_such_constants.json"), Error);
    CHECK_THROWS_AS(load_corpus("no_such_corpus.json"), Error);
    auto corpus = load_corpus(kData + "/calibration_corpus.json");
    CHECK(corpus.curves.size() >= 10);
}

TEST_CASE("cheap constants recalibrate without drift") {
    const auto& c = frozen_constants();
    auto corpus = load_corpus(kData + "/calibration_corpus.json");
    CalibrationOptions opt;
    CHECK(std::fabs(opt.margin * calibrate_c_arch(corpus.seed, opt.arch_samples) / c.c_arch - 1.0) < 0.1);
    CHECK(std::fabs(opt.margin * max_disc_ratio(opt.disc_T) / c.c_disc - 1.0) < 0.1);
}

TEST_CASE("discriminant is bounded by c_disc H(f)^20 off the calibration set") {
    for (double T : {3.0, 4.0, 6.0})
        for (const auto& c : fresh_curves(200, 5, T)) {
            double lhs = std::log(std::fabs(c.delta.get_d()));
            CHECK(lhs <= std::log(frozen_constants().c_disc) + 20 * std::log(c.H));
        }
}

TEST_CASE("uniform theta bound and near-zero asymptotics on fresh curves") {
    const auto& fc = frozen_constants();
    for (const auto& c : fresh_curves(3, 77, 3.0)) {
        auto rd = compute_periods(c, 128);
        CHECK(max_xi(rd, 9, 50) <= fc.c_xi);
        double r = max_asym_ratio(rd, 9, 10);
        CHECK(r >= 1.0);
        CHECK(r <= fc.c_asym);
    }
}

TEST_CASE("I4 degeneracy is detected for x^5 + 1") {
    CHECK(i4_degenerate(make_curve(0, 0, 0, 1), 128));
    CHECK(!i4_degenerate(make_curve(0, 1, 1, 1), 128));
}
