#include "doctest.h"

#include "g2/analytic.hpp"
#include "g2/constants.hpp"
#include "g2/errors.hpp"
#include "g2/heights.hpp"

#include <cmath>
#include <algorithm>
#include <random>

using namespace g2;

namespace {

CurvePoint P(long s, long e, long t) { return CurvePoint::affine(Int(s), Int(e), Int(t)); }

std::vector<QuinticCurve> random_curves(int n, unsigned seed, double T = 3.0) {
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

CVec2 vec(double a, double b, double c, double d, mpfr_prec_t p) {
    CVec2 z;
    z[0] = Complex::with_prec(a, b, p);
    z[1] = Complex::with_prec(c, d, p);
    return z;
}

double cabs(const Complex& z) { return abs(z).to_double(); }

}  // namespace

TEST_CASE("characteristic counts and parity") {
    CHECK(all_characteristics().size() == 16);
    CHECK(even_characteristics().size() == 10);
    auto odd = odd_characteristics();
    CHECK(odd.size() == 6);
    int triples = 0;
    for (size_t i = 0; i < odd.size(); ++i)
        for (size_t j = i + 1; j < odd.size(); ++j)
            for (size_t k = j + 1; k < odd.size(); ++k) {
                CHECK(!(odd[i] + odd[j] + odd[k]).reduced().is_odd());
                ++triples;
            }
    CHECK(triples == 20);
}

TEST_CASE("theta parity, odd zeros and translation identity") {
    auto c = make_curve(0, 1, 1, 1);
    auto rd = compute_periods(c, 192);
    const auto& tau = rd.tau;
    PrecisionScope ps(192);
    CVec2 zero = vec(0, 0, 0, 0, 192);
    CVec2 Z = vec(0.13, -0.07, -0.21, 0.05, 192);
    CVec2 mZ;
    mZ[0] = -Z[0];
    mZ[1] = -Z[1];
    for (const auto& ch : all_characteristics()) {
        Complex t = theta(ch, Z, tau, 192);
        Complex tm = theta(ch, mZ, tau, 192);
        Complex expect = ch.is_odd() ? -t : t;
        CHECK(cabs(tm - expect) < 1e-40);
        if (ch.is_odd()) CHECK(cabs(theta(ch, zero, tau, 192)) < 1e-50);
        CHECK(cabs(theta(ch, Z, tau, 192) - theta_reference(ch, Z, tau, 192)) < 1e-50);
    }
    Real pi = Real::pi(192);
    for (const auto& chi : all_characteristics())
        for (const auto& eta : all_characteristics()) {
            CVec2 et = half_period(eta, tau);
            Complex lhs = theta(chi, et, tau, 192);
            Complex rhs0 = theta(chi + eta, zero, tau, 192);
            // e(-1/2 <eta_a, tau eta_a> - <eta_a, chi_b + eta_b>)
            Real a0 = Real(eta.a[0]) / 2L, a1 = Real(eta.a[1]) / 2L;
            Complex q = tau(0, 0) * (a0 * a0) + tau(0, 1) * (a0 * a1 * 2L) + tau(1, 1) * (a1 * a1);
            Real lin = a0 * Real(chi.b[0] + eta.b[0]) / 2L + a1 * Real(chi.b[1] + eta.b[1]) / 2L;
            Complex ex = (q * Real(-0.5) - Complex(lin, Real(0))) * Complex(Real(0), pi * 2L);
            CHECK(cabs(lhs - rhs0 * exp(ex)) < 1e-40);
        }
}

TEST_CASE("periods agree across precisions on x^5 - x") {
    auto c = make_curve(0, 0, -1, 0);
    auto lo = compute_periods(c, 128);
    auto hi = compute_periods(c, 256);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(cabs(lo.tau(i, j).rounded(256) - hi.tau(i, j)) < 1e-20);
    CHECK(hi.symmetry_defect <= std::ldexp(1.0, -128));
}

TEST_CASE("x^5 + 1 Riemann matrix baseline") {
    auto c = make_curve(0, 0, 0, 1);
    auto rd = compute_periods(c, 256);
    CHECK(check_reduced(rd.tau).ok());
    CHECK(rd.tau(0, 0).re().to_double() == doctest::Approx(-0.3090169943749474241).epsilon(1e-12));
    CHECK(rd.tau(0, 0).im().to_double() == doctest::Approx(0.9510565162951535721).epsilon(1e-12));
    CHECK(rd.tau(0, 1).re().to_double() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(rd.tau(0, 1).im().to_double() == doctest::Approx(0.3632712640026804429).epsilon(1e-12));
    CHECK(rd.tau(1, 1).re().to_double() == doctest::Approx(0.3090169943749474241).epsilon(1e-12));
    CHECK(rd.tau(1, 1).im().to_double() == doctest::Approx(0.9510565162951535721).epsilon(1e-12));
}

TEST_CASE("random curves give reduced positive definite Riemann matrices") {
    for (const auto& c : random_curves(20, 17)) {
        auto rd = compute_periods(c, 128);
        double y1 = rd.tau(0, 0).im().to_double(), y2 = rd.tau(1, 1).im().to_double();
        double y12 = rd.tau(0, 1).im().to_double();
        CHECK(y1 > 0);
        CHECK(y1 * y2 - y12 * y12 > 0);
        auto chk = check_reduced(rd.tau);
        CHECK(chk.real_parts);
        CHECK(chk.minkowski);
        CHECK(chk.im_tau1);
    }
}

TEST_CASE("Siegel reduction of explicit matrices") {
    PrecisionScope ps(128);
    CMat2 t;
    t(0, 0) = Complex::with_prec(0.1, 1.2, 128);
    t(0, 1) = Complex::with_prec(0.2, 0.3, 128);
    t(1, 0) = t(0, 1);
    t(1, 1) = Complex::with_prec(-0.3, 1.5, 128);
    auto r = reduce_siegel(t);
    CHECK(r.moves == 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(r.transform[i][j] == (i == j ? 1 : 0));
    t(0, 0) = Complex::with_prec(0.7, 1.2, 128);
    r = reduce_siegel(t);
    CHECK(r.tau(0, 0).re().to_double() == doctest::Approx(-0.3));
    CHECK(check_reduced(r.tau).ok());
    t(0, 0) = Complex::with_prec(0.3, 0.2, 128);
    t(1, 1) = Complex::with_prec(0.1, 3.0, 128);
    t(0, 1) = Complex::with_prec(0.05, 0.01, 128);
    t(1, 0) = t(0, 1);
    r = reduce_siegel(t);
    CHECK(check_reduced(r.tau).ok());
}

TEST_CASE("characteristic table on ten curves") {
    for (const auto& c : random_curves(10, 23)) {
        auto rd = compute_periods(c, 128);
        std::vector<ThetaChar> seen;
        for (int k = 0; k < 6; ++k) {
            CHECK(rd.char_table[static_cast<size_t>(k)].is_odd());
            for (const auto& s : seen) CHECK(!(s == rd.char_table[static_cast<size_t>(k)]));
            seen.push_back(rd.char_table[static_cast<size_t>(k)]);
        }
        for (int k = 0; k < 5; ++k) {
            CVec2 z = half_period(rd.char_table[5] + rd.char_table[static_cast<size_t>(k)], rd.tau);
            CHECK(cabs(theta(rd.char_table[static_cast<size_t>(k)], z, rd.tau, 128)) < 1e-6);
        }
    }
}

TEST_CASE("Thomae constancy of c_beta") {
    for (const auto& c : random_curves(10, 29)) {
        auto rd = compute_periods(c, 128);
        for (int b = 0; b < 5; ++b) {
            std::vector<double> v;
            for (int a = 0; a < 5; ++a)
                if (a != b) v.push_back(c_rho(rd, c, b, a));
            for (double x : v) {
                CHECK(std::isfinite(x));
                CHECK(std::fabs(x - v[0]) < 1e-6);
            }
        }
    }
}

TEST_CASE("theta and telescoping local heights agree") {
    auto c = make_curve(0, 1, 1, 1);
    auto rd = compute_periods(c, 256);
    for (auto p : {P(0, 1, 1), P(1, 1, 2), P(3, 1, -16), P(-8, 3, 143)}) {
        auto L = lift_point(rd, c, p);
        auto h = canonical_height(c, kappa(p));
        double tel = h.naive + h.archimedean_correction;
        double th = lambda_inf_theta(rd, c, L.K, L.Z);
        CHECK(std::fabs(th - tel) < 1e-4);
        double r0 = lambda_inf_theta(rd, c, L.K, L.Z, 0);
        double r3 = lambda_inf_theta(rd, c, L.K, L.Z, 3);
        CHECK(std::fabs(r0 - r3) < 1e-6);
    }
}

TEST_CASE("two-torsion local height is half log |f'(alpha)|") {
    auto c = make_curve(0, 1, 1, 1);
    auto rd = compute_periods(c, 256);
    auto L = lift_point(rd, c, P(-1, 1, 0));
    // f'(-1) = 5 + 2(-1) + 1 = 4
    double expect = 0.5 * std::log(4.0);
    CHECK(lambda_inf_theta(rd, c, L.K, L.Z) == doctest::Approx(expect).epsilon(1e-8));
    auto h = canonical_height(c, kappa(P(-1, 1, 0)));
    CHECK(h.naive + h.archimedean_correction == doctest::Approx(expect).epsilon(1e-8));
}

TEST_CASE("Igusa i3 from roots is symmetric and proportional to the theta side") {
    std::vector<double> ratios;
    for (const auto& c : random_curves(10, 31)) {
        auto rd = compute_periods(c, 128);
        Complex q = igusa_i3_roots(c, 128) / igusa_i3_thetas(rd);
        CHECK(std::fabs(q.im().to_double()) < 1e-20);
        ratios.push_back(q.re().to_double());
    }
    for (double r : ratios) CHECK(std::fabs(r / ratios[0] - 1.0) < 1e-4);
    CHECK(ratios[0] == doctest::Approx(frozen_constants().i3_ratio).epsilon(1e-9));
    auto c = make_curve(1, -2, 60, -117);
    std::vector<Complex> r(c.roots(128).begin(), c.roots(128).end());
    Complex base = igusa_i4(r);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10; ++i) {
        std::shuffle(r.begin(), r.end(), rng);
        CHECK(cabs(igusa_i4(r) - base) / cabs(base) < 1e-10);
    }
}
