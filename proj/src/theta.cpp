#include "g2/analytic.hpp"

#include "g2/errors.hpp"

#include <cmath>
#include <sstream>

namespace g2 {

CMat2 CMat2::identity(mpfr_prec_t prec) {
    CMat2 r;
    Complex one(Real::with_prec(1.0, prec), Real(prec, 0));
    Complex zero(Real(prec, 0), Real(prec, 0));
    r(0, 0) = one;
    r(1, 1) = one;
    r(0, 1) = zero;
    r(1, 0) = zero;
    return r;
}

CMat2 CMat2::transpose() const {
    CMat2 r = *this;
    r(0, 1) = (*this)(1, 0);
    r(1, 0) = (*this)(0, 1);
    return r;
}

Complex CMat2::det() const { return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0); }

CMat2 CMat2::inverse() const {
    Complex d = det();
    if (abs(d).is_zero()) throw DomainError("singular 2x2 matrix");
    CMat2 r;
    r(0, 0) = (*this)(1, 1) / d;
    r(1, 1) = (*this)(0, 0) / d;
    r(0, 1) = -(*this)(0, 1) / d;
    r(1, 0) = -(*this)(1, 0) / d;
    return r;
}

CMat2 operator*(const CMat2& a, const CMat2& b) {
    CMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

CMat2 operator+(const CMat2& a, const CMat2& b) {
    CMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

CMat2 operator-(const CMat2& a, const CMat2& b) {
    CMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

CVec2 operator*(const CMat2& a, const CVec2& z) {
    CVec2 r;
    for (int i = 0; i < 2; ++i) r[i] = a(i, 0) * z[0] + a(i, 1) * z[1];
    return r;
}

bool ThetaChar::is_odd() const { return ((a[0] * b[0] + a[1] * b[1]) & 1) != 0; }

ThetaChar ThetaChar::reduced() const {
    auto m = [](int x) { return ((x % 2) + 2) % 2; };
    return ThetaChar{{m(a[0]), m(a[1])}, {m(b[0]), m(b[1])}};
}

std::string ThetaChar::str() const {
    auto h = [](int x) -> std::string {
        if (x % 2 == 0) return std::to_string(x / 2);
        return std::to_string(x) + "/2";
    };
    return "((" + h(a[0]) + "," + h(a[1]) + "),(" + h(b[0]) + "," + h(b[1]) + "))";
}

bool operator==(const ThetaChar& x, const ThetaChar& y) { return x.a == y.a && x.b == y.b; }
bool operator<(const ThetaChar& x, const ThetaChar& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}
ThetaChar operator+(const ThetaChar& x, const ThetaChar& y) {
    return ThetaChar{{x.a[0] + y.a[0], x.a[1] + y.a[1]}, {x.b[0] + y.b[0], x.b[1] + y.b[1]}};
}

const std::vector<ThetaChar>& all_characteristics() {
    static const std::vector<ThetaChar> all = [] {
        std::vector<ThetaChar> v;
        for (int m = 0; m < 16; ++m) v.push_back(ThetaChar{{(m >> 3) & 1, (m >> 2) & 1}, {(m >> 1) & 1, m & 1}});
        return v;
    }();
    return all;
}

std::vector<ThetaChar> even_characteristics() {
    std::vector<ThetaChar> v;
    for (const auto& c : all_characteristics())
        if (!c.is_odd()) v.push_back(c);
    return v;
}

std::vector<ThetaChar> odd_characteristics() {
    std::vector<ThetaChar> v;
    for (const auto& c : all_characteristics())
        if (c.is_odd()) v.push_back(c);
    return v;
}

namespace {

struct RealMat2 {
    Real a, b, c, d;  // [[a, b], [c, d]]
};

RealMat2 inverse(const RealMat2& m) {
    Real det = m.a * m.d - m.b * m.c;
    return RealMat2{m.d / det, -m.b / det, -m.c / det, m.a / det};
}

RealMat2 imag_part(const CMat2& t) { return RealMat2{t(0, 0).im(), t(0, 1).im(), t(1, 0).im(), t(1, 1).im()}; }
RealMat2 real_part(const CMat2& t) { return RealMat2{t(0, 0).re(), t(0, 1).re(), t(1, 0).re(), t(1, 1).re()}; }

Real half(int twice, mpfr_prec_t p) { return Real::with_prec(0.5 * twice, p); }

struct LatticeSum {
    mpfr_prec_t wp;
    RealMat2 X, Y;
    std::array<Real, 2> a, b, reZ, c;
    long lo0, hi0, lo1, hi1;
    double R2;
    double Y00, Y01, Y11, ad0, ad1;
    Real pi;

    LatticeSum(const ThetaChar& ch, const CVec2& Z, const CMat2& tau, mpfr_prec_t prec) {
        double phase_scale = 1.0;
        for (int i = 0; i < 2; ++i) phase_scale += std::fabs(Z[i].re().to_double()) + std::fabs(Z[i].im().to_double());
        wp = prec + 32 + static_cast<mpfr_prec_t>(std::ceil(std::log2(phase_scale + 1.0))) * 2;
        PrecisionScope scope(wp);
        X = real_part(tau);
        Y = imag_part(tau);
        RealMat2 Yi = inverse(Y);
        for (int i = 0; i < 2; ++i) {
            a[i] = half(ch.a[i], wp);
            b[i] = half(ch.b[i], wp);
            reZ[i] = Z[i].re().rounded(wp);
        }
        Real im0 = Z[0].im().rounded(wp), im1 = Z[1].im().rounded(wp);
        c[0] = Yi.a * im0 + Yi.b * im1;
        c[1] = Yi.c * im0 + Yi.d * im1;
        pi = Real::pi(wp);
        R2 = (static_cast<double>(prec) * std::log(2.0) + 24.0) / M_PI;
        Y00 = Y.a.to_double();
        Y01 = Y.b.to_double();
        Y11 = Y.d.to_double();
        double r0 = std::sqrt(R2 * Yi.a.to_double()) + 1.0, r1 = std::sqrt(R2 * Yi.d.to_double()) + 1.0;
        ad0 = a[0].to_double() + c[0].to_double();
        ad1 = a[1].to_double() + c[1].to_double();
        lo0 = static_cast<long>(std::floor(-ad0 - r0));
        hi0 = static_cast<long>(std::ceil(-ad0 + r0));
        lo1 = static_cast<long>(std::floor(-ad1 - r1));
        hi1 = static_cast<long>(std::ceil(-ad1 + r1));
    }

    // Sum of one row n0 of Xi terms.
    Complex row(long n0) const {
        PrecisionScope scope(wp);
        Complex acc(Real(wp, 0), Real(wp, 0));
        Real v0 = Real(n0) + a[0];
        Real m0 = v0 + c[0];
        double m0d = static_cast<double>(n0) + ad0;
        for (long n1 = lo1; n1 <= hi1; ++n1) {
            double m1d = static_cast<double>(n1) + ad1;
            double q = Y00 * m0d * m0d + 2 * Y01 * m0d * m1d + Y11 * m1d * m1d;
            if (q > R2 + 1.0) continue;
            Real v1 = Real(n1) + a[1];
            Real m1 = v1 + c[1];
            Real quad = Y.a * m0 * m0 + 2L * (Y.b * m0 * m1) + Y.d * m1 * m1;
            Real mag = exp(-(pi * quad));
            Real ph = X.a * v0 * v0 + 2L * (X.b * v0 * v1) + X.d * v1 * v1;
            ph = pi * (ph + 2L * (v0 * (reZ[0] + b[0]) + v1 * (reZ[1] + b[1])));
            acc += Complex(mag * cos(ph), mag * sin(ph));
        }
        return acc;
    }

    Real damping_inverse(const CVec2& Z) const {
        PrecisionScope scope(wp);
        Real im0 = Z[0].im().rounded(wp), im1 = Z[1].im().rounded(wp);
        return exp(pi * (im0 * c[0] + im1 * c[1]));
    }
};

}  // namespace

Complex xi_complex(const ThetaChar& ch, const CVec2& Z, const CMat2& tau, mpfr_prec_t prec) {
    LatticeSum s(ch, Z, tau, prec);
    long rows = s.hi0 - s.lo0 + 1;
    std::vector<Complex> parts(static_cast<size_t>(rows));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < rows; ++i) parts[static_cast<size_t>(i)] = s.row(s.lo0 + i);
    PrecisionScope scope(s.wp);
    Complex acc(Real(s.wp, 0), Real(s.wp, 0));
    for (const auto& p : parts) acc += p;
    return acc.rounded(prec);
}

Complex xi_complex_reference(const ThetaChar& ch, const CVec2& Z, const CMat2& tau, mpfr_prec_t prec) {
    LatticeSum s(ch, Z, tau, prec);
    PrecisionScope scope(s.wp);
    Complex acc(Real(s.wp, 0), Real(s.wp, 0));
    for (long n0 = s.lo0; n0 <= s.hi0; ++n0) acc += s.row(n0);
    return acc.rounded(prec);
}

Real xi(const ThetaChar& ch, const CVec2& Z, const CMat2& tau, mpfr_prec_t prec) {
    return abs(xi_complex(ch, Z, tau, prec));
}

Complex theta(const ThetaChar& ch, const CVec2& Z, const CMat2& tau, mpfr_prec_t prec) {
    LatticeSum s(ch, Z, tau, prec);
    Complex x = xi_complex(ch, Z, tau, prec);
    PrecisionScope scope(s.wp);
    return (x * s.damping_inverse(Z)).rounded(prec);
}

Complex theta_reference(const ThetaChar& ch, const CVec2& Z, const CMat2& tau, mpfr_prec_t prec) {
    LatticeSum s(ch, Z, tau, prec);
    Complex x = xi_complex_reference(ch, Z, tau, prec);
    PrecisionScope scope(s.wp);
    return (x * s.damping_inverse(Z)).rounded(prec);
}

std::pair<std::array<Real, 2>, std::array<Real, 2>> lattice_coordinates(const CVec2& Z, const CMat2& tau) {
    RealMat2 Y = imag_part(tau), X = real_part(tau);
    RealMat2 Yi = inverse(Y);
    std::array<Real, 2> a{Yi.a * Z[0].im() + Yi.b * Z[1].im(), Yi.c * Z[0].im() + Yi.d * Z[1].im()};
    std::array<Real, 2> b{Z[0].re() - (X.a * a[0] + X.b * a[1]), Z[1].re() - (X.c * a[0] + X.d * a[1])};
    return {a, b};
}

CVec2 from_lattice_coordinates(const std::array<Real, 2>& a, const std::array<Real, 2>& b, const CMat2& tau) {
    CVec2 Z;
    for (int i = 0; i < 2; ++i) Z[i] = Complex(b[i], Real(b[i].prec(), 0)) + tau(i, 0) * a[0] + tau(i, 1) * a[1];
    return Z;
}

CVec2 reduce_mod_lattice(const CVec2& Z, const CMat2& tau) {
    auto [a, b] = lattice_coordinates(Z, tau);
    mpfr_prec_t p = Z[0].prec();
    PrecisionScope scope(p);
    Real h = Real::with_prec(0.5, p);
    for (int i = 0; i < 2; ++i) {
        a[i] = a[i] - floor(a[i] + h);
        b[i] = b[i] - floor(b[i] + h);
    }
    return from_lattice_coordinates(a, b, tau);
}

CVec2 half_period(const ThetaChar& ch, const CMat2& tau) {
    mpfr_prec_t p = tau(0, 0).prec();
    std::array<Real, 2> a{half(ch.a[0], p), half(ch.a[1], p)}, b{half(ch.b[0], p), half(ch.b[1], p)};
    return from_lattice_coordinates(a, b, tau);
}

double near_zero_ratio(const ThetaChar& ch, const CVec2& Z, const CMat2& tau, mpfr_prec_t prec) {
    ThetaChar r = ch.reduced();
    double y1 = tau(0, 0).im().to_double(), y2 = tau(1, 1).im().to_double(), y12 = tau(0, 1).im().to_double();
    double expo = 0.0;
    if (r.a[0] == 1 && r.a[1] == 0) expo = -M_PI * y1 / 4;
    if (r.a[0] == 0 && r.a[1] == 1) expo = -M_PI * y2 / 4;
    if (r.a[0] == 1 && r.a[1] == 1) expo = -M_PI * (y1 + y2 - 2 * y12) / 4;
    double t = abs(theta(ch, Z, tau, prec)).to_double();
    return t / std::exp(expo);
}

}  // namespace g2
