#pragma once

#include "g2/family.hpp"
#include "g2/kummer.hpp"

#include <array>
#include <future>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace g2 {

struct CVec2 {
    std::array<Complex, 2> v;
    Complex& operator[](int i) { return v[static_cast<size_t>(i)]; }
    const Complex& operator[](int i) const { return v[static_cast<size_t>(i)]; }
};

struct CMat2 {
    std::array<std::array<Complex, 2>, 2> m;
    Complex& operator()(int i, int j) { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const Complex& operator()(int i, int j) const { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    static CMat2 identity(mpfr_prec_t prec);
    CMat2 transpose() const;
    CMat2 inverse() const;
    Complex det() const;
};

CMat2 operator*(const CMat2& a, const CMat2& b);
CMat2 operator+(const CMat2& a, const CMat2& b);
CMat2 operator-(const CMat2& a, const CMat2& b);
CVec2 operator*(const CMat2& a, const CVec2& z);

// Theta characteristic with entries counted in halves: a_i = a2[i]/2, b_i = b2[i]/2.
struct ThetaChar {
    std::array<int, 2> a{0, 0};
    std::array<int, 2> b{0, 0};

    bool is_odd() const;
    ThetaChar reduced() const;  // entries in {0, 1}
    std::string str() const;
};
bool operator==(const ThetaChar& x, const ThetaChar& y);
bool operator<(const ThetaChar& x, const ThetaChar& y);
// Sum without reduction mod 1.
ThetaChar operator+(const ThetaChar& x, const ThetaChar& y);

// The sixteen reduced characteristics in lexicographic order.
const std::vector<ThetaChar>& all_characteristics();
std::vector<ThetaChar> even_characteristics();
std::vector<ThetaChar> odd_characteristics();

using Mat4i = std::array<std::array<long, 4>, 4>;

struct SiegelResult {
    CMat2 tau;
    // Rows act on the cycle vector (A1, A2, B1, B2).
    Mat4i transform;
    int moves = 0;
};

struct SiegelOptions {
    double slack = 1e-9;
    int max_sweeps = 200;
};

// Reduces a Riemann matrix given alone, via the pseudo-periods [I | tau].
SiegelResult reduce_siegel(const CMat2& tau, const SiegelOptions& opt = {});

struct ReductionCheck {
    bool real_parts = false;
    bool minkowski = false;
    bool im_tau1 = false;
    bool ok() const { return real_parts && minkowski && im_tau1; }
};
ReductionCheck check_reduced(const CMat2& tau, double slack = 1e-9);

struct RiemannData {
    mpfr_prec_t precision_bits = 256;
    CMat2 tau;
    CMat2 big_period;    // integrals over A1, A2 (columns) of dx/y, x dx/y (rows)
    CMat2 small_period;  // same over B1, B2
    Complex center;      // common start of the spokes
    // Integral from a finite root to infinity along its spoke, (dx/y, x dx/y), by root index.
    std::array<std::array<Complex, 2>, 5> spokes;
    // Cycles (A1, A2, B1, B2) as integer combinations of the root cycles c_k = 2 * spoke_k.
    std::array<std::array<long, 5>, 4> basis{};
    Mat4i reduction{};
    // Index 0..4: finite roots in stored order; index 5: infinity.
    std::array<ThetaChar, 6> char_table;
    // Half-period of the Abel-Jacobi image of (rho_k, 0).
    std::array<ThetaChar, 5> root_half_periods;
    double symmetry_defect = 0.0;
    double relation_defect = 0.0;
};

struct PeriodOptions {
    int gauss_nodes = 24;
    int max_depth = 40;
    double match_tolerance = 1e-6;
    SiegelOptions siegel;
};

// Periods, Siegel reduction and characteristic table.
RiemannData compute_periods(const QuinticCurve& c, mpfr_prec_t prec = 256, const PeriodOptions& opt = {});

// Single-flight per curve and precision.
class RiemannCache {
public:
    std::shared_ptr<const RiemannData> get(const QuinticCurve& c, mpfr_prec_t prec = 256);

private:
    std::mutex mu_;
    std::map<std::string, std::shared_future<std::shared_ptr<const RiemannData>>> map_;
};

// Integral of (dx/y, x dx/y) from infinity to (x0, y0), normalized by the big period.
CVec2 abel_jacobi(const RiemannData& rd, const QuinticCurve& c, const Complex& x0, const Complex& y0,
                  const PeriodOptions& opt = {});
// Real coordinates (a, b) with Z = b + tau a.
std::pair<std::array<Real, 2>, std::array<Real, 2>> lattice_coordinates(const CVec2& Z, const CMat2& tau);
CVec2 from_lattice_coordinates(const std::array<Real, 2>& a, const std::array<Real, 2>& b, const CMat2& tau);
// Representative with both coordinate pairs in [-1/2, 1/2).
CVec2 reduce_mod_lattice(const CVec2& Z, const CMat2& tau);
// b + tau a for the half-period of a characteristic.
CVec2 half_period(const ThetaChar& ch, const CMat2& tau);

// theta_{a,b}(Z) = sum_n e(1/2 (n+a)^T tau (n+a) + (n+a)^T (Z+b)).
Complex theta(const ThetaChar& ch, const CVec2& Z, const CMat2& tau, mpfr_prec_t prec);
// theta * exp(-pi Im Z^T (Im tau)^-1 Im Z), summed with the exponent completed to a square.
Complex xi_complex(const ThetaChar& ch, const CVec2& Z, const CMat2& tau, mpfr_prec_t prec);
Real xi(const ThetaChar& ch, const CVec2& Z, const CMat2& tau, mpfr_prec_t prec);
// Serial lattice sums for testing the parallel kernel.
Complex theta_reference(const ThetaChar& ch, const CVec2& Z, const CMat2& tau, mpfr_prec_t prec);
Complex xi_complex_reference(const ThetaChar& ch, const CVec2& Z, const CMat2& tau, mpfr_prec_t prec);

// Odd characteristic whose theta function vanishes on the image of the curve.
ThetaChar find_chi_infinity(const RiemannData& rd, const QuinticCurve& c);

// 2 log|theta_{chi_beta + chi_inf + chi_alpha}(0)| + 1/2 log|f'(alpha)| - log|alpha - beta|.
double c_rho(const RiemannData& rd, const QuinticCurve& c, int beta, int alpha);
int default_auxiliary_root(const RiemannData& rd, const QuinticCurve& c, int beta);

// -2 log|Xi_{chi_rho}(Z)| + log|l_rho(K)| + c_rho; throws OnDivisor when l_rho(K) is tiny.
double lambda_inf_theta(const RiemannData& rd, const QuinticCurve& c, const CQuad& K, const CVec2& Z, int rho,
                        double divisor_tolerance = 1e-20);
// Same, choosing rho with the largest |l_rho(K)|.
double lambda_inf_theta(const RiemannData& rd, const QuinticCurve& c, const CQuad& K, const CVec2& Z);

// Lift data for kappa(P): Abel-Jacobi image of P and the Kummer vector as complex numbers.
struct PointLift {
    CVec2 Z;
    CQuad K;
};
PointLift lift_point(const RiemannData& rd, const QuinticCurve& c, const CurvePoint& P);

// Igusa-Clebsch I4 = sum over S5 of (r1-r2)^2 (r2-r3)^2 (r3-r1)^2 (r4-r5)^2.
Complex igusa_i4(const std::vector<Complex>& roots);
// Igusa-Clebsch I4 over the roots (one root at infinity), I4^5 / Delta_f^2.
Complex igusa_i3_roots(const QuinticCurve& c, mpfr_prec_t prec = 256);
// The printed form with the extra (rho4 rho5)^2 weight, kept for comparison only.
Complex igusa_i3_roots_printed(const QuinticCurve& c, mpfr_prec_t prec = 256);
Complex igusa_i3_thetas(const RiemannData& rd);

// Ratio |theta_chi(Z)| / expected leading term for Z = B + tau A near zero.
double near_zero_ratio(const ThetaChar& ch, const CVec2& Z, const CMat2& tau, mpfr_prec_t prec);

std::string riemann_json(const RiemannData& rd);

}  // namespace g2
