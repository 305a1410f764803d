#pragma once

#include "g2/family.hpp"
#include "g2/points.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace g2 {

using Quad = std::array<Int, 4>;

// Primitive integer point of P^3, first nonzero coordinate positive.
struct KummerCoords {
    Quad k{0, 0, 0, 1};

    KummerCoords() = default;
    explicit KummerCoords(const Quad& raw);  // normalizes
    static KummerCoords identity() { return KummerCoords(); }

    bool is_identity() const { return k[0] == 0 && k[1] == 0 && k[2] == 0; }
    double naive_log() const;
    std::string str() const;
};

bool operator==(const KummerCoords& a, const KummerCoords& b);
inline bool operator!=(const KummerCoords& a, const KummerCoords& b) { return !(a == b); }

// gcd of the coordinates (nonnegative); zero only for the zero vector.
Int content(const Quad& q);
Quad primitive_part(const Quad& q);

KummerCoords kappa(const CurvePoint& p);

// One monomial of a duplication form: coef * a2^e0 a3^e1 a4^e2 a5^e3 k1^e4 k2^e5 k3^e6 k4^e7.
struct DeltaTerm {
    int form;
    long coef;
    std::array<uint8_t, 8> exps;
};
const std::vector<DeltaTerm>& delta_terms();

struct DeltaChecksum {
    std::array<int, 4> terms{};
    std::array<long, 4> coef_sum{};
};
DeltaChecksum delta_checksum(const std::vector<DeltaTerm>& table);

// The four duplication forms evaluated exactly, without normalization.
Quad delta_raw(const QuinticCurve& c, const Quad& k);
Quad delta_raw(const std::array<Int, 4>& a, const Quad& k, const std::vector<DeltaTerm>& table);
std::array<Real, 4> delta_real(const std::array<Real, 4>& a, const std::array<Real, 4>& k);

// Doubling on the Kummer surface; throws DegenerateImage if all four forms vanish.
KummerCoords double_coords(const QuinticCurve& c, const KummerCoords& K);

// {kappa(P+Q), kappa(P-Q)}: first member carries -2Yy, second +2Yy.
std::pair<KummerCoords, KummerCoords> sum_and_diff_coords(const QuinticCurve& c, const CurvePoint& P,
                                                          const CurvePoint& Q);
std::pair<Quad, Quad> sum_and_diff_raw(const QuinticCurve& c, const CurvePoint& P, const CurvePoint& Q);

using CQuad = std::array<Complex, 4>;
CQuad to_complex(const Quad& k, mpfr_prec_t prec);

// l_rho(w,x,y,z) = rho^2 w - rho x + y
Complex ell_root(const Complex& rho, const CQuad& K);
// l_inf(w,x,y,z) = w
Complex ell_infinity(const CQuad& K);
// Linear form attached to the pair of roots {alpha, beta}.
Complex ell_pair(const QuinticCurve& c, const Complex& alpha, const Complex& beta, const CQuad& K);

}  // namespace g2
