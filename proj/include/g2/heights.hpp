#pragma once

#include "g2/constants.hpp"
#include "g2/interval.hpp"
#include "g2/kummer.hpp"
#include "g2/points.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace g2 {

// log max(|s|, e^2); throws InfinityPoint at infinity.
double naive_height_x(const CurvePoint& p);
// log max |k_i| of a primitive vector.
double naive_hK(const KummerCoords& K);

struct HeightOptions {
    double target_error = 1e-8;
    mpfr_prec_t prec = 256;
    double c_arch = FrozenConstants{}.c_arch;
    int exact_steps = 4;          // doublings replayed in exact integers as a cross-check
    long exact_bit_budget = 1 << 16;
    long padic_bit_budget = 1 << 20;  // largest p-adic modulus before giving up
    int max_doublings = 64;
};

struct CanonicalHeightResult {
    double value = 0.0;
    double error_radius = 0.0;
    int n_doublings = 0;
    std::map<Int, double> prime_corrections;  // mu_p
    double archimedean_correction = 0.0;      // mu_inf
    double naive = 0.0;
    double tail_bound = 0.0;
    double rounding_error = 0.0;

    Interval interval() const { return Interval::around(value, error_radius); }
};

// Smallest N with the Tate tail bound below the target.
int doublings_for(const QuinticCurve& c, double target_error, double c_arch, double stoll_tail);

// Tail bound after N doublings: (12 h(f) + C_arch)/(3 4^N) + 4^-N sum_p (1/3) v_p(2^4 Delta) log p.
double tate_tail_bound(const QuinticCurve& c, int N, double c_arch);

// Local Stoll bound (1/3) v_p(2^4 Delta_f) log p.
double stoll_bound(const QuinticCurve& c, const Int& p);

CanonicalHeightResult canonical_height(const QuinticCurve& c, const KummerCoords& K, const HeightOptions& opt = {});
CanonicalHeightResult canonical_height(const QuinticCurve& c, const CurvePoint& P, const HeightOptions& opt = {});

// One archimedean step log max|delta(K)| - 4 log max|K| at double precision, for calibration.
double archimedean_step(const QuinticCurve& c, const std::array<double, 4>& K);

struct PairingResult {
    double value = 0.0;
    double error_radius = 0.0;
};

// (h(P+Q) - h(P) - h(Q))/2 via the sum member.
PairingResult pairing(const QuinticCurve& c, const CurvePoint& P, const CurvePoint& Q, const HeightOptions& opt = {});
// (h(P-Q) - h(P) - h(Q))/2 via the difference member, i.e. <P,-Q>.
PairingResult pairing_via_difference(const QuinticCurve& c, const CurvePoint& P, const CurvePoint& Q,
                                     const HeightOptions& opt = {});

struct CosResult {
    double value = 0.0;
    double error_radius = 0.0;
    bool clamped = false;  // interval left [-1-eps, 1+eps]
};
CosResult cos_theta(const QuinticCurve& c, const CurvePoint& P, const CurvePoint& Q, const HeightOptions& opt = {});
CosResult cos_theta_from(const CanonicalHeightResult& hp, const CanonicalHeightResult& hq,
                         const CanonicalHeightResult& hsum);

// Append-only cache of canonical heights keyed by (curve, Kummer point).
class HeightCache {
public:
    const CanonicalHeightResult& get(const QuinticCurve& c, const KummerCoords& K, const HeightOptions& opt = {});
    size_t size() const;

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<std::string, std::unique_ptr<const CanonicalHeightResult>> map_;
};

}  // namespace g2
