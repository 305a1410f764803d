#pragma once

#include "g2/family.hpp"
#include "g2/integer.hpp"

#include <vector>

namespace g2 {

// x = s / e^2, y = t / e^5 in lowest terms, or the point at infinity.
struct CurvePoint {
    bool infinity = false;
    Int s = 0;
    Int e = 1;
    Int t = 0;

    static CurvePoint at_infinity() {
        CurvePoint p;
        p.infinity = true;
        return p;
    }
    static CurvePoint affine(const Int& s, const Int& e, const Int& t) {
        CurvePoint p;
        p.s = s;
        p.e = e;
        p.t = t;
        return p;
    }
    CurvePoint negated() const {
        CurvePoint p = *this;
        p.t = -p.t;
        return p;
    }
    // Height of the x-coordinate, max(|s|, e^2).
    Int H() const;
    double h() const;
};

bool operator==(const CurvePoint& a, const CurvePoint& b);
inline bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
// Order by (e, s, sign of t); infinity first.
bool operator<(const CurvePoint& a, const CurvePoint& b);

// s^5 + a2 s^3 e^4 + a3 s^2 e^6 + a4 s e^8 + a5 e^10
Int weighted_value(const QuinticCurve& c, const Int& s, const Int& e);

bool is_on_curve(const QuinticCurve& c, const CurvePoint& p);

struct SearchOptions {
    bool mod_e6_sieve = false;
    int sieve_prime_count = 8;
};

// Affine points with 1 <= e <= e_max, |s| <= s_max plus infinity, both signs of t.
std::vector<CurvePoint> search_points(const QuinticCurve& c, long e_max, long s_max, const SearchOptions& opt = {});
// Unsieved serial brute force over the same box.
std::vector<CurvePoint> search_points_reference(const QuinticCurve& c, long e_max, long s_max);

// First `count` odd primes not dividing e * delta_f.
std::vector<unsigned long> sieve_primes(const QuinticCurve& c, long e, int count);

}  // namespace g2
