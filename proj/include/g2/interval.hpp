#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace g2 {

// Closed interval of doubles with outward rounding after every operation.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double x) : lo(x), hi(x) {}
    Interval(double l, double h) : lo(l), hi(h) {}

    static Interval around(double mid, double rad) {
        rad = std::fabs(rad);
        return Interval(down(mid - rad), up(mid + rad));
    }

    double mid() const { return 0.5 * lo + 0.5 * hi; }
    double rad() const { return up(std::max(up(hi - mid()), up(mid() - lo))); }
    bool contains(double x) const { return lo <= x && x <= hi; }

    static double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
    static double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return Interval(Interval::down(a.lo + b.lo), Interval::up(a.hi + b.hi));
}
inline Interval operator-(const Interval& a, const Interval& b) {
    return Interval(Interval::down(a.lo - b.hi), Interval::up(a.hi - b.lo));
}
inline Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }
inline Interval operator*(const Interval& a, const Interval& b) {
    double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return Interval(Interval::down(*std::min_element(c, c + 4)), Interval::up(*std::max_element(c, c + 4)));
}
inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo <= 0.0 && b.hi >= 0.0) {
        double inf = std::numeric_limits<double>::infinity();
        return Interval(-inf, inf);
    }
    double c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    return Interval(Interval::down(*std::min_element(c, c + 4)), Interval::up(*std::max_element(c, c + 4)));
}
inline Interval sqrt(const Interval& a) {
    return Interval(Interval::down(std::sqrt(std::max(0.0, a.lo))), Interval::up(std::sqrt(std::max(0.0, a.hi))));
}
inline Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

}  // namespace g2
