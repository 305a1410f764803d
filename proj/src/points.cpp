#include "g2/points.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace g2 {

Int CurvePoint::H() const {
    Int e2 = e * e;
    Int as = abs(s);
    return as > e2 ? as : e2;
}

double CurvePoint::h() const { return log_abs(H()); }

bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.s == b.s && a.e == b.e && a.t == b.t;
}

bool operator<(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity != b.infinity) return a.infinity;
    if (a.infinity) return false;
    if (a.e != b.e) return a.e < b.e;
    if (a.s != b.s) return a.s < b.s;
    return a.t < b.t;
}

Int weighted_value(const QuinticCurve& c, const Int& s, const Int& e) {
    Int e2 = e * e;
    Int e4 = e2 * e2;
    Int e6 = e4 * e2;
    Int e8 = e4 * e4;
    Int e10 = e8 * e2;
    Int s2 = s * s;
    Int s3 = s2 * s;
    return s3 * s2 + c.a2 * s3 * e4 + c.a3 * s2 * e6 + c.a4 * s * e8 + c.a5 * e10;
}

bool is_on_curve(const QuinticCurve& c, const CurvePoint& p) {
    if (p.infinity) return true;
    if (p.e <= 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), p.s.get_mpz_t(), p.e.get_mpz_t());
    if (g != 1) return false;
    mpz_gcd(g.get_mpz_t(), p.t.get_mpz_t(), p.e.get_mpz_t());
    if (g != 1) return false;
    return p.t * p.t == weighted_value(c, p.s, p.e);
}

std::vector<unsigned long> sieve_primes(const QuinticCurve& c, long e, int count) {
    std::vector<unsigned long> out;
    Int m = c.delta * e;
    for (unsigned long p = 3; static_cast<int>(out.size()) < count; p += 2) {
        bool prime = true;
        for (unsigned long d = 3; d * d <= p; d += 2)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        out.push_back(p);
    }
    return out;
}

namespace {

unsigned long mod_ui(const Int& z, unsigned long p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

struct PrimeFilter {
    unsigned long p;
    unsigned long c2, c3, c4, c5;
    std::vector<unsigned char> square;

    bool pass(long s) const {
        long r = s % static_cast<long>(p);
        unsigned long x = static_cast<unsigned long>(r < 0 ? r + static_cast<long>(p) : r);
        unsigned long v = x;
        v = (v * x + c2) % p;
        v = (v * x + c3) % p;
        v = (v * x + c4) % p;
        v = (v * x + c5) % p;
        return square[v] != 0;
    }
};

std::vector<PrimeFilter> build_filters(const QuinticCurve& c, long e, int count) {
    std::vector<PrimeFilter> fs;
    for (unsigned long p : sieve_primes(c, e, count)) {
        PrimeFilter f;
        f.p = p;
        unsigned long ep = static_cast<unsigned long>(e) % p;
        unsigned long e2 = ep * ep % p, e4 = e2 * e2 % p, e6 = e4 * e2 % p, e8 = e4 * e4 % p, e10 = e8 * e2 % p;
        f.c2 = mod_ui(c.a2, p) * e4 % p;
        f.c3 = mod_ui(c.a3, p) * e6 % p;
        f.c4 = mod_ui(c.a4, p) * e8 % p;
        f.c5 = mod_ui(c.a5, p) * e10 % p;
        f.square.assign(p, 0);
        for (unsigned long x = 0; x < p; ++x) f.square[x * x % p] = 1;
        fs.push_back(std::move(f));
    }
    return fs;
}

// Squares modulo e^6, used as a necessary condition t^2 = s^5 + a2 s^3 e^4 (mod e^6).
struct HighPowerFilter {
    bool active = false;
    unsigned long m = 1;
    unsigned long a2e4 = 0;
    std::vector<unsigned char> square;

    HighPowerFilter(const QuinticCurve& c, long e) {
        if (e < 2) return;
        double m6 = std::pow(static_cast<double>(e), 6);
        if (m6 > static_cast<double>(1UL << 24)) return;
        active = true;
        m = static_cast<unsigned long>(e) * e * e * e * e * e;
        unsigned long e4 = static_cast<unsigned long>(e) * e * e * e;
        a2e4 = mod_ui(c.a2, m) * (e4 % m) % m;
        square.assign(m, 0);
        for (unsigned long x = 0; x < m; ++x) square[(x * x) % m] = 1;
    }

    bool pass(long s) const {
        if (!active) return true;
        long r = s % static_cast<long>(m);
        unsigned long x = static_cast<unsigned long>(r < 0 ? r + static_cast<long>(m) : r);
        unsigned __int128 x2 = static_cast<unsigned __int128>(x) * x % m;
        unsigned __int128 x3 = x2 * x % m;
        unsigned __int128 x5 = x3 * x2 % m;
        unsigned long v = static_cast<unsigned long>((x5 + x3 * a2e4) % m);
        return square[v] != 0;
    }
};

void emit(std::vector<CurvePoint>& out, const Int& s, long e, const Int& t) {
    out.push_back(CurvePoint::affine(s, Int(e), t));
    if (t != 0) out.push_back(CurvePoint::affine(s, Int(e), -t));
}

std::vector<CurvePoint> search_stratum(const QuinticCurve& c, long e, long s_max, const SearchOptions& opt) {
    std::vector<CurvePoint> out;
    auto filters = build_filters(c, e, opt.sieve_prime_count);
    HighPowerFilter hp = opt.mod_e6_sieve ? HighPowerFilter(c, e) : HighPowerFilter(c, 1);
    Int ez(e), n, t;
    for (long s = -s_max; s <= s_max; ++s) {
        if (std::gcd(std::labs(s), e) != 1) continue;
        bool ok = true;
        for (const auto& f : filters)
            if (!f.pass(s)) {
                ok = false;
                break;
            }
        if (!ok || !hp.pass(s)) continue;
        n = weighted_value(c, Int(s), ez);
        if (is_square(n, &t)) {
            Int g;
            mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), ez.get_mpz_t());
            if (g == 1) emit(out, Int(s), e, t);
        }
    }
    return out;
}

}  // namespace

std::vector<CurvePoint> search_points(const QuinticCurve& c, long e_max, long s_max, const SearchOptions& opt) {
    std::vector<std::vector<CurvePoint>> strata(static_cast<size_t>(std::max(0L, e_max)));
#pragma omp parallel for schedule(dynamic)
    for (long e = 1; e <= e_max; ++e) strata[static_cast<size_t>(e - 1)] = search_stratum(c, e, s_max, opt);
    std::vector<CurvePoint> out{CurvePoint::at_infinity()};
    for (auto& v : strata) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CurvePoint> search_points_reference(const QuinticCurve& c, long e_max, long s_max) {
    std::vector<CurvePoint> out{CurvePoint::at_infinity()};
    Int n, t;
    for (long e = 1; e <= e_max; ++e)
        for (long s = -s_max; s <= s_max; ++s) {
            if (std::gcd(std::labs(s), e) != 1) continue;
            n = weighted_value(c, Int(s), Int(e));
            if (n < 0) continue;
            mpz_sqrt(t.get_mpz_t(), n.get_mpz_t());
            if (t * t != n) continue;
            Int g;
            mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), Int(e).get_mpz_t());
            if (g == 1) emit(out, Int(s), e, t);
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace g2
