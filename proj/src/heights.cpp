#include "g2/heights.hpp"

#include "g2/errors.hpp"

#include <cmath>
#include <mutex>

namespace g2 {

double naive_height_x(const CurvePoint& p) {
    if (p.infinity) throw InfinityPoint("naive height of the point at infinity");
    return p.h();
}

double naive_hK(const KummerCoords& K) { return K.naive_log(); }

double stoll_bound(const QuinticCurve& c, const Int& p) {
    Int d = c.delta * 16;
    return valuation(d, p) * std::log(p.get_d()) / 3.0;
}

namespace {

double stoll_tail_sum(const QuinticCurve& c, const std::map<Int, unsigned>& bad) {
    double s = 0.0;
    for (const auto& [p, e] : bad) s += stoll_bound(c, p);
    return s;
}

Int ipow_ui(const Int& p, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

struct PadicOrbit {
    std::vector<unsigned> v;  // valuation of the extracted gcd at each step
};

// Orbit of K under duplication modulo p^M; nullopt-like empty result if precision ran out.
bool padic_orbit(const std::array<Int, 4>& a, const Quad& K, const Int& p, long M, int N, PadicOrbit& out) {
    out.v.clear();
    long prec = M;
    Int mod = ipow_ui(p, static_cast<unsigned long>(prec));
    Quad kp;
    for (int i = 0; i < 4; ++i) mpz_fdiv_r(kp[i].get_mpz_t(), K[i].get_mpz_t(), mod.get_mpz_t());
    const auto& table = delta_terms();
    for (int n = 0; n < N; ++n) {
        Quad d = delta_raw(a, kp, table);
        long v = prec;
        for (auto& x : d) {
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
            if (x != 0) v = std::min<long>(v, valuation(x, p));
        }
        if (v >= prec) return false;
        out.v.push_back(static_cast<unsigned>(v));
        Int pv = ipow_ui(p, static_cast<unsigned long>(v));
        prec -= v;
        mod = ipow_ui(p, static_cast<unsigned long>(prec));
        for (int i = 0; i < 4; ++i) {
            mpz_divexact(kp[i].get_mpz_t(), d[i].get_mpz_t(), pv.get_mpz_t());
            mpz_fdiv_r(kp[i].get_mpz_t(), kp[i].get_mpz_t(), mod.get_mpz_t());
        }
    }
    return true;
}

// Archimedean correction sum_n 4^{-n-1} log max|delta(K_n)| over the normalized real orbit.
Real real_orbit(const std::array<Int, 4>& a, const Quad& K, int N, mpfr_prec_t prec) {
    PrecisionScope scope(prec);
    std::array<Real, 4> ar{Real(a[0]), Real(a[1]), Real(a[2]), Real(a[3])};
    std::array<Real, 4> r{Real(K[0]), Real(K[1]), Real(K[2]), Real(K[3])};
    Real mu(prec, 0);
    Real w = Real(1);
    for (int n = 0; n < N; ++n) {
        Real m = max(max(abs(r[0]), abs(r[1])), max(abs(r[2]), abs(r[3])));
        for (auto& x : r) x = x / m;
        auto d = delta_real(ar, r);
        Real md = max(max(abs(d[0]), abs(d[1])), max(abs(d[2]), abs(d[3])));
        if (md.is_zero()) throw DegenerateImage("real duplication orbit hit the zero vector");
        w = w / 4L;
        mu += log(md) * w;
        r = std::move(d);
    }
    return mu;
}

}  // namespace

double tate_tail_bound(const QuinticCurve& c, int N, double c_arch) {
    auto bad = factor(c.delta);
    double scale = std::ldexp(1.0, -2 * N);
    return (12.0 * c.h() + c_arch) / 3.0 * scale + stoll_tail_sum(c, bad) * scale;
}

int doublings_for(const QuinticCurve& c, double target_error, double c_arch, double stoll_tail) {
    if (!(target_error > 0)) throw DomainError("target_error must be positive");
    double a = (12.0 * c.h() + c_arch) / 3.0 + stoll_tail;
    int N = 0;
    while (a * std::ldexp(1.0, -2 * N) > target_error) ++N;
    return N;
}

CanonicalHeightResult canonical_height(const QuinticCurve& c, const KummerCoords& K, const HeightOptions& opt) {
    auto bad = factor(c.delta);
    double stail = stoll_tail_sum(c, bad);
    int N = std::max(1, doublings_for(c, 0.5 * opt.target_error, opt.c_arch, stail));
    if (N > opt.max_doublings) throw PrecisionExhausted("too many doublings required for the target error");
    auto a = c.coeffs();

    CanonicalHeightResult res;
    res.n_doublings = N;
    res.naive = naive_hK(K);

    std::map<Int, PadicOrbit> orbits;
    for (const auto& [p, e] : bad) {
        long M = 60L * (e + 2) + 50;
        PadicOrbit orb;
        while (!padic_orbit(a, K.k, p, M, N, orb)) {
            M *= 2;
            if (static_cast<double>(M) * std::log2(p.get_d()) > static_cast<double>(opt.padic_bit_budget))
                throw PrecisionExhausted("p-adic precision budget exceeded at p = " + to_dec(p));
        }
        double tot = 0.0;
        for (size_t n = 0; n < orb.v.size(); ++n) tot += std::ldexp(static_cast<double>(orb.v[n]), -2 * (int(n) + 1));
        res.prime_corrections[p] = -tot * std::log(p.get_d());
        orbits.emplace(p, std::move(orb));
    }

    // exact replay of the first steps: the gcd must be supported on bad primes and match the p-adic valuations
    Quad k = K.k;
    for (int n = 0; n < std::min(N, opt.exact_steps); ++n) {
        Quad d = delta_raw(a, k, delta_terms());
        Int g = content(d);
        if (g == 0) throw DegenerateImage("all duplication forms vanish at " + KummerCoords(k).str());
        Int other = g;
        for (const auto& [p, orb] : orbits) {
            unsigned v = valuation(other, p);
            if (v != orb.v[static_cast<size_t>(n)])
                throw InvariantViolation("p-adic and exact valuations disagree at p = " + to_dec(p));
            if (v) mpz_divexact(other.get_mpz_t(), other.get_mpz_t(), ipow_ui(p, v).get_mpz_t());
        }
        if (other != 1) throw InvariantViolation("gcd cofactor outside the bad primes: " + to_dec(other));
        for (int i = 0; i < 4; ++i) mpz_divexact(k[i].get_mpz_t(), d[i].get_mpz_t(), g.get_mpz_t());
        long bits = 0;
        for (const auto& x : k) bits = std::max<long>(bits, static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)));
        if (bits > opt.exact_bit_budget) break;
    }

    Real mu = real_orbit(a, K.k, N, opt.prec);
    Real mu_hi = real_orbit(a, K.k, N, opt.prec + 64);
    res.archimedean_correction = mu.to_double();
    double round_err = std::fabs((mu - mu_hi).to_double());

    Interval acc = Interval::around(res.naive, std::fabs(res.naive) * 4e-16);
    acc = acc + Interval::around(res.archimedean_correction, std::fabs(res.archimedean_correction) * 2e-16);
    for (const auto& [p, m] : res.prime_corrections) acc = acc + Interval::around(m, std::fabs(m) * 4e-16 * N);
    res.value = acc.mid();
    res.tail_bound = tate_tail_bound(c, N, opt.c_arch);
    res.rounding_error = round_err;
    res.error_radius = acc.rad() + res.tail_bound + round_err;
    return res;
}

CanonicalHeightResult canonical_height(const QuinticCurve& c, const CurvePoint& P, const HeightOptions& opt) {
    return canonical_height(c, kappa(P), opt);
}

double archimedean_step(const QuinticCurve& c, const std::array<double, 4>& K) {
    PrecisionScope scope(128);
    auto a = c.coeffs();
    std::array<Real, 4> ar{Real(a[0]), Real(a[1]), Real(a[2]), Real(a[3])};
    std::array<Real, 4> r{Real(K[0]), Real(K[1]), Real(K[2]), Real(K[3])};
    Real m = max(max(abs(r[0]), abs(r[1])), max(abs(r[2]), abs(r[3])));
    auto d = delta_real(ar, r);
    Real md = max(max(abs(d[0]), abs(d[1])), max(abs(d[2]), abs(d[3])));
    return (log(md) - 4L * log(m)).to_double();
}

PairingResult pairing(const QuinticCurve& c, const CurvePoint& P, const CurvePoint& Q, const HeightOptions& opt) {
    auto [s, d] = sum_and_diff_coords(c, P, Q);
    auto hp = canonical_height(c, P, opt);
    auto hq = canonical_height(c, Q, opt);
    auto hs = canonical_height(c, s, opt);
    return {(hs.value - hp.value - hq.value) / 2.0, (hs.error_radius + hp.error_radius + hq.error_radius) / 2.0};
}

PairingResult pairing_via_difference(const QuinticCurve& c, const CurvePoint& P, const CurvePoint& Q,
                                     const HeightOptions& opt) {
    auto [s, d] = sum_and_diff_coords(c, P, Q);
    auto hp = canonical_height(c, P, opt);
    auto hq = canonical_height(c, Q, opt);
    auto hd = canonical_height(c, d, opt);
    return {(hd.value - hp.value - hq.value) / 2.0, (hd.error_radius + hp.error_radius + hq.error_radius) / 2.0};
}

CosResult cos_theta_from(const CanonicalHeightResult& hp, const CanonicalHeightResult& hq,
                         const CanonicalHeightResult& hsum) {
    Interval ip = hp.interval(), iq = hq.interval(), is = hsum.interval();
    if (ip.lo <= 0.0 || iq.lo <= 0.0) throw TorsionOperand("height indistinguishable from zero");
    Interval num = (is - ip - iq) / Interval(2.0);
    Interval cosv = num / sqrt(ip * iq);
    CosResult r;
    r.value = cosv.mid();
    r.error_radius = cosv.rad();
    const double eps = 1e-9;
    if (cosv.hi < -1.0 - eps || cosv.lo > 1.0 + eps) {
        r.clamped = true;
        r.value = std::clamp(r.value, -1.0, 1.0);
    }
    return r;
}

CosResult cos_theta(const QuinticCurve& c, const CurvePoint& P, const CurvePoint& Q, const HeightOptions& opt) {
    auto [s, d] = sum_and_diff_coords(c, P, Q);
    return cos_theta_from(canonical_height(c, P, opt), canonical_height(c, Q, opt), canonical_height(c, s, opt));
}

const CanonicalHeightResult& HeightCache::get(const QuinticCurve& c, const KummerCoords& K, const HeightOptions& opt) {
    std::string key = c.key() + "|" + K.str();
    {
        std::shared_lock lk(mu_);
        auto it = map_.find(key);
        if (it != map_.end()) return *it->second;
    }
    auto fresh = std::make_unique<const CanonicalHeightResult>(canonical_height(c, K, opt));
    std::unique_lock lk(mu_);
    auto [it, inserted] = map_.try_emplace(key, std::move(fresh));
    return *it->second;
}

size_t HeightCache::size() const {
    std::shared_lock lk(mu_);
    return map_.size();
}

}  // namespace g2
