#include "g2/family.hpp"

#include "g2/errors.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace g2 {

const std::vector<Complex>* RootCache::find(mpfr_prec_t prec) const {
    std::shared_lock lock(mu_);
    auto it = by_prec_.find(prec);
    return it == by_prec_.end() ? nullptr : it->second.get();
}

const std::vector<Complex>& RootCache::insert(mpfr_prec_t prec, std::vector<Complex> roots) {
    std::unique_lock lock(mu_);
    auto it = by_prec_.find(prec);
    if (it != by_prec_.end()) return *it->second;
    auto [pos, ok] = by_prec_.emplace(prec, std::make_unique<const std::vector<Complex>>(std::move(roots)));
    (void)ok;
    return *pos->second;
}

double QuinticCurve::h() const { return std::max(0.0, std::log(H)); }

std::string QuinticCurve::key() const {
    std::ostringstream os;
    os << a2 << ',' << a3 << ',' << a4 << ',' << a5;
    return os.str();
}

const std::vector<Complex>& QuinticCurve::roots(mpfr_prec_t prec) const {
    if (auto* r = cache->find(prec)) return *r;
    return cache->insert(prec, complex_roots(*this, prec));
}

Complex QuinticCurve::eval(const Complex& x) const {
    mpfr_prec_t p = x.prec();
    Complex acc = x * x;
    acc += Complex(Real::with_prec(a2, p));
    acc = acc * x + Complex(Real::with_prec(a3, p));
    acc = acc * x + Complex(Real::with_prec(a4, p));
    acc = acc * x + Complex(Real::with_prec(a5, p));
    return acc;
}

Complex QuinticCurve::eval_derivative(const Complex& x) const {
    mpfr_prec_t p = x.prec();
    Complex x2 = x * x;
    Complex r = x2 * x2 * Real::with_prec(5.0, p);
    r += x2 * Real::with_prec(a2 * 3, p);
    r += x * Real::with_prec(a3 * 2, p);
    r += Complex(Real::with_prec(a4, p));
    return r;
}

Int discriminant(const Int& a2, const Int& a3, const Int& a4, const Int& a5) {
    const std::vector<Int> f = {1, 0, a2, a3, a4, a5};
    const std::vector<Int> df = {5, 0, 3 * a2, 2 * a3, a4};
    std::vector<std::vector<Int>> s(9, std::vector<Int>(9, 0));
    for (int r = 0; r < 4; ++r)
        for (int j = 0; j < 6; ++j) s[r][r + j] = f[j];
    for (int r = 0; r < 5; ++r)
        for (int j = 0; j < 5; ++j) s[4 + r][r + j] = df[j];
    return bareiss_determinant(s);
}

Int discriminant_poly(const Int& a2, const Int& a3, const Int& a4, const Int& a5) {
    Int a2_2 = a2 * a2, a2_3 = a2_2 * a2, a2_4 = a2_3 * a2, a2_5 = a2_4 * a2;
    Int a3_2 = a3 * a3, a3_3 = a3_2 * a3, a3_4 = a3_3 * a3, a3_5 = a3_4 * a3;
    Int a4_2 = a4 * a4, a4_3 = a4_2 * a4, a4_4 = a4_3 * a4, a4_5 = a4_4 * a4;
    Int a5_2 = a5 * a5, a5_3 = a5_2 * a5, a5_4 = a5_3 * a5;
    return 108 * a2_5 * a5_2 - 72 * a2_4 * a3 * a4 * a5 + 16 * a2_4 * a4_3 + 16 * a2_3 * a3_3 * a5 -
           4 * a2_3 * a3_2 * a4_2 - 900 * a2_3 * a4 * a5_2 + 825 * a2_2 * a3_2 * a5_2 +
           560 * a2_2 * a3 * a4_2 * a5 - 128 * a2_2 * a4_4 - 630 * a2 * a3_3 * a4 * a5 + 144 * a2 * a3_2 * a4_3 -
           3750 * a2 * a3 * a5_3 + 2000 * a2 * a4_2 * a5_2 + 108 * a3_5 * a5 - 27 * a3_4 * a4_2 +
           2250 * a3_2 * a4 * a5_2 - 1600 * a3 * a4_3 * a5 + 256 * a4_5 + 3125 * a5_4;
}

__int128 discriminant_i128(int64_t a2_, int64_t a3_, int64_t a4_, int64_t a5_) {
    using I = __int128;
    const I a2 = a2_, a3 = a3_, a4 = a4_, a5 = a5_;
    const I a2_2 = a2 * a2, a2_3 = a2_2 * a2, a2_4 = a2_3 * a2;
    const I a3_2 = a3 * a3, a3_3 = a3_2 * a3, a3_4 = a3_3 * a3;
    const I a4_2 = a4 * a4, a4_3 = a4_2 * a4;
    const I a5_2 = a5 * a5;
    return 108 * a2_4 * a2 * a5_2 - 72 * a2_4 * a3 * a4 * a5 + 16 * a2_4 * a4_3 + 16 * a2_3 * a3_3 * a5 -
           4 * a2_3 * a3_2 * a4_2 - 900 * a2_3 * a4 * a5_2 + 825 * a2_2 * a3_2 * a5_2 +
           560 * a2_2 * a3 * a4_2 * a5 - 128 * a2_2 * a4_3 * a4 - 630 * a2 * a3_3 * a4 * a5 +
           144 * a2 * a3_2 * a4_3 - 3750 * a2 * a3 * a5_2 * a5 + 2000 * a2 * a4_2 * a5_2 + 108 * a3_4 * a3 * a5 -
           27 * a3_4 * a4_2 + 2250 * a3_2 * a4 * a5_2 - 1600 * a3 * a4_3 * a5 + 256 * a4_3 * a4_2 +
           3125 * a5_2 * a5_2;
}

double naive_height_H(const Int& a2, const Int& a3, const Int& a4, const Int& a5) {
    double best = 0.0;
    const Int* a[4] = {&a2, &a3, &a4, &a5};
    for (int i = 0; i < 4; ++i) {
        if (*a[i] == 0) continue;
        best = std::max(best, std::exp(log_abs(*a[i]) / (i + 2)));
    }
    return best;
}

QuinticCurve make_curve(const Int& a2, const Int& a3, const Int& a4, const Int& a5) {
    QuinticCurve c;
    c.a2 = a2;
    c.a3 = a3;
    c.a4 = a4;
    c.a5 = a5;
    c.disc = discriminant(a2, a3, a4, a5);
    if (c.disc == 0) throw SingularCurve("curve " + c.key() + " is singular");
    c.delta = c.disc * 256;
    c.H = naive_height_H(a2, a3, a4, a5);
    return c;
}

QuinticCurve make_curve(long a2, long a3, long a4, long a5) { return make_curve(Int(a2), Int(a3), Int(a4), Int(a5)); }

std::array<int64_t, 4> family_bounds(double T) {
    std::array<int64_t, 4> b{};
    if (T < 1.0) return {-1, -1, -1, -1};
    Real t = Real::with_prec(T, 128);
    Real p = t;
    for (int i = 0; i < 4; ++i) {
        p = p * t;
        b[i] = floor(p).round_to_z().get_si();
    }
    return b;
}

namespace {

QuinticCurve curve_with_disc(int64_t a2, int64_t a3, int64_t a4, int64_t a5, __int128 d) {
    QuinticCurve c;
    c.a2 = Int(static_cast<long>(a2));
    c.a3 = Int(static_cast<long>(a3));
    c.a4 = Int(static_cast<long>(a4));
    c.a5 = Int(static_cast<long>(a5));
    bool neg = d < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-d) : static_cast<unsigned __int128>(d);
    Int hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0ULL));
    c.disc = (hi << 64) + lo;
    if (neg) c.disc = -c.disc;
    c.delta = c.disc * 256;
    c.H = naive_height_H(c.a2, c.a3, c.a4, c.a5);
    return c;
}

}  // namespace

void enumerate_family(double T, const CurveSink& sink, const CoeffPredicate& pred) {
    auto b = family_bounds(T);
    if (b[0] < 0) return;
    const int64_t n3 = 2 * b[1] + 1, n4 = 2 * b[2] + 1, n5 = 2 * b[3] + 1;
    std::vector<unsigned char> ok(static_cast<size_t>(n3 * n4 * n5));
    for (int64_t a2 = -b[0]; a2 <= b[0]; ++a2) {
#pragma omp parallel for schedule(dynamic)
        for (int64_t i3 = 0; i3 < n3; ++i3) {
            const int64_t a3 = i3 - b[1];
            for (int64_t i4 = 0; i4 < n4; ++i4) {
                const int64_t a4 = i4 - b[2];
                for (int64_t i5 = 0; i5 < n5; ++i5) {
                    const int64_t a5 = i5 - b[3];
                    ok[static_cast<size_t>((i3 * n4 + i4) * n5 + i5)] =
                        discriminant_i128(a2, a3, a4, a5) != 0 ? 1 : 0;
                }
            }
        }
        for (int64_t i3 = 0; i3 < n3; ++i3)
            for (int64_t i4 = 0; i4 < n4; ++i4)
                for (int64_t i5 = 0; i5 < n5; ++i5) {
                    if (!ok[static_cast<size_t>((i3 * n4 + i4) * n5 + i5)]) continue;
                    const int64_t a3 = i3 - b[1], a4 = i4 - b[2], a5 = i5 - b[3];
                    if (pred && !pred(a2, a3, a4, a5)) continue;
                    sink(curve_with_disc(a2, a3, a4, a5, discriminant_i128(a2, a3, a4, a5)));
                }
    }
}

FamilyCount count_family_reference(double T) {
    FamilyCount fc;
    auto b = family_bounds(T);
    if (b[0] < 0) return fc;
    for (int64_t a2 = -b[0]; a2 <= b[0]; ++a2)
        for (int64_t a3 = -b[1]; a3 <= b[1]; ++a3)
            for (int64_t a4 = -b[2]; a4 <= b[2]; ++a4)
                for (int64_t a5 = -b[3]; a5 <= b[3]; ++a5) {
                    ++fc.box;
                    if (discriminant_i128(a2, a3, a4, a5) != 0) ++fc.nonsingular;
                }
    return fc;
}

FamilyCount count_family_parallel(double T) {
    FamilyCount fc;
    auto b = family_bounds(T);
    if (b[0] < 0) return fc;
    uint64_t ns = 0;
    const int64_t n2 = 2 * b[0] + 1, n3 = 2 * b[1] + 1;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(+ : ns)
    for (int64_t i2 = 0; i2 < n2; ++i2)
        for (int64_t i3 = 0; i3 < n3; ++i3) {
            const int64_t a2 = i2 - b[0], a3 = i3 - b[1];
            uint64_t local = 0;
            for (int64_t a4 = -b[2]; a4 <= b[2]; ++a4)
                for (int64_t a5 = -b[3]; a5 <= b[3]; ++a5)
                    if (discriminant_i128(a2, a3, a4, a5) != 0) ++local;
            ns += local;
        }
    fc.box = static_cast<uint64_t>(n2) * static_cast<uint64_t>(n3) * static_cast<uint64_t>(2 * b[2] + 1) *
             static_cast<uint64_t>(2 * b[3] + 1);
    fc.nonsingular = ns;
    return fc;
}

uint64_t count_singular_by_factorization(double T) {
    auto b = family_bounds(T);
    if (b[0] < 0) return 0;
    const int64_t B2 = b[0], B3 = b[1], B4 = b[2], B5 = b[3];
    const uint64_t n3 = 2 * B3 + 1, n4 = 2 * B4 + 1, n5 = 2 * B5 + 1;
    std::unordered_set<uint64_t> seen;
    auto add = [&](int64_t a2, int64_t a3, int64_t a4, int64_t a5) {
        if (std::llabs(a2) > B2 || std::llabs(a3) > B3 || std::llabs(a4) > B4 || std::llabs(a5) > B5) return;
        uint64_t k = ((static_cast<uint64_t>(a2 + B2) * n3 + static_cast<uint64_t>(a3 + B3)) * n4 +
                      static_cast<uint64_t>(a4 + B4)) *
                         n5 +
                     static_cast<uint64_t>(a5 + B5);
        seen.insert(k);
    };
    // Roots are bounded by 2 max|a_i|^(1/i) <= 2T.
    const int64_t R = static_cast<int64_t>(std::ceil(2.0 * T)) + 1;
    // f = (x - r)^2 (x^3 + 2r x^2 + b2 x + b3)
    for (int64_t r = -R; r <= R; ++r) {
        const int64_t r2 = r * r;
        for (int64_t b2 = 3 * r2 - B2; b2 <= 3 * r2 + B2; ++b2) {
            const int64_t lim = r == 0 ? B3 : B5 / r2;
            for (int64_t b3 = -lim; b3 <= lim; ++b3)
                add(b2 - 3 * r2, b3 - 2 * r * b2 + 2 * r2 * r, -2 * r * b3 + r2 * b2, r2 * b3);
        }
    }
    // f = (x^2 + p x + q)^2 (x - 2p)
    const int64_t P = 2 * R, Q = R * R;
    for (int64_t p = -P; p <= P; ++p)
        for (int64_t q = -Q; q <= Q; ++q)
            add(2 * q - 3 * p * p, -2 * p * p * p - 2 * p * q, q * q - 4 * p * p * q, -2 * p * q * q);
    return seen.size();
}

std::vector<Complex> complex_roots(const QuinticCurve& c, mpfr_prec_t prec, const ComplexRootOptions& opt) {
    const mpfr_prec_t wp = prec + 32;
    PrecisionScope scope(wp);
    const Real radius = Real::with_prec(std::max(1.0, 2.0 * c.H), wp);
    std::vector<Complex> z(5);
    const Real two_pi = Real::pi(wp) * 2;
    for (int k = 0; k < 5; ++k) {
        Real ang = two_pi * Real::with_prec(k + 0.4, wp) / 5;
        z[k] = Complex::polar(radius * Real::with_prec(0.9 + 0.02 * k, wp), ang);
    }
    const Real tol = ldexp(Real::with_prec(1.0, wp), -static_cast<long>(prec) - 8);
    bool converged = false;
    for (int it = 0; it < opt.max_iterations && !converged; ++it) {
        converged = true;
        for (int k = 0; k < 5; ++k) {
            Complex fz = c.eval(z[k]);
            Complex dfz = c.eval_derivative(z[k]);
            if (abs(dfz).is_zero()) {
                z[k] += Complex::with_prec(1e-3, 1e-3, wp);
                converged = false;
                continue;
            }
            Complex ratio = fz / dfz;
            Complex s(Real::with_prec(0.0, wp), Real::with_prec(0.0, wp));
            for (int j = 0; j < 5; ++j)
                if (j != k) s += Complex(Real::with_prec(1.0, wp)) / (z[k] - z[j]);
            Complex w = ratio / (Complex(Real::with_prec(1.0, wp)) - ratio * s);
            z[k] -= w;
            if (abs(w) > tol * max(Real::with_prec(1.0, wp), abs(z[k]))) converged = false;
        }
    }
    if (!converged) throw NonConvergence("root finder did not converge for " + c.key());
    const Real cert = ldexp(Real::with_prec(1.0, wp), -static_cast<long>(prec) / 2);
    for (auto& r : z) {
        Real m = max(Real::with_prec(1.0, wp), abs(r));
        Real m5 = m * m * m * m * m;
        if (abs(c.eval(r)) > cert * m5) throw NonConvergence("root residual too large for " + c.key());
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (abs(z[i] - z[j]) < cert) throw NonConvergence("coincident roots for " + c.key());
    std::vector<Complex> out;
    for (auto& r : z) out.push_back(r.rounded(prec));
    const Real snap = ldexp(Real::with_prec(1.0, prec), -static_cast<long>(prec) / 2);
    for (auto& r : out)
        if (abs(r.im()) < snap * max(Real::with_prec(1.0, prec), abs(r.re()))) r.im() = Real(prec, 0);
    std::sort(out.begin(), out.end(), [&](const Complex& a, const Complex& b) {
        Real d = a.re() - b.re();
        if (abs(d) > snap * max(Real::with_prec(1.0, prec), abs(a.re()))) return a.re() < b.re();
        return a.im() < b.im();
    });
    return out;
}

RootPair alpha_beta_star(const QuinticCurve& c, mpfr_prec_t prec) {
    const auto& r = c.roots(prec);
    auto lex_less = [](const Complex& a, const Complex& b) {
        if (a.re() != b.re()) return a.re() < b.re();
        return a.im() < b.im();
    };
    const double rel = std::ldexp(1.0, -40);
    RootPair best;
    std::array<double, 3> best_key{-1.0, -1.0, -1.0};
    bool have = false;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            int a = i, b = j;
            if (lex_less(r[b], r[a])) std::swap(a, b);
            std::array<double, 3> q = {abs(r[a]).to_double(), abs(r[b]).to_double(), abs(r[a] - r[b]).to_double()};
            std::sort(q.begin(), q.end());
            // Leximin on the three distances: maximize the smallest, then the next ones.
            int cmp = 0;
            for (int t = 0; t < 3 && cmp == 0; ++t) {
                double scale = std::max(1.0, std::max(q[t], best_key[t]));
                if (q[t] > best_key[t] + rel * scale) cmp = 1;
                else if (q[t] < best_key[t] - rel * scale) cmp = -1;
            }
            bool take = !have || cmp > 0;
            if (have && cmp == 0) {
                const Complex& oa = r[best.ia];
                const Complex& ob = r[best.ib];
                if (lex_less(r[a], oa) || (!lex_less(oa, r[a]) && lex_less(r[b], ob))) take = true;
            }
            if (take) {
                have = true;
                best_key = q;
                best.ia = a;
                best.ib = b;
                best.alpha = r[a];
                best.beta = r[b];
                best.min_quantity = q[0];
            }
        }
    return best;
}

}  // namespace g2
