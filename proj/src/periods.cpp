#include "g2/analytic.hpp"

#include "g2/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>

namespace g2 {

SiegelResult reduce_periods(CMat2& big, CMat2& small, const SiegelOptions& opt);

namespace {

using Pair = std::array<Complex, 2>;

struct GaussRule {
    std::vector<Real> x;  // nodes on [0, 1]
    std::vector<Real> w;
};

const GaussRule& gauss_rule(int m, mpfr_prec_t prec) {
    static std::mutex mu;
    static std::map<std::pair<int, mpfr_prec_t>, std::unique_ptr<GaussRule>> cache;
    std::lock_guard lk(mu);
    auto& slot = cache[{m, prec}];
    if (slot) return *slot;
    PrecisionScope scope(prec + 16);
    auto rule = std::make_unique<GaussRule>();
    Real pi = Real::pi(prec + 16);
    Real tol = ldexp(Real(1), -static_cast<long>(prec) - 8);
    for (int i = 1; i <= m; ++i) {
        Real z = cos(pi * (Real(i) - Real(0.25)) / (Real(m) + Real(0.5)));
        Real dp;
        for (int it = 0; it < 100; ++it) {
            Real p0 = Real(1), p1 = z;
            for (int k = 2; k <= m; ++k) {
                Real p2 = (Real(2 * k - 1) * z * p1 - Real(k - 1) * p0) / Real(k);
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            dp = Real(m) * (z * p1 - p0) / (z * z - Real(1));
            Real step = p1 / dp;
            z = z - step;
            if (abs(step) < tol) break;
        }
        Real p0 = Real(1), p1 = z;
        for (int k = 2; k <= m; ++k) {
            Real p2 = (Real(2 * k - 1) * z * p1 - Real(k - 1) * p0) / Real(k);
            p0 = std::move(p1);
            p1 = std::move(p2);
        }
        dp = Real(m) * (z * p1 - p0) / (z * z - Real(1));
        Real w = Real(2) / ((Real(1) - z * z) * dp * dp);
        rule->x.push_back(((Real(1) - z) / Real(2)).rounded(prec));
        rule->w.push_back((w / Real(2)).rounded(prec));
    }
    slot = std::move(rule);
    return *slot;
}

using Integrand = std::function<Pair(const Real&)>;

Pair gl_panel(const Integrand& f, const Real& lo, const Real& hi, const GaussRule& g) {
    Real h = hi - lo;
    mpfr_prec_t p = h.prec();
    Pair acc{Complex(Real(p, 0), Real(p, 0)), Complex(Real(p, 0), Real(p, 0))};
    for (size_t i = 0; i < g.x.size(); ++i) {
        Pair v = f(lo + h * g.x[i]);
        Real wt = h * g.w[i];
        acc[0] += v[0] * wt;
        acc[1] += v[1] * wt;
    }
    return acc;
}

double pair_norm(const Pair& p) { return std::max(abs(p[0]).to_double(), abs(p[1]).to_double()); }

Pair adaptive(const Integrand& f, const Real& lo, const Real& hi, const Pair& whole, const GaussRule& g, double tol,
              int depth, int max_depth) {
    Real mid = (lo + hi) / 2L;
    Pair left = gl_panel(f, lo, mid, g);
    Pair right = gl_panel(f, mid, hi, g);
    Pair both{left[0] + right[0], left[1] + right[1]};
    Pair diff{both[0] - whole[0], both[1] - whole[1]};
    double err = pair_norm(diff);
    double width = (hi - lo).to_double();
    if (err <= tol * width) return both;
    if (depth >= max_depth) throw NonConvergence("adaptive quadrature depth exhausted");
    Pair a = adaptive(f, lo, mid, left, g, tol, depth + 1, max_depth);
    Pair b = adaptive(f, mid, hi, right, g, tol, depth + 1, max_depth);
    return {a[0] + b[0], a[1] + b[1]};
}

Pair integrate(const Integrand& f, mpfr_prec_t prec, const PeriodOptions& opt, double scale) {
    PrecisionScope scope(prec);
    const GaussRule& g = gauss_rule(opt.gauss_nodes, prec);
    double tol = std::ldexp(1.0, -static_cast<int>(0.6 * static_cast<double>(prec)) - 4) * std::max(1.0, scale);
    Real lo(prec, 0), hi = Real::with_prec(1.0, prec);
    // start from 4 panels so that the coarse estimate is meaningful
    Pair total{Complex(Real(prec, 0), Real(prec, 0)), Complex(Real(prec, 0), Real(prec, 0))};
    for (int k = 0; k < 4; ++k) {
        Real a = Real::with_prec(k / 4.0, prec), b = Real::with_prec((k + 1) / 4.0, prec);
        Pair whole = gl_panel(f, a, b, g);
        Pair part = adaptive(f, a, b, whole, g, tol, 0, opt.max_depth);
        total[0] += part[0];
        total[1] += part[1];
    }
    return total;
}

std::complex<double> cd(const Complex& z) { return {z.re().to_double(), z.im().to_double()}; }

// Distance from w to the real ray [1, inf).
double ray_distance(std::complex<double> w) {
    if (w.real() >= 1.0) return std::fabs(w.imag());
    return std::abs(w - 1.0);
}

// |u|^{5/2} e^{5 i theta / 2} with theta = -phi, phi = (-arg u) mod 2 pi.
Complex branch_constant(const Complex& u, const Real& phi) {
    Real r = abs(u);
    Real mod = r * r * sqrt(r);
    Real ang = -phi * Real::with_prec(2.5, u.prec());
    return Complex::polar(mod, ang);
}

Real phi_of(const Complex& u) {
    Real a = -arg(u);
    Real tp = Real::pi(u.prec()) * 2L;
    if (a.sign() < 0) a = a + tp;
    if (a >= tp) a = a - tp;
    return a;
}

}  // namespace

// Spoke from root k to infinity along the ray from the center through the root.
static Pair spoke_integral(const std::vector<Complex>& roots, int k, const Complex& c, mpfr_prec_t prec,
                           const PeriodOptions& opt) {
    Complex u = roots[static_cast<size_t>(k)] - c;
    std::vector<Complex> w;
    for (int i = 0; i < 5; ++i)
        if (i != k) w.push_back((roots[static_cast<size_t>(i)] - c) / u);
    Complex s5 = branch_constant(u, phi_of(u));
    Complex four_u = u * Real(4);
    Integrand f = [&](const Real& v) -> Pair {
        Real sigma = Real(1) - v * v;
        Real s2 = sigma * sigma;
        Complex den = s5 * sqrt(Real(1) + sigma);
        for (const auto& wi : w) den = den * sqrt(Complex(Real(1), Real(0)) - wi * s2);
        Complex base = four_u / den;
        return {base * s2, base * (c * s2 + u)};
    };
    double scale = 1.0 / std::pow(std::abs(cd(u)), 1.5);
    return integrate(f, prec, opt, scale);
}

RiemannData compute_periods(const QuinticCurve& c, mpfr_prec_t prec, const PeriodOptions& opt) {
    PrecisionScope scope(prec);
    RiemannData rd;
    rd.precision_bits = prec;
    std::vector<Complex> roots;
    for (const auto& r : c.roots(prec + 32)) roots.push_back(r.rounded(prec));

    std::vector<std::complex<double>> rz;
    double scale = 0.0;
    for (const auto& r : roots) {
        rz.push_back(cd(r));
        scale = std::max(scale, std::abs(rz.back()));
    }
    scale = std::max(scale, 1.0);
    double sep = 1e300;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) sep = std::min(sep, std::abs(rz[i] - rz[j]));
    if (sep < std::ldexp(scale, -static_cast<int>(prec) / 4)) throw PathDegeneracy("branch points too close");

    // center maximizing the clearance of every spoke from the other roots
    std::complex<double> best_c;
    double best = -1.0;
    const int G = 41;
    for (int gi = 0; gi < G; ++gi)
        for (int gj = 0; gj < G; ++gj) {
            std::complex<double> cc(scale * (-1.5 + 3.0 * (gi + 0.37) / G), scale * (-1.5 + 3.0 * (gj + 0.21) / G));
            double m = 1e300;
            for (int k = 0; k < 5 && m > best; ++k) {
                std::complex<double> u = rz[k] - cc;
                if (std::abs(u) < 0.05 * scale) {
                    m = -1.0;
                    break;
                }
                for (int i = 0; i < 5; ++i)
                    if (i != k) m = std::min(m, ray_distance((rz[i] - cc) / u));
            }
            if (m > best) {
                best = m;
                best_c = cc;
            }
        }
    if (best < 1e-6) throw PathDegeneracy("no clear star of spokes");
    rd.center = Complex::with_prec(best_c.real(), best_c.imag(), prec);

    std::vector<Pair> sp(5);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < 5; ++k) {
        PrecisionScope inner(prec);
        sp[static_cast<size_t>(k)] = spoke_integral(roots, k, rd.center, prec, opt);
    }
    for (int k = 0; k < 5; ++k) rd.spokes[static_cast<size_t>(k)] = sp[static_cast<size_t>(k)];

    // order the root cycles by phi; consecutive ones meet with intersection +1 at infinity
    std::vector<int> order(5);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> phis;
    for (int k = 0; k < 5; ++k) phis.push_back(phi_of(roots[static_cast<size_t>(k)] - rd.center).to_double());
    std::sort(order.begin(), order.end(), [&](int x, int y) { return phis[x] < phis[y]; });

    // relation c1 - c2 + c3 - c4 + c5 = 0 in phi order
    double rel = 0.0, mag = 0.0;
    for (int r = 0; r < 2; ++r) {
        Complex acc(Real(prec, 0), Real(prec, 0));
        for (int j = 0; j < 5; ++j) {
            const Complex& v = sp[static_cast<size_t>(order[j])][static_cast<size_t>(r)];
            acc = (j % 2 == 0) ? acc + v : acc - v;
            mag = std::max(mag, abs(v).to_double());
        }
        rel = std::max(rel, abs(acc).to_double());
    }
    rd.relation_defect = rel / mag;
    if (rd.relation_defect > 1e-8) throw InvariantViolation("root cycles violate the alternating relation");

    // symplectic basis from c1..c4 with J_jk = +1 for j < k
    using V = std::array<long, 4>;
    auto omega = [](const V& x, const V& y) {
        long s = 0;
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                if (j != k) s += x[j] * y[k] * (j < k ? 1 : -1);
        return s;
    };
    V A1{1, 0, 0, 0}, B1{0, 1, 0, 0}, A2{0, 0, 1, 0}, B2{0, 0, 0, 1};
    auto ortho = [&](V x) {
        long xb = omega(x, B1), xa = omega(x, A1);
        for (int i = 0; i < 4; ++i) x[i] = x[i] - xb * A1[i] + xa * B1[i];
        return x;
    };
    A2 = ortho(A2);
    B2 = ortho(B2);
    long o = omega(A2, B2);
    if (o == -1)
        for (auto& x : B2) x = -x;
    else if (o != 1)
        throw InvariantViolation("cycle basis is not unimodular");

    std::array<V, 4> cyc{A1, A2, B1, B2};
    auto period = [&](const V& x, int r) {
        Complex acc(Real(prec, 0), Real(prec, 0));
        for (int j = 0; j < 4; ++j)
            if (x[j] != 0) acc += sp[static_cast<size_t>(order[j])][static_cast<size_t>(r)] * Real(2 * x[j]);
        return acc;
    };
    CMat2 big, small;
    for (int r = 0; r < 2; ++r)
        for (int j = 0; j < 2; ++j) {
            big(r, j) = period(cyc[static_cast<size_t>(j)], r);
            small(r, j) = period(cyc[static_cast<size_t>(j + 2)], r);
        }
    CMat2 tau = big.inverse() * small;
    if (tau(0, 0).im().sign() < 0) {
        for (auto& x : cyc[2]) x = -x;
        for (auto& x : cyc[3]) x = -x;
        for (int r = 0; r < 2; ++r)
            for (int j = 0; j < 2; ++j) small(r, j) = -small(r, j);
        tau = big.inverse() * small;
    }
    rd.symmetry_defect = abs(tau(0, 1) - tau(1, 0)).to_double();
    double sym_tol = std::ldexp(1.0, -static_cast<int>(prec) / 2);
    if (rd.symmetry_defect > sym_tol) throw InvariantViolation("period matrix is not symmetric");
    double y1 = tau(0, 0).im().to_double(), y2 = tau(1, 1).im().to_double(), y12 = tau(0, 1).im().to_double();
    if (!(y1 > 0 && y1 * y2 - y12 * y12 > 0)) throw InvariantViolation("Im tau is not positive definite");

    SiegelResult red = reduce_periods(big, small, opt.siegel);
    rd.big_period = big;
    rd.small_period = small;
    rd.tau = red.tau;
    rd.reduction = red.transform;
    for (int i = 0; i < 4; ++i) {
        std::array<long, 5> row{};
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) row[static_cast<size_t>(order[k])] += red.transform[i][j] * cyc[j][k];
        rd.basis[static_cast<size_t>(i)] = row;
    }

    // half-periods of the roots: AJ(rho_k) = -spoke_k
    CMat2 bi = big.inverse();
    for (int k = 0; k < 5; ++k) {
        CVec2 v;
        v[0] = -sp[static_cast<size_t>(k)][0];
        v[1] = -sp[static_cast<size_t>(k)][1];
        CVec2 Z = bi * v;
        auto [a, b] = lattice_coordinates(Z, rd.tau);
        ThetaChar hc;
        for (int i = 0; i < 2; ++i) {
            Real a2 = a[static_cast<size_t>(i)] * 2L, b2 = b[static_cast<size_t>(i)] * 2L;
            Real ar = round(a2), br = round(b2);
            double da = abs(a2 - ar).to_double(), db = abs(b2 - br).to_double();
            if (da > opt.match_tolerance || db > opt.match_tolerance)
                throw AmbiguousMatch("root image is not a half-period");
            hc.a[static_cast<size_t>(i)] = static_cast<int>(ar.round_to_z().get_si());
            hc.b[static_cast<size_t>(i)] = static_cast<int>(br.round_to_z().get_si());
        }
        rd.root_half_periods[static_cast<size_t>(k)] = hc.reduced();
    }

    ThetaChar chi_inf = find_chi_infinity(rd, c);
    rd.char_table[5] = chi_inf;
    std::vector<ThetaChar> seen{chi_inf};
    for (int k = 0; k < 5; ++k) {
        ThetaChar ch = (rd.root_half_periods[static_cast<size_t>(k)] + chi_inf).reduced();
        if (!ch.is_odd()) throw InvariantViolation("root characteristic " + ch.str() + " is even");
        if (std::find(seen.begin(), seen.end(), ch) != seen.end())
            throw InvariantViolation("root characteristics are not distinct");
        seen.push_back(ch);
        rd.char_table[static_cast<size_t>(k)] = ch;
    }
    return rd;
}

CVec2 abel_jacobi(const RiemannData& rd, const QuinticCurve& c, const Complex& x0, const Complex& y0,
                  const PeriodOptions& opt) {
    mpfr_prec_t prec = rd.precision_bits;
    PrecisionScope scope(prec);
    std::vector<Complex> roots;
    for (const auto& r : c.roots(prec + 32)) roots.push_back(r.rounded(prec));
    std::complex<double> xd = cd(x0);
    double scale = 1.0;
    for (const auto& r : roots) scale = std::max(scale, std::abs(cd(r)));
    scale = std::max(scale, std::abs(xd));
    for (const auto& r : roots)
        if (std::abs(cd(r) - xd) < std::ldexp(scale, -static_cast<int>(prec) / 4))
            throw PathDegeneracy("Abel-Jacobi endpoint sits on a branch point");

    // approach direction with the best clearance
    double best = -1.0;
    std::complex<double> best_u;
    for (int j = 0; j < 48; ++j) {
        std::complex<double> u = std::polar(scale, 2 * M_PI * (j + 0.3) / 48);
        std::complex<double> cc = xd - u;
        double m = 1e300;
        for (const auto& r : roots) m = std::min(m, ray_distance((cd(r) - cc) / u));
        if (m > best) {
            best = m;
            best_u = u;
        }
    }
    Complex u = Complex::with_prec(best_u.real(), best_u.imag(), prec);
    Complex cc = x0 - u;
    std::vector<Complex> w;
    for (const auto& r : roots) w.push_back((r - cc) / u);
    Complex s5 = branch_constant(u, phi_of(u));
    Complex m2u = -(u * Real(2));
    Integrand f = [&](const Real& sigma) -> Pair {
        Real s2 = sigma * sigma;
        Complex den = s5;
        for (const auto& wi : w) den = den * sqrt(Complex(Real(1), Real(0)) - wi * s2);
        Complex base = m2u / den;
        return {base * s2, base * (cc * s2 + u)};
    };
    Pair v = integrate(f, prec, opt, 1.0 / std::pow(scale, 1.5));
    Complex yend = s5;
    for (const auto& wi : w) yend = yend * sqrt(Complex(Real(1), Real(0)) - wi);
    bool flip = abs(yend - y0) > abs(yend + y0);
    CVec2 raw;
    raw[0] = flip ? -v[0] : v[0];
    raw[1] = flip ? -v[1] : v[1];
    return rd.big_period.inverse() * raw;
}

std::shared_ptr<const RiemannData> RiemannCache::get(const QuinticCurve& c, mpfr_prec_t prec) {
    std::string key = c.key() + "@" + std::to_string(prec);
    std::shared_future<std::shared_ptr<const RiemannData>> fut;
    std::promise<std::shared_ptr<const RiemannData>> prom;
    bool owner = false;
    {
        std::lock_guard lk(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) {
            fut = prom.get_future().share();
            map_.emplace(key, fut);
            owner = true;
        } else {
            fut = it->second;
        }
    }
    if (owner) {
        try {
            prom.set_value(std::make_shared<const RiemannData>(compute_periods(c, prec)));
        } catch (...) {
            prom.set_exception(std::current_exception());
        }
    }
    return fut.get();
}

}  // namespace g2
