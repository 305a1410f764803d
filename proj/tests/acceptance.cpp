#include "g2/analytic.hpp"
#include "g2/constants.hpp"
#include "g2/errors.hpp"
#include "g2/gap.hpp"
#include "g2/heights.hpp"
#include "g2/kummer.hpp"
#include "g2/packing.hpp"
#include "g2/points.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace g2;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Corpus {
    QuinticCurve curve;
    std::vector<CurvePoint> points;  // affine points only
};

template <class... A>
std::string fmt(const char* f, A... a) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, a...);
    return buf;
}

long uniform(std::mt19937_64& rng, int64_t B) {
    return static_cast<long>(rng() % static_cast<uint64_t>(2 * B + 1)) - B;
}

std::vector<QuinticCurve> random_curves(int n, uint64_t seed, double T) {
    std::mt19937_64 rng(seed);
    auto b = family_bounds(T);
    std::vector<QuinticCurve> out;
    while (static_cast<int>(out.size()) < n) {
        try {
            out.push_back(make_curve(uniform(rng, b[0]), uniform(rng, b[1]), uniform(rng, b[2]), uniform(rng, b[3])));
        } catch (const SingularCurve&) {
        }
    }
    return out;
}

// Curves in the T family with an integral root, so that rational two-torsion occurs.
std::vector<QuinticCurve> curves_with_root(int n, uint64_t seed, double T) {
    std::mt19937_64 rng(seed);
    auto b = family_bounds(T);
    std::vector<QuinticCurve> out;
    while (static_cast<int>(out.size()) < n) {
        long r = uniform(rng, 3), a2 = uniform(rng, b[0]), a3 = uniform(rng, b[1]), a4 = uniform(rng, b[2]);
        long a5 = -(r * r * r * r * r + a2 * r * r * r + a3 * r * r + a4 * r);
        if (std::labs(a5) > b[3]) continue;
        try {
            out.push_back(make_curve(a2, a3, a4, a5));
        } catch (const SingularCurve&) {
        }
    }
    return out;
}

std::vector<CurvePoint> affine(std::vector<CurvePoint> pts) {
    pts.erase(std::remove_if(pts.begin(), pts.end(), [](const CurvePoint& p) { return p.infinity; }), pts.end());
    return pts;
}

// Search corpus: twenty T <= 3 curves in the box e <= 6, |s| <= 200.
const std::vector<QuinticCurve>& search_curves() {
    static const auto c = random_curves(20, 1001, 3.0);
    return c;
}

// Height corpus: T <= 4 curves searched with e <= 8, at most four points each, drawn until 30 pairs are present.
const std::vector<Corpus>& height_corpus() {
    static const auto corpus = [] {
        std::vector<Corpus> out;
        size_t pairs = 0;
        auto take = [&](const QuinticCurve& c) {
            std::vector<CurvePoint> keep;
            for (const auto& p : affine(search_points(c, 8, 300)))
                if (p.t >= 0 && keep.size() < 4) keep.push_back(p);
            pairs += keep.size();
            if (!keep.empty()) out.push_back({c, keep});
        };
        for (const auto& c : curves_with_root(8, 2003, 4.0)) take(c);
        std::mt19937_64 rng(2002);
        auto b = family_bounds(4.0);
        while (pairs < 30) {
            try {
                take(make_curve(uniform(rng, b[0]), uniform(rng, b[1]), uniform(rng, b[2]), uniform(rng, b[3])));
            } catch (const SingularCurve&) {
            }
        }
        return out;
    }();
    return corpus;
}

HeightOptions heights_256() {
    HeightOptions ho;
    ho.prec = 256;
    ho.target_error = 1e-8;
    return ho;
}

Outcome criterion_kl() {
    double a = kl_exponent(64.0 / 95.0).exponent_base, b = kl_exponent(0.75).exponent_base;
    return {std::fabs(a - 1.645) <= 0.001 && std::fabs(b - 1.888) <= 0.001,
            fmt("KL(64/95) = %.6f, KL(3/4) = %.6f", a, b)};
}

Outcome criterion_optimize() {
    auto r = optimize_genus2();
    auto inf = optimize_general_genus(std::nullopt);
    bool ok = std::fabs(r.alpha_star - 0.7406) <= 0.0005 && std::fabs(r.base_S - 1.85149) <= 0.0005 &&
              std::fabs(r.base_cluster - 1.01077) <= 0.0005 && r.product <= 1.872 &&
              std::fabs(inf.product - 1.311) <= 0.002 && std::fabs(inf.alpha_star - 0.4818) <= 0.0005;
    return {ok, fmt("alpha* = %.6f, S = %.6f, cluster = %.6f, product = %.6f; g = inf: %.6f at alpha = %.6f",
                    r.alpha_star, r.base_S, r.base_cluster, r.product, inf.product, inf.alpha_star)};
}

Outcome criterion_exact() {
    Outcome o;
    std::mt19937_64 rng(3003);
    std::uniform_int_distribution<long> d(-50, 50), cd(2, 5);
    int homog_fail = 0;
    for (int i = 0; i < 100; ++i) {
        std::array<Int, 4> a{d(rng), d(rng), d(rng), d(rng)};
        Quad k{d(rng), d(rng), d(rng), d(rng)};
        Int w = cd(rng), lam = d(rng);
        std::array<Int, 4> aw{a[0] * ipow(w, 2), a[1] * ipow(w, 3), a[2] * ipow(w, 4), a[3] * ipow(w, 5)};
        Quad kw{k[0] * w, k[1] * ipow(w, 2), k[2] * ipow(w, 3), k[3] * ipow(w, 4)};
        Quad kl{k[0] * lam, k[1] * lam, k[2] * lam, k[3] * lam};
        auto base = delta_raw(a, k, delta_terms()), graded = delta_raw(aw, kw, delta_terms());
        auto scaled = delta_raw(a, kl, delta_terms());
        for (unsigned j = 0; j < 4; ++j)
            if (graded[j] != base[j] * ipow(w, 13 + j) || scaled[j] != base[j] * ipow(lam, 4)) ++homog_fail;
    }

    // Every integral root alpha of a nonsingular T <= 3 quintic: |alpha| < R where R^5 exceeds the tail.
    auto b = family_bounds(3.0);
    long R = 1;
    while (R * R * R * R * R <= b[0] * R * R * R + b[1] * R * R + b[2] * R + b[3]) ++R;
    long tors = 0, tors_fail = 0;
    for (long r = -(R - 1); r <= R - 1; ++r)
        for (long a2 = -b[0]; a2 <= b[0]; ++a2)
            for (long a3 = -b[1]; a3 <= b[1]; ++a3)
                for (long a4 = -b[2]; a4 <= b[2]; ++a4) {
                    long a5 = -(r * r * r * r * r + a2 * r * r * r + a3 * r * r + a4 * r);
                    if (std::labs(a5) > b[3] || discriminant_i128(a2, a3, a4, a5) == 0) continue;
                    std::array<Int, 4> co{a2, a3, a4, a5};
                    Int fp = 5 * r * r * r * r + 3 * a2 * r * r + 2 * a3 * r + a4;
                    Quad kap{0, 1, r, r * r};
                    if (delta_raw(co, kap, delta_terms()) != Quad{0, 0, 0, fp * fp}) ++tors_fail;
                    ++tors;
                }

    long pts = 0, hk_fail = 0;
    auto check_hk = [&](const QuinticCurve& c, const std::vector<CurvePoint>& ps) {
        for (const auto& p : ps) {
            if (!is_on_curve(c, p)) ++hk_fail;
            Int m = 0;
            for (const auto& x : kappa(p).k) m = std::max(m, Int(abs(x)));
            if (m != p.H() * p.H()) ++hk_fail;
            ++pts;
        }
    };
    for (const auto& c : search_curves()) check_hk(c, affine(search_points(c, 6, 200)));
    for (const auto& e : height_corpus()) check_hk(e.curve, e.points);

    o.pass = homog_fail == 0 && tors_fail == 0 && hk_fail == 0 && tors > 0 && pts > 0;
    o.detail = fmt("bidegree failures %d/400; %ld two-torsion points (|alpha| < %ld), %ld failures; "
                   "h_K = 2h on %ld points, %ld failures",
                   homog_fail, tors, R, tors_fail, pts, hk_fail);
    return o;
}

Outcome criterion_heights() {
    auto ho = heights_256();
    int pairs = 0, dbl_fail = 0, par = 0, par_fail = 0, tors = 0, tors_fail = 0, stoll_fail = 0, mu_checked = 0;
    double worst_dbl = 0, worst_par = 0;
    for (const auto& e : height_corpus()) {
        const auto& c = e.curve;
        std::vector<CanonicalHeightResult> hs;
        for (const auto& p : e.points) {
            auto h = canonical_height(c, p, ho);
            hs.push_back(h);
            ++pairs;
            for (const auto& [q, mu] : h.prime_corrections) {
                ++mu_checked;
                if (std::fabs(mu) > stoll_bound(c, q) + 1e-12) ++stoll_fail;
                if (valuation(c.delta, q) <= 1 && mu != 0.0) ++stoll_fail;
            }
            if (p.t == 0) {
                ++tors;
                if (std::fabs(h.value) > 1e-6) ++tors_fail;
                continue;
            }
            auto h2 = canonical_height(c, double_coords(c, kappa(p)), ho);
            double g = std::fabs(h2.value - 4 * h.value);
            worst_dbl = std::max(worst_dbl, g);
            if (g > h2.error_radius + 4 * h.error_radius) ++dbl_fail;
        }
        for (size_t i = 0; i < e.points.size(); ++i)
            for (size_t j = i + 1; j < e.points.size(); ++j) {
                const auto &P = e.points[i], &Q = e.points[j];
                if (P.s * Q.e * Q.e == Q.s * P.e * P.e) continue;
                auto [ks, kd] = sum_and_diff_coords(c, P, Q);
                auto a = canonical_height(c, ks, ho), b = canonical_height(c, kd, ho);
                double g = std::fabs(a.value + b.value - 2 * hs[i].value - 2 * hs[j].value);
                double rad = a.error_radius + b.error_radius + 2 * hs[i].error_radius + 2 * hs[j].error_radius;
                worst_par = std::max(worst_par, g);
                if (g > rad) ++par_fail;
                ++par;
            }
    }
    bool ok = pairs >= 25 && tors > 0 && par > 0 && dbl_fail == 0 && par_fail == 0 && tors_fail == 0 &&
              stoll_fail == 0;
    return {ok, fmt("%d (curve, point) pairs; doubling failures %d (worst %.2e); parallelogram %d/%d fail (worst "
                    "%.2e); two-torsion %d, failures %d; mu_p checks %d, failures %d",
                    pairs, dbl_fail, worst_dbl, par_fail, par, worst_par, tors, tors_fail, mu_checked, stoll_fail)};
}

Outcome criterion_analytic() {
    const mpfr_prec_t prec = 256;
    auto ho = heights_256();
    int pairs = 0, agree_fail = 0, on_div = 0, curves = 0, thomae_fail = 0, parity_fail = 0, odd_fail = 0;
    double worst = 0, spread = 0, worst_parity = 0, worst_odd = 0;
    const double tol = std::ldexp(1.0, -static_cast<int>(prec) + 40);
    std::mt19937_64 rng(5005);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    for (const auto& e : height_corpus()) {
        if (pairs >= 12 && curves >= 4) break;
        const auto& c = e.curve;
        auto rd = compute_periods(c, prec);
        PrecisionScope ps(prec);
        ++curves;
        for (const auto& p : e.points) {
            try {
                auto L = lift_point(rd, c, p);
                auto h = canonical_height(c, kappa(p), ho);
                double d = std::fabs(lambda_inf_theta(rd, c, L.K, L.Z) - (h.naive + h.archimedean_correction));
                worst = std::max(worst, d);
                if (d >= 1e-4) ++agree_fail;
                ++pairs;
            } catch (const OnDivisor&) {
                ++on_div;
            }
        }
        for (int b = 0; b < 5; ++b) {
            std::vector<double> v;
            for (int a = 0; a < 5; ++a)
                if (a != b) v.push_back(c_rho(rd, c, b, a));
            for (double x : v) {
                spread = std::max(spread, std::fabs(x - v[0]));
                if (!(std::fabs(x - v[0]) < 1e-6)) ++thomae_fail;
            }
        }
        CVec2 Z, mZ, zero;
        for (int i = 0; i < 2; ++i) {
            Z[i] = Complex::with_prec(u(rng), u(rng), prec);
            mZ[i] = -Z[i];
            zero[i] = Complex::with_prec(0.0, 0.0, prec);
        }
        for (const auto& ch : all_characteristics()) {
            Complex t = theta(ch, Z, rd.tau, prec), tm = theta(ch, mZ, rd.tau, prec);
            double dev = abs(tm - (ch.is_odd() ? -t : t)).to_double() / std::max(1.0, abs(t).to_double());
            worst_parity = std::max(worst_parity, dev);
            if (dev > tol) ++parity_fail;
            if (ch.is_odd()) {
                double z = abs(theta(ch, zero, rd.tau, prec)).to_double();
                worst_odd = std::max(worst_odd, z);
                if (z > tol) ++odd_fail;
            }
        }
    }
    size_t even = even_characteristics().size();
    bool ok = pairs >= 10 && agree_fail == 0 && thomae_fail == 0 && parity_fail == 0 && odd_fail == 0 && even == 10;
    return {ok, fmt("%d pairs on %d curves (%d on a divisor), worst |theta - telescoping| %.2e; Thomae spread %.2e; "
                    "parity defect %.2e, odd theta(0) %.2e (tolerance %.1e); %zu even characteristics",
                    pairs, curves, on_div, worst, spread, worst_parity, worst_odd, tol, even)};
}

Outcome criterion_igusa() {
    const auto& fc = frozen_constants();
    std::vector<double> ratios;
    int nondeg = 0, fit_n = 0, fit_fail = 0;
    double worst_excess = -1e300;
    for (const auto& c : random_curves(14, 6006, 4.0)) {
        auto rd = compute_periods(c, 128);
        double ex = im_tau1_excess(rd, c);
        worst_excess = std::max(worst_excess, ex);
        ++fit_n;
        if (ex > fc.c_fit) ++fit_fail;
        if (i4_degenerate(c, 128) || nondeg >= 12) continue;
        ratios.push_back((igusa_i3_roots(c, 128) / igusa_i3_thetas(rd)).re().to_double());
        ++nondeg;
    }
    auto corpus = load_corpus(std::string(G2_DATA_DIR) + "/calibration_corpus.json");
    for (const auto& a : corpus.curves) {
        auto c = make_curve(a[0], a[1], a[2], a[3]);
        double ex = im_tau1_excess(compute_periods(c, 128), c);
        worst_excess = std::max(worst_excess, ex);
        ++fit_n;
        if (ex > fc.c_fit) ++fit_fail;
    }
    double rel = 0;
    for (double r : ratios) rel = std::max(rel, std::fabs(r / ratios.front() - 1.0));
    bool ok = ratios.size() >= 10 && rel < 1e-4 && fit_fail == 0;
    return {ok, fmt("i3 ratio %.8f on %zu curves, max relative spread %.2e; Im tau_1 excess max %.4f vs C_fit %.4f "
                    "on %d curves (%d beyond)",
                    ratios.empty() ? 0.0 : ratios.front(), ratios.size(), rel, worst_excess, fc.c_fit, fit_n,
                    fit_fail)};
}

Outcome criterion_search() {
    int mismatch = 0;
    size_t total = 0;
    for (const auto& c : search_curves()) {
        auto a = search_points(c, 6, 200), b = search_points_reference(c, 6, 200);
        if (a != b) ++mismatch;
        total += a.size();
    }
    auto c = make_curve(0, 0, 0, 1);
    auto pts = search_points(c, 6, 200);
    std::vector<CurvePoint> expect{CurvePoint::at_infinity(), CurvePoint::affine(Int(-1), Int(1), Int(0)),
                                   CurvePoint::affine(Int(0), Int(1), Int(1)),
                                   CurvePoint::affine(Int(0), Int(1), Int(-1))};
    std::sort(expect.begin(), expect.end());
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    bool x5 = sorted == expect;
    return {mismatch == 0 && x5, fmt("%d/20 curves differ from brute force (%zu points); x^5 + 1 gives %zu points%s",
                                     mismatch, total, pts.size(), x5 ? " {inf, (-1,0), (0,+-1)}" : " (unexpected)")};
}

Outcome criterion_gap() {
    auto ho = heights_256();
    ho.prec = 128;
    int labeled_n = 0, partition_fail = 0, violations = 0, qualifying = 0;
    bool vacuous = true;
    for (const auto& e : height_corpus()) {
        const auto& c = e.curve;
        std::vector<CurvePoint> both;
        for (const auto& p : e.points) {
            both.push_back(p);
            if (p.t != 0) both.push_back(p.negated());
        }
        for (double delta : {0.25, 0.125, 0.3}) {
            auto t = gap_thresholds(c, delta);
            for (const auto& p : both)
                if (membership(c, p, t).count() != 1) ++partition_fail;
        }
        auto rd = compute_periods(c, 128);
        ClassifyOptions co;
        co.height = ho;
        std::vector<LabeledPoint> lp;
        for (const auto& p : both) {
            auto h = canonical_height(c, p, ho);
            lp.push_back({p, classify(c, p, co, &rd, &h), h});
            ++labeled_n;
        }
        GapOptions go;
        go.height = ho;
        auto rep = verify_gap_pairs(c, lp, go);
        violations += rep.violations;
        qualifying += static_cast<int>(rep.pairs.size());
        vacuous = vacuous && rep.vacuous;
    }

    int fixtures = 0, greedy_fail = 0;
    for (uint64_t seed = 1; seed <= 10; ++seed)
        for (double alpha : {0.5, 0.6334, 0.75}) {
            std::mt19937_64 rng(seed);
            std::normal_distribution<double> n01;
            std::vector<std::array<double, 5>> v(50);
            for (auto& x : v)
                for (auto& y : x) y = n01(rng);
            Gram g(50, std::vector<double>(50));
            for (size_t i = 0; i < 50; ++i)
                for (size_t j = 0; j < 50; ++j)
                    for (size_t k = 0; k < 5; ++k) g[i][j] += v[i][k] * v[j][k];
            auto s = greedy_separated_subset(g, alpha);
            if (!audit_maximal(g, alpha, s.selected)) ++greedy_fail;
            ++fixtures;
        }
    bool ok = partition_fail == 0 && violations == 0 && greedy_fail == 0;
    return {ok, fmt("partition failures %d over %d labeled points and 3 deltas; %d qualifying pairs, %d violations%s; "
                    "greedy maximality %d/%d fixtures fail",
                    partition_fail, labeled_n, qualifying, violations, vacuous ? " (vacuous)" : "", greedy_fail,
                    fixtures)};
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> all{
        {1, "kl_exponent anchors", 1.0, criterion_kl},
        {2, "optimized point bounds", 5.0, criterion_optimize},
        {3, "exact arithmetic suite", 60.0, criterion_exact},
        {4, "canonical height suite", 600.0, criterion_heights},
        {5, "analytic cross-validation", 1200.0, criterion_analytic},
        {6, "Igusa ratio and Im tau_1 bound", 1e300, criterion_igusa},
        {7, "search correctness", 1e300, criterion_search},
        {8, "gap machinery", 1e300, criterion_gap},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs < c.budget_seconds;
        bool pass = o.pass && in_budget;
        if (!pass) ++failed;
        std::printf("%s [%d] %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                    in_budget ? "" : ", over budget");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
