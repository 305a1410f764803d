#include "g2/verify.hpp"

#include "g2/analytic.hpp"
#include "g2/constants.hpp"
#include "g2/errors.hpp"
#include "g2/gap.hpp"
#include "g2/heights.hpp"
#include "g2/points.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace g2 {

bool Section::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool Section::vacuous() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.vacuous; });
}

void Section::add(std::string n, bool p, std::string detail, bool vac) {
    checks.push_back({std::move(n), p, vac, std::move(detail)});
}

bool VerifyReport::pass() const {
    return std::all_of(sections.begin(), sections.end(), [](const Section& s) { return s.pass(); });
}

std::string VerifyReport::json() const {
    nlohmann::json j;
    j["curve"] = curve;
    j["pass"] = pass();
    for (const auto& s : sections) {
        nlohmann::json js;
        js["name"] = s.name;
        js["pass"] = s.pass();
        js["vacuous"] = s.vacuous();
        for (const auto& c : s.checks)
            js["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"vacuous", c.vacuous}, {"detail", c.detail}});
        j["sections"].push_back(js);
    }
    return j.dump();
}

DeltaChecksum expected_delta_checksum() {
    DeltaChecksum d;
    d.terms = {23, 40, 32, 41};
    d.coef_sum = {-80, 80, -208, 48};
    return d;
}

std::vector<DeltaTerm> faulted_delta_terms() {
    auto t = delta_terms();
    for (auto& term : t)
        if (term.form == 2) {
            term.coef += 1;
            break;
        }
    return t;
}

namespace {

std::string fmt(double x) {
    std::ostringstream o;
    o.precision(6);
    o << x;
    return o.str();
}

std::vector<long> integer_roots(const QuinticCurve& c) {
    std::vector<long> out;
    Int m = 0;
    for (const auto& a : c.coeffs()) m = std::max(m, Int(abs(a)));
    if (!m.fits_slong_p() || m > 1000000) return out;
    long B = m.get_si() + 1;
    for (long x = -B; x <= B; ++x)
        if (weighted_value(c, Int(x), Int(1)) == 0) out.push_back(x);
    return out;
}

Section kummer_section(const QuinticCurve& c, const std::vector<CurvePoint>& pts, const VerifyOptions& opt) {
    Section s{"kummer", {}};
    const auto table = opt.inject_delta_fault ? faulted_delta_terms() : delta_terms();
    auto cs = delta_checksum(table), ex = expected_delta_checksum();
    s.add("delta checksum", cs.terms == ex.terms && cs.coef_sum == ex.coef_sum,
          opt.inject_delta_fault ? "fault injected into delta_3" : "");

    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long> d(-50, 50), cd(2, 5);
    bool homog = true;
    for (int i = 0; i < 100 && homog; ++i) {
        std::array<Int, 4> a{d(rng), d(rng), d(rng), d(rng)};
        Quad k{d(rng), d(rng), d(rng), d(rng)};
        Int w = cd(rng), lam = 3;
        std::array<Int, 4> aw{a[0] * ipow(w, 2), a[1] * ipow(w, 3), a[2] * ipow(w, 4), a[3] * ipow(w, 5)};
        Quad kw{k[0] * w, k[1] * ipow(w, 2), k[2] * ipow(w, 3), k[3] * ipow(w, 4)};
        Quad kl{k[0] * lam, k[1] * lam, k[2] * lam, k[3] * lam};
        auto base = delta_raw(a, k, table), graded = delta_raw(aw, kw, table), scaled = delta_raw(a, kl, table);
        for (unsigned j = 0; j < 4; ++j)
            homog = homog && graded[j] == base[j] * ipow(w, 13 + j) && scaled[j] == base[j] * ipow(lam, 4);
    }
    s.add("bidegree (12+i, 4) on 100 inputs", homog);

    auto roots = integer_roots(c);
    bool tors = true;
    for (long r : roots) {
        Int fp = 5 * ipow(Int(r), 4) + 3 * c.a2 * r * r + 2 * c.a3 * r + c.a4;
        tors = tors && delta_raw(c.coeffs(), kappa(CurvePoint::affine(Int(r), Int(1), Int(0))).k, table) ==
                           Quad{0, 0, 0, fp * fp};
    }
    s.add("delta(kappa(alpha, 0)) = (0, 0, 0, f'(alpha)^2)", tors, std::to_string(roots.size()) + " integral roots",
          roots.empty());

    bool hk = true;
    int n = 0;
    for (const auto& p : pts) {
        if (p.infinity) continue;
        Int m = 0;
        for (const auto& x : kappa(p).k) m = std::max(m, Int(abs(x)));
        hk = hk && m == p.H() * p.H();
        ++n;
    }
    s.add("h_K(kappa(P)) = 2 h(P)", hk, std::to_string(n) + " points", n == 0);
    return s;
}

Section points_section(const QuinticCurve& c, const std::vector<CurvePoint>& pts, const VerifyOptions& opt) {
    Section s{"points", {}};
    auto ref = search_points_reference(c, opt.e_max, opt.s_max);
    s.add("sieved search equals brute force", ref == pts, std::to_string(pts.size()) + " points");
    bool on = std::all_of(pts.begin(), pts.end(), [&](const CurvePoint& p) { return p.infinity || is_on_curve(c, p); });
    s.add("points lie on the curve", on);
    s.add("infinity present", !pts.empty() && pts.front().infinity);
    return s;
}

Section heights_section(const QuinticCurve& c, const std::vector<CurvePoint>& pts, const HeightOptions& ho) {
    Section s{"heights", {}};
    double worst_dbl = 0.0, worst_par = 0.0, worst_tors = 0.0;
    bool dbl = true, par = true, tors = true, stoll = true;
    int nd = 0, np = 0, nt = 0;
    std::vector<std::pair<CurvePoint, CanonicalHeightResult>> hs;
    for (const auto& p : pts) {
        if (p.infinity) continue;
        auto h = canonical_height(c, p, ho);
        hs.emplace_back(p, h);
        for (const auto& [q, mu] : h.prime_corrections) {
            if (std::fabs(mu) > stoll_bound(c, q) + 1e-12) stoll = false;
            if (valuation(c.delta, q) <= 1 && mu != 0.0) stoll = false;
        }
        if (p.t == 0) {
            ++nt;
            worst_tors = std::max(worst_tors, std::fabs(h.value));
            tors = tors && std::fabs(h.value) <= 1e-6;
            continue;
        }
        auto h2 = canonical_height(c, double_coords(c, kappa(p)), ho);
        double gap = std::fabs(h2.value - 4 * h.value), rad = h2.error_radius + 4 * h.error_radius;
        worst_dbl = std::max(worst_dbl, gap);
        dbl = dbl && gap <= rad;
        ++nd;
    }
    for (size_t i = 0; i < hs.size(); ++i)
        for (size_t j = i + 1; j < hs.size(); ++j) {
            const auto& [P, hp] = hs[i];
            const auto& [Q, hq] = hs[j];
            if (P.s * Q.e * Q.e == Q.s * P.e * P.e) continue;
            auto [ks, kd] = sum_and_diff_coords(c, P, Q);
            auto a = canonical_height(c, ks, ho), b = canonical_height(c, kd, ho);
            double gap = std::fabs(a.value + b.value - 2 * hp.value - 2 * hq.value);
            double rad = a.error_radius + b.error_radius + 2 * hp.error_radius + 2 * hq.error_radius;
            worst_par = std::max(worst_par, gap);
            par = par && gap <= rad;
            ++np;
        }
    s.add("h(2P) = 4 h(P)", dbl, std::to_string(nd) + " points, worst " + fmt(worst_dbl), nd == 0);
    s.add("parallelogram law", par, std::to_string(np) + " pairs, worst " + fmt(worst_par), np == 0);
    s.add("two-torsion height vanishes", tors, std::to_string(nt) + " points, worst " + fmt(worst_tors), nt == 0);
    s.add("Stoll bound on mu_p", stoll, "", hs.empty());
    return s;
}

Section analytic_section(const QuinticCurve& c, const std::vector<CurvePoint>& pts, const VerifyOptions& opt,
                         const RiemannData& rd, const HeightOptions& ho) {
    Section s{"analytic", {}};
    const mpfr_prec_t prec = opt.prec;
    PrecisionScope ps(prec);
    s.add("ten even characteristics", even_characteristics().size() == 10);

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    CVec2 Z, mZ, zero;
    for (int i = 0; i < 2; ++i) {
        Z[i] = Complex::with_prec(u(rng), u(rng), prec);
        mZ[i] = -Z[i];
        zero[i] = Complex::with_prec(0.0, 0.0, prec);
    }
    const double tiny = std::ldexp(1.0, -static_cast<int>(prec) / 2);
    bool parity = true, odd0 = true;
    for (const auto& ch : all_characteristics()) {
        Complex t = theta(ch, Z, rd.tau, prec), tm = theta(ch, mZ, rd.tau, prec);
        Complex expect = ch.is_odd() ? -t : t;
        parity = parity && abs(tm - expect).to_double() <= tiny * std::max(1.0, abs(t).to_double());
        if (ch.is_odd()) odd0 = odd0 && abs(theta(ch, zero, rd.tau, prec)).to_double() <= tiny;
    }
    s.add("theta parity", parity);
    s.add("odd theta constants vanish", odd0);

    bool thomae = true;
    double spread = 0.0;
    for (int b = 0; b < 5; ++b) {
        std::vector<double> v;
        for (int a = 0; a < 5; ++a)
            if (a != b) v.push_back(c_rho(rd, c, b, a));
        for (double x : v) {
            spread = std::max(spread, std::fabs(x - v[0]));
            thomae = thomae && std::isfinite(x);
        }
    }
    s.add("Thomae constancy of c_beta", thomae && spread < 1e-6, "spread " + fmt(spread));

    bool agree = true;
    double worst = 0.0;
    int n = 0, skipped = 0;
    for (const auto& p : pts) {
        if (p.infinity) continue;
        try {
            auto L = lift_point(rd, c, p);
            auto h = canonical_height(c, kappa(p), ho);
            double d = std::fabs(lambda_inf_theta(rd, c, L.K, L.Z) - (h.naive + h.archimedean_correction));
            worst = std::max(worst, d);
            agree = agree && d < 1e-4;
            ++n;
        } catch (const OnDivisor&) {
            ++skipped;
        }
    }
    s.add("theta and telescoping lambda_inf agree", agree,
          std::to_string(n) + " points, " + std::to_string(skipped) + " on a divisor, worst " + fmt(worst), n == 0);

    const auto& fc = frozen_constants();
    if (i4_degenerate(c, prec)) {
        s.add("i3 ratio matches the frozen constant", true, "I4 vanishes", true);
    } else {
        Complex q = igusa_i3_roots(c, prec) / igusa_i3_thetas(rd);
        double r = q.re().to_double();
        s.add("i3 ratio matches the frozen constant", std::fabs(r / fc.i3_ratio - 1.0) < 1e-4, "ratio " + fmt(r));
    }
    double ex = im_tau1_excess(rd, c);
    s.add("Im tau_1 bound with C_fit", ex <= fc.c_fit, "excess " + fmt(ex) + " vs " + fmt(fc.c_fit));
    return s;
}

Section gap_section(const QuinticCurve& c, const std::vector<CurvePoint>& pts, const VerifyOptions& opt,
                    const RiemannData* rd, const HeightOptions& ho) {
    Section s{"gap", {}};
    auto t = gap_thresholds(c, opt.delta);
    ClassifyOptions co;
    co.delta = opt.delta;
    co.want_cell = rd != nullptr;
    co.height = ho;
    std::vector<LabeledPoint> labeled;
    bool exclusive = true;
    for (const auto& p : pts) {
        if (p.infinity) continue;
        exclusive = exclusive && membership(c, p, t).count() == 1;
        auto h = canonical_height(c, p, ho);
        labeled.push_back({p, classify(c, p, co, rd, &h), h});
    }
    s.add("partition exhaustive and disjoint", exclusive, std::to_string(labeled.size()) + " points", labeled.empty());
    if (rd) {
        GapOptions go;
        go.delta = opt.delta;
        go.height = ho;
        auto rep = verify_gap_pairs(c, labeled, go);
        s.add("no gap violation beyond slack", rep.violations == 0,
              std::to_string(rep.pairs.size()) + " qualifying pairs", rep.vacuous);
    } else {
        s.add("no gap violation beyond slack", true, "theta disabled", true);
    }
    return s;
}

}  // namespace

VerifyReport verify_curve(const QuinticCurve& c, const VerifyOptions& opt) {
    VerifyReport r;
    r.curve = c.key();
    HeightOptions ho;
    ho.prec = opt.prec;
    ho.target_error = opt.target_error;
    auto pts = search_points(c, opt.e_max, opt.s_max);
    std::vector<CurvePoint> carried;
    for (const auto& p : pts)
        if (static_cast<int>(carried.size()) < opt.max_points + 1) carried.push_back(p);
    r.sections.push_back(kummer_section(c, pts, opt));
    r.sections.push_back(points_section(c, pts, opt));
    r.sections.push_back(heights_section(c, carried, ho));
    if (opt.theta) {
        auto rd = compute_periods(c, opt.prec);
        r.sections.push_back(analytic_section(c, carried, opt, rd, ho));
        r.sections.push_back(gap_section(c, carried, opt, &rd, ho));
    } else {
        r.sections.push_back(gap_section(c, carried, opt, nullptr, ho));
    }
    return r;
}

}  // namespace g2
