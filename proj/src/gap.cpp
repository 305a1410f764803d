#include "g2/gap.hpp"

#include "g2/errors.hpp"

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace g2 {

const char* to_string(PointClass c) {
    switch (c) {
        case PointClass::I: return "I";
        case PointClass::II: return "II";
        default: return "III";
    }
}

const char* to_string(Arrow a) {
    switch (a) {
        case Arrow::up: return "up";
        case Arrow::down: return "down";
        default: return "bullet";
    }
}

const char* to_string(RhoTag r) { return r == RhoTag::alpha_star ? "alpha_star" : "beta_star"; }

std::string PartitionLabel::key() const {
    std::ostringstream os;
    os << to_string(cls) << '.' << to_string(arrow) << '.';
    if (cell)
        os << '(' << (*cell)[0] << ',' << (*cell)[1] << ',' << (*cell)[2] << ',' << (*cell)[3] << ')';
    else
        os << "(-)";
    os << '.' << to_string(rho) << '.';
    auto band = [&](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("?"); };
    if (cls == PointClass::III)
        os << "[[" << band(i) << "]]";
    else
        os << '[' << band(i) << ',' << band(j) << ']';
    return os.str();
}

bool operator==(const PartitionLabel& a, const PartitionLabel& b) { return a.key() == b.key(); }

namespace {

constexpr mpfr_prec_t kPrec = 256;

Real log_H_f(const QuinticCurve& c) {
    Real best(kPrec, 0);
    auto a = c.coeffs();
    for (int i = 0; i < 4; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        Real v = log(abs(Real(a[static_cast<size_t>(i)]))) / static_cast<long>(i + 2);
        best = max(best, v);
    }
    return best;
}

Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// |x| >= K H(f) with K = m^m, in integers.
bool x_big_exact(const QuinticCurve& c, const CurvePoint& P, long m) {
    Int K = ipow(Int(m), static_cast<unsigned long>(m));
    Int s = Int(abs(P.s));
    auto a = c.coeffs();
    for (unsigned long i = 2; i <= 5; ++i)
        if (ipow(s, i) < ipow(K, i) * Int(abs(a[i - 2])) * ipow(P.e, 2 * i)) return false;
    return true;
}

// |x| <= H(f) / K with K = m^m, in integers.
bool x_tiny_exact(const QuinticCurve& c, const CurvePoint& P, long m) {
    Int K = ipow(Int(m), static_cast<unsigned long>(m));
    Int s = Int(abs(P.s));
    auto a = c.coeffs();
    for (unsigned long i = 2; i <= 5; ++i)
        if (ipow(s * K, i) <= Int(abs(a[i - 2])) * ipow(P.e, 2 * i)) return true;
    return false;
}

struct Sizes {
    bool big = false;   // |x| >= delta^{-1/delta} H(f)
    bool tiny = false;  // |x| <= delta^{1/delta} H(f)
};

Sizes x_sizes(const QuinticCurve& c, const CurvePoint& P, const GapThresholds& t) {
    Sizes s;
    if (t.exact) {
        s.big = x_big_exact(c, P, t.m);
        s.tiny = x_tiny_exact(c, P, t.m);
        return s;
    }
    PrecisionScope scope(kPrec);
    if (P.s == 0) {
        s.tiny = true;
        return s;
    }
    Real lx = log(abs(Real(P.s))) - log(Real(P.e)) * 2L;
    Real ld = log(Real::with_prec(t.delta, kPrec));
    Real k = ld / Real::with_prec(t.delta, kPrec);  // log delta^{1/delta}
    Real lh = log_H_f(c);
    s.big = lx >= lh - k;
    s.tiny = lx <= lh + k;
    return s;
}

// h(P) < factor * h(f), evaluated at 256 bits.
bool height_below(const CurvePoint& P, const QuinticCurve& c, const Real& factor) {
    PrecisionScope scope(kPrec);
    Int HP = std::max(Int(abs(P.s)), Int(P.e * P.e));
    Real hp = log(Real(HP));
    return hp < factor * log_H_f(c);
}

}  // namespace

GapThresholds gap_thresholds(const QuinticCurve& c, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
    GapThresholds t;
    t.delta = delta;
    double inv = 1.0 / delta;
    t.N = static_cast<int>(std::lround(inv));
    long m = std::lround(inv);
    t.exact = std::fabs(inv - static_cast<double>(m)) < 1e-12;
    t.m = m;
    t.h_f = c.h();
    double k = std::log(delta) / delta;
    t.log_x_big = t.h_f - k;
    t.log_x_small = t.h_f + k;
    return t;
}

Membership membership(const QuinticCurve& c, const CurvePoint& P, const GapThresholds& t) {
    if (P.infinity) throw InfinityPoint("partition is defined on affine points");
    PrecisionScope scope(kPrec);
    Real d = t.exact ? Real(1) / Real(t.m) : Real::with_prec(t.delta, kPrec);
    Real kd = t.exact ? Real(ipow(Int(t.m), static_cast<unsigned long>(t.m)))
                      : exp(-(log(d) / d));  // delta^{-1/delta}
    Real cup = Real(25) / Real(3) - d;
    Real cdown = Real(8) - d;
    Sizes s = x_sizes(c, P, t);
    bool between = !s.big && !s.tiny;
    Membership m;
    m.I_up = s.big && height_below(P, c, cup);
    m.I_down = !s.big && height_below(P, c, cdown);
    bool inI = m.I_up || m.I_down;
    bool medium = !inI && height_below(P, c, kd);
    m.II_up = s.big && medium;
    m.II_down = s.tiny && medium;
    m.II_bullet = between && medium;
    m.III = !(m.I_up || m.I_down || m.II_up || m.II_down || m.II_bullet);
    return m;
}

std::array<int, 4> cell_of(const CVec2& Z, const CMat2& tau, int N) {
    auto [a, b] = lattice_coordinates(reduce_mod_lattice(Z, tau), tau);
    auto idx = [&](const Real& x) {
        int i = static_cast<int>(std::floor(x.to_double() * 2 * N));
        return std::clamp(i, -N, N - 1);
    };
    return {idx(b[0]), idx(b[1]), idx(a[0]), idx(a[1])};
}

PartitionLabel classify(const QuinticCurve& c, const CurvePoint& P, const ClassifyOptions& opt, const RiemannData* rd,
                        const CanonicalHeightResult* h) {
    if (P.infinity) throw InfinityPoint("partition is defined on affine points");
    if (opt.want_cell && rd == nullptr) throw MissingAnalytic("cell assignment needs Riemann data");
    auto t = gap_thresholds(c, opt.delta);
    auto m = membership(c, P, t);
    PartitionLabel L;
    if (m.I_up || m.I_down) {
        L.cls = PointClass::I;
        L.arrow = m.I_up ? Arrow::up : Arrow::down;
        return L;
    }
    L.cls = m.III ? PointClass::III : PointClass::II;
    Sizes s = x_sizes(c, P, t);
    L.arrow = s.big ? Arrow::up : (s.tiny ? Arrow::down : Arrow::bullet);
    if (opt.want_cell) {
        CurvePoint up = P;
        if (up.t < 0) up.t = -up.t;
        L.cell = cell_of(lift_point(*rd, c, up).Z, rd->tau, t.N);
    }
    {
        auto ab = alpha_beta_star(c);
        PrecisionScope scope(kPrec);
        Real e2 = Real(P.e) * Real(P.e);
        Complex x(Real(P.s) / e2, Real(kPrec, 0));
        L.rho = abs(x - ab.alpha) <= abs(x - ab.beta) ? RhoTag::alpha_star : RhoTag::beta_star;
    }
    CanonicalHeightResult own;
    if (h == nullptr) {
        own = canonical_height(c, P, opt.height);
        h = &own;
    }
    double hk = naive_hK(kappa(P));
    double base = std::log1p(opt.delta);
    if (h->value > h->error_radius && hk > 0.0) L.i = static_cast<int>(std::floor(std::log(h->value / hk) / base));
    if (L.cls == PointClass::II && hk > 0.0 && t.h_f > 0.0)
        L.j = static_cast<int>(std::floor(std::log(hk / t.h_f) / base));
    return L;
}

PairRecord judge_pair(const std::string& label, const std::string& lemma, double cos_value, double cos_error,
                      double slack) {
    PairRecord r;
    r.label = label;
    r.lemma = lemma;
    r.cos_value = cos_value;
    r.cos_error = cos_error;
    r.bound = lemma == "big" ? kBigPointBound : kNormalPointBound;
    r.margin = r.bound + slack - cos_value;
    r.violation = cos_value - cos_error > r.bound + slack;
    return r;
}

GapReport verify_gap_pairs(const QuinticCurve& c, const std::vector<LabeledPoint>& pts, const GapOptions& opt) {
    GapReport rep;
    rep.delta = opt.delta;
    rep.slack = opt.slack_factor * opt.delta;
    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].label.cls != PointClass::II) {
            ++rep.excluded_class;
            continue;
        }
        groups[pts[i].label.key()].push_back(i);
    }
    auto pname = [](const CurvePoint& P) {
        std::ostringstream os;
        os << '(' << P.s << ',' << P.e << ',' << P.t << ')';
        return os.str();
    };
    for (const auto& [key, idx] : groups) {
        LabelSummary sum;
        sum.label = key;
        sum.points = static_cast<int>(idx.size());
        sum.min_margin = std::numeric_limits<double>::infinity();
        bool big = pts[idx[0]].label.arrow == Arrow::up;
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b) {
                const auto& P = pts[idx[a]];
                const auto& Q = pts[idx[b]];
                if (P.P.s == Q.P.s && P.P.e == Q.P.e) {
                    ++rep.excluded_opposite;
                    continue;
                }
                if (big && (P.P.t < 0 || Q.P.t < 0)) {
                    ++rep.excluded_sign;
                    continue;
                }
                CosResult cr;
                try {
                    auto [s, d] = sum_and_diff_coords(c, P.P, Q.P);
                    cr = cos_theta_from(P.height, Q.height, canonical_height(c, s, opt.height));
                } catch (const TorsionOperand&) {
                    ++rep.excluded_torsion;
                    continue;
                }
                auto r = judge_pair(key, big ? "big" : "normal", cr.value, cr.error_radius, rep.slack);
                r.p = pname(P.P);
                r.q = pname(Q.P);
                sum.min_margin = std::min(sum.min_margin, r.margin);
                ++sum.pairs;
                rep.pairs.push_back(r);
            }
        sum.vacuous = sum.pairs == 0;
        rep.labels.push_back(sum);
    }
    for (const auto& [label, cv] : opt.inject) {
        bool big = label.find(".up.") != std::string::npos;
        auto r = judge_pair(label, big ? "big" : "normal", cv, 0.0, rep.slack);
        r.fabricated = true;
        rep.pairs.push_back(r);
    }
    for (const auto& r : rep.pairs) rep.violations += r.violation;
    rep.vacuous = rep.pairs.empty();
    return rep;
}

std::string GapReport::json() const {
    nlohmann::json j;
    j["delta"] = delta;
    j["slack"] = slack;
    j["vacuous"] = vacuous;
    j["violations"] = violations;
    j["excluded"] = {{"opposite", excluded_opposite},
                     {"sign", excluded_sign},
                     {"torsion", excluded_torsion},
                     {"class", excluded_class}};
    nlohmann::json ls = nlohmann::json::array();
    for (const auto& l : labels) {
        nlohmann::json e{{"label", l.label}, {"points", l.points}, {"pairs", l.pairs}, {"vacuous", l.vacuous}};
        e["min_margin"] = l.vacuous ? nlohmann::json() : nlohmann::json(l.min_margin);
        ls.push_back(e);
    }
    j["labels"] = ls;
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : pairs)
        ps.push_back({{"label", p.label},
                      {"lemma", p.lemma},
                      {"p", p.p},
                      {"q", p.q},
                      {"cos", p.cos_value},
                      {"cos_error", p.cos_error},
                      {"bound", p.bound},
                      {"margin", p.margin},
                      {"violation", p.violation},
                      {"fabricated", p.fabricated}});
    j["pairs"] = ps;
    return j.dump();
}

Gram pairing_gram(const QuinticCurve& c, const std::vector<CurvePoint>& pts, const HeightOptions& opt) {
    size_t n = pts.size();
    std::vector<double> h(n);
    for (size_t i = 0; i < n; ++i) h[i] = canonical_height(c, pts[i], opt).value;
    Gram g(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i) {
        g[i][i] = h[i];
        for (size_t k = i + 1; k < n; ++k) {
            double v;
            if (pts[i].s == pts[k].s && pts[i].e == pts[k].e)
                v = pts[i].t == pts[k].t ? h[i] : -h[i];
            else {
                auto [s, d] = sum_and_diff_coords(c, pts[i], pts[k]);
                v = (canonical_height(c, s, opt).value - h[i] - h[k]) / 2.0;
            }
            g[i][k] = g[k][i] = v;
        }
    }
    return g;
}

bool is_psd(const Gram& g, double tol) {
    size_t n = g.size();
    if (n == 0) return true;
    Eigen::MatrixXd m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g[i][j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    return es.eigenvalues().minCoeff() >= -tol * scale;
}

double gram_cos(const Gram& g, size_t i, size_t j) { return g[i][j] / std::sqrt(g[i][i] * g[j][j]); }

SubsetResult greedy_separated_subset(const Gram& g, double alpha, double tol) {
    SubsetResult r;
    std::vector<size_t> order;
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i][i] <= tol)
            r.zero.push_back(i);
        else
            order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return g[a][a] < g[b][b]; });
    for (size_t i : order) {
        bool ok = true;
        for (size_t s : r.selected)
            if (gram_cos(g, i, s) > alpha) {
                ok = false;
                break;
            }
        if (ok) r.selected.push_back(i);
    }
    std::sort(r.selected.begin(), r.selected.end());
    return r;
}

bool audit_maximal(const Gram& g, double alpha, const std::vector<size_t>& S, double tol) {
    for (size_t a = 0; a < S.size(); ++a)
        for (size_t b = a + 1; b < S.size(); ++b)
            if (gram_cos(g, S[a], S[b]) > alpha) return false;
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i][i] <= tol || std::find(S.begin(), S.end(), i) != S.end()) continue;
        bool blocked = false;
        for (size_t s : S)
            if (gram_cos(g, i, s) > alpha) {
                blocked = true;
                break;
            }
        if (!blocked) return false;
    }
    return true;
}

ClusterAudit cluster_repulsion_audit(const Gram& g, size_t q, const std::vector<size_t>& members, double alpha,
                                     double delta, double slack_factor, double tol) {
    ClusterAudit A;
    A.threshold = -2.0 * std::sqrt(delta) + slack_factor * delta;
    A.printed_scale = 1.0 / std::sqrt(delta);
    if (g[q][q] <= tol) throw DegenerateGram("center has vanishing norm");
    std::vector<size_t> in;
    for (size_t p : members) {
        if (p == q) continue;
        if (g[p][p] <= tol) throw DegenerateGram("member has vanishing norm");
        if (gram_cos(g, p, q) > alpha)
            in.push_back(p);
        else
            ++A.outside;
    }
    if (in.size() <= 1) {
        A.vacuous = true;
        A.members = in;
        A.remaining = 0;
        A.count_bound = static_cast<double>(in.size());
        return A;
    }
    auto vnorm2 = [&](size_t p) { return 2.0 - 2.0 * gram_cos(g, p, q); };
    size_t r = in[0];
    for (size_t p : in)
        if (vnorm2(p) < vnorm2(r)) r = p;
    A.removed = r;
    for (size_t p : in)
        if (p != r) A.members.push_back(p);
    A.remaining = static_cast<int>(A.members.size());
    A.max_inner = -std::numeric_limits<double>::infinity();
    double max_vcos = -std::numeric_limits<double>::infinity();
    for (size_t p : A.members)
        if (vnorm2(p) <= tol) throw DegenerateGram("v_P vanishes for a retained member");
    for (size_t a = 0; a < A.members.size(); ++a)
        for (size_t b = a + 1; b < A.members.size(); ++b) {
            size_t p = A.members[a], pp = A.members[b];
            double inner = 1.0 - gram_cos(g, p, q) - gram_cos(g, pp, q) + gram_cos(g, p, pp);
            A.max_inner = std::max(A.max_inner, inner);
            max_vcos = std::max(max_vcos, inner / std::sqrt(vnorm2(p) * vnorm2(pp)));
            if (inner >= A.threshold) ++A.violations;
        }
    A.pass = A.violations == 0;
    if (A.remaining <= 1)
        A.count_bound = A.remaining + 1.0;
    else if (max_vcos < 0.0)
        A.count_bound = 1.0 - 1.0 / max_vcos + 1.0;
    else
        A.count_bound = std::numeric_limits<double>::infinity();
    return A;
}

}  // namespace g2
