#include "g2/analytic.hpp"

#include "g2/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace g2 {

namespace {

Complex fprime(const std::vector<Complex>& roots, int k) {
    Complex acc(Real::with_prec(1.0, roots[0].prec()), Real(roots[0].prec(), 0));
    for (int i = 0; i < 5; ++i)
        if (i != k) acc = acc * (roots[static_cast<size_t>(k)] - roots[static_cast<size_t>(i)]);
    return acc;
}

std::vector<Complex> roots_at(const QuinticCurve& c, mpfr_prec_t prec) {
    std::vector<Complex> r;
    for (const auto& z : c.roots(prec + 32)) r.push_back(z.rounded(prec));
    return r;
}

}  // namespace

ThetaChar find_chi_infinity(const RiemannData& rd, const QuinticCurve& c) {
    mpfr_prec_t prec = rd.precision_bits;
    PrecisionScope scope(prec);
    auto odd = odd_characteristics();
    double scale = 1.0;
    for (const auto& z : roots_at(c, prec)) scale = std::max(scale, abs(z).to_double());
    const double probes[2][2] = {{0.31, 0.73}, {-0.57, 0.41}};
    int found = -1;
    for (const auto& pr : probes) {
        Complex x0 = Complex::with_prec(pr[0] * scale, pr[1] * scale, prec);
        Complex y0 = sqrt(c.eval(x0));
        CVec2 Z = reduce_mod_lattice(abel_jacobi(rd, c, x0, y0), rd.tau);
        std::vector<std::pair<double, int>> vals;
        for (size_t i = 0; i < odd.size(); ++i) {
            Real x = xi(odd[i], Z, rd.tau, prec);
            double lg = x.is_zero() ? -1e9 : log(x).to_double();
            vals.emplace_back(lg, static_cast<int>(i));
        }
        std::sort(vals.begin(), vals.end());
        double cut = -0.25 * static_cast<double>(prec) * std::log(2.0);
        if (!(vals[0].first < cut && vals[1].first > -20.0))
            throw AmbiguousMatch("no unique odd theta function vanishes on the curve");
        if (found >= 0 && found != vals[0].second) throw AmbiguousMatch("probes disagree on the vanishing characteristic");
        found = vals[0].second;
    }
    return odd[static_cast<size_t>(found)];
}

double c_rho(const RiemannData& rd, const QuinticCurve& c, int beta, int alpha) {
    if (beta == alpha) throw DomainError("auxiliary root must differ from rho");
    mpfr_prec_t prec = rd.precision_bits;
    PrecisionScope scope(prec);
    auto roots = roots_at(c, prec);
    ThetaChar ch = (rd.char_table[static_cast<size_t>(beta)] + rd.char_table[5] + rd.char_table[static_cast<size_t>(alpha)])
                       .reduced();
    CVec2 zero;
    zero[0] = Complex(Real(prec, 0), Real(prec, 0));
    zero[1] = zero[0];
    Real t = abs(theta(ch, zero, rd.tau, prec));
    if (t.is_zero() || t.exponent() < -static_cast<long>(prec) / 2)
        throw EvenThetaVanishes("theta constant " + ch.str() + " underflows");
    Real v = log(t) * 2L + log(abs(fprime(roots, alpha))) / 2L -
             log(abs(roots[static_cast<size_t>(alpha)] - roots[static_cast<size_t>(beta)]));
    return v.to_double();
}

int default_auxiliary_root(const RiemannData& rd, const QuinticCurve& c, int beta) {
    auto roots = roots_at(c, rd.precision_bits);
    int best = -1;
    double bd = -1.0;
    for (int i = 0; i < 5; ++i) {
        if (i == beta) continue;
        double d = abs(roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(beta)]).to_double();
        if (d > bd) {
            bd = d;
            best = i;
        }
    }
    return best;
}

double lambda_inf_theta(const RiemannData& rd, const QuinticCurve& c, const CQuad& K, const CVec2& Z, int rho,
                        double divisor_tolerance) {
    mpfr_prec_t prec = rd.precision_bits;
    PrecisionScope scope(prec);
    auto roots = roots_at(c, prec);
    Complex l = ell_root(roots[static_cast<size_t>(rho)], K);
    Real kmax = max(max(abs(K[0]), abs(K[1])), max(abs(K[2]), abs(K[3])));
    if ((abs(l) / kmax).to_double() < divisor_tolerance) throw OnDivisor("Kummer point lies on the divisor of l_rho");
    Real x = xi(rd.char_table[static_cast<size_t>(rho)], Z, rd.tau, prec);
    if (x.is_zero()) throw OnDivisor("theta vanishes at the lift");
    double cr = c_rho(rd, c, rho, default_auxiliary_root(rd, c, rho));
    return (-(log(x) * 2L) + log(abs(l))).to_double() + cr;
}

double lambda_inf_theta(const RiemannData& rd, const QuinticCurve& c, const CQuad& K, const CVec2& Z) {
    mpfr_prec_t prec = rd.precision_bits;
    PrecisionScope scope(prec);
    auto roots = roots_at(c, prec);
    int best = 0;
    double bl = -1.0;
    for (int k = 0; k < 5; ++k) {
        double l = abs(ell_root(roots[static_cast<size_t>(k)], K)).to_double();
        if (l > bl) {
            bl = l;
            best = k;
        }
    }
    return lambda_inf_theta(rd, c, K, Z, best);
}

PointLift lift_point(const RiemannData& rd, const QuinticCurve& c, const CurvePoint& P) {
    if (P.infinity) throw InfinityPoint("no affine lift for the point at infinity");
    mpfr_prec_t prec = rd.precision_bits;
    PrecisionScope scope(prec);
    Real e2 = Real(P.e) * Real(P.e);
    Real x = Real(P.s) / e2;
    Real y = Real(P.t) / (e2 * e2 * Real(P.e));
    PointLift L;
    if (P.t == 0) {
        auto roots = roots_at(c, prec);
        int k = 0;
        for (int i = 1; i < 5; ++i)
            if (abs(roots[static_cast<size_t>(i)] - x) < abs(roots[static_cast<size_t>(k)] - x)) k = i;
        CVec2 v;
        v[0] = -rd.spokes[static_cast<size_t>(k)][0];
        v[1] = -rd.spokes[static_cast<size_t>(k)][1];
        L.Z = rd.big_period.inverse() * v;
    } else {
        L.Z = abel_jacobi(rd, c, Complex(x, Real(prec, 0)), Complex(y, Real(prec, 0)));
    }
    L.K = to_complex(kappa(P).k, prec);
    return L;
}

namespace {

Complex i4_sum(const std::vector<Complex>& r, bool printed) {
    mpfr_prec_t p = r[0].prec();
    Complex acc(Real(p, 0), Real(p, 0));
    // each unordered (triple, pair) split occurs 12 times among the 120 permutations
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k) {
                int rest[2], n = 0;
                for (int m = 0; m < 5; ++m)
                    if (m != i && m != j && m != k) rest[n++] = m;
                Complex a = r[static_cast<size_t>(i)] - r[static_cast<size_t>(j)];
                Complex b = r[static_cast<size_t>(j)] - r[static_cast<size_t>(k)];
                Complex cc = r[static_cast<size_t>(k)] - r[static_cast<size_t>(i)];
                Complex d = r[static_cast<size_t>(rest[0])] - r[static_cast<size_t>(rest[1])];
                Complex t = a * a * b * b * cc * cc * d * d;
                if (printed) {
                    Complex q = r[static_cast<size_t>(rest[0])] * r[static_cast<size_t>(rest[1])];
                    t = t * q * q;
                }
                acc += t;
            }
    return acc * Real(12);
}

Complex i3_from(const QuinticCurve& c, mpfr_prec_t prec, bool printed) {
    PrecisionScope scope(prec);
    auto r = roots_at(c, prec);
    Complex i4 = i4_sum(r, printed);
    Real delta = Real(c.delta);
    return pow(i4, 5) / Complex(delta * delta, Real(prec, 0));
}

}  // namespace

Complex igusa_i4(const std::vector<Complex>& roots) { return i4_sum(roots, false); }

Complex igusa_i3_roots(const QuinticCurve& c, mpfr_prec_t prec) { return i3_from(c, prec, false); }

Complex igusa_i3_roots_printed(const QuinticCurve& c, mpfr_prec_t prec) { return i3_from(c, prec, true); }

Complex igusa_i3_thetas(const RiemannData& rd) {
    mpfr_prec_t prec = rd.precision_bits;
    PrecisionScope scope(prec);
    CVec2 zero;
    zero[0] = Complex(Real(prec, 0), Real(prec, 0));
    zero[1] = zero[0];
    Complex s8(Real(prec, 0), Real(prec, 0));
    Complex p2(Real::with_prec(1.0, prec), Real(prec, 0));
    for (const auto& ch : even_characteristics()) {
        Complex t = theta(ch, zero, rd.tau, prec);
        Complex t2 = t * t;
        Complex t4 = t2 * t2;
        s8 += t4 * t4;
        p2 = p2 * t2;
    }
    return pow(s8, 5) / (p2 * p2);
}

std::string riemann_json(const RiemannData& rd) {
    auto cj = [](const Complex& z) { return nlohmann::json::array({z.re().str(40), z.im().str(40)}); };
    nlohmann::json j;
    j["precision_bits"] = rd.precision_bits;
    auto mj = [&](const CMat2& m) {
        return nlohmann::json::array({nlohmann::json::array({cj(m(0, 0)), cj(m(0, 1))}),
                                      nlohmann::json::array({cj(m(1, 0)), cj(m(1, 1))})});
    };
    j["tau"] = mj(rd.tau);
    j["big_period"] = mj(rd.big_period);
    j["small_period"] = mj(rd.small_period);
    j["aj_basepoint"] = "infinity";
    nlohmann::json ct = nlohmann::json::object();
    for (int k = 0; k < 5; ++k) ct[std::to_string(k)] = rd.char_table[static_cast<size_t>(k)].str();
    ct["inf"] = rd.char_table[5].str();
    j["char_table"] = ct;
    j["symmetry_defect"] = rd.symmetry_defect;
    return j.dump();
}

}  // namespace g2
