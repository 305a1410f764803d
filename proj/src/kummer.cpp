#include "g2/kummer.hpp"

#include "g2/errors.hpp"

#include <algorithm>
#include <sstream>

namespace g2 {

Int content(const Quad& q) {
    Int g = 0;
    for (const auto& x : q) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Quad primitive_part(const Quad& q) {
    Int g = content(q);
    if (g == 0) throw DegenerateImage("zero vector has no primitive part");
    Quad out = q;
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (const auto& x : out) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : out) y = -y;
        break;
    }
    return out;
}

KummerCoords::KummerCoords(const Quad& raw) : k(primitive_part(raw)) {}

double KummerCoords::naive_log() const {
    Int m = 0;
    for (const auto& x : k)
        if (abs(x) > m) m = abs(x);
    return log_abs(m);
}

std::string KummerCoords::str() const {
    std::ostringstream os;
    os << '(' << k[0] << ',' << k[1] << ',' << k[2] << ',' << k[3] << ')';
    return os.str();
}

bool operator==(const KummerCoords& a, const KummerCoords& b) { return a.k == b.k; }

KummerCoords kappa(const CurvePoint& p) {
    if (p.infinity) return KummerCoords::identity();
    Int e2 = p.e * p.e;
    return KummerCoords(Quad{0, e2 * e2, p.s * e2, p.s * p.s});
}

DeltaChecksum delta_checksum(const std::vector<DeltaTerm>& table) {
    DeltaChecksum cs;
    for (const auto& t : table) {
        cs.terms[t.form - 1] += 1;
        cs.coef_sum[t.form - 1] += t.coef;
    }
    return cs;
}

namespace {

template <class T>
std::array<T, 4> eval_forms(const std::array<T, 4>& a, const std::array<T, 4>& k, const std::vector<DeltaTerm>& table,
                            const T& zero) {
    // powers[v][e] for the eight variables and exponents up to 5
    std::array<std::array<T, 6>, 8> pw;
    for (int v = 0; v < 8; ++v) {
        const T& base = v < 4 ? a[v] : k[v - 4];
        pw[v][0] = zero;
        pw[v][1] = base;
        for (int e = 2; e < 6; ++e) pw[v][e] = pw[v][e - 1] * base;
    }
    std::array<T, 4> out{zero, zero, zero, zero};
    for (const auto& t : table) {
        T term = zero;
        bool first = true;
        for (int v = 0; v < 8; ++v) {
            if (t.exps[v] == 0) continue;
            if (first) {
                term = pw[v][t.exps[v]];
                first = false;
            } else {
                term = term * pw[v][t.exps[v]];
            }
        }
        if (first) term = zero + T(1);
        out[t.form - 1] += term * T(t.coef);
    }
    return out;
}

}  // namespace

Quad delta_raw(const std::array<Int, 4>& a, const Quad& k, const std::vector<DeltaTerm>& table) {
    return eval_forms<Int>(a, k, table, Int(0));
}

Quad delta_raw(const QuinticCurve& c, const Quad& k) { return delta_raw(c.coeffs(), k, delta_terms()); }

std::array<Real, 4> delta_real(const std::array<Real, 4>& a, const std::array<Real, 4>& k) {
    mpfr_prec_t p = k[0].prec();
    PrecisionScope scope(p);
    return eval_forms<Real>(a, k, delta_terms(), Real(p, 0));
}

KummerCoords double_coords(const QuinticCurve& c, const KummerCoords& K) {
    Quad d = delta_raw(c, K.k);
    if (d[0] == 0 && d[1] == 0 && d[2] == 0 && d[3] == 0)
        throw DegenerateImage("all duplication forms vanish at " + K.str());
    return KummerCoords(d);
}

std::pair<Quad, Quad> sum_and_diff_raw(const QuinticCurve& c, const CurvePoint& P, const CurvePoint& Q) {
    if (P.infinity || Q.infinity) throw InfinityOperand("sum/difference with the point at infinity");
    const Int &S = P.s, &D = P.e, &U = P.t;
    const Int &s = Q.s, &d = Q.e, &u = Q.t;
    Int D2 = D * D, d2 = d * d;
    Int minus = S * d2 - s * D2;
    if (minus == 0) throw EqualX("points share the x-coordinate");
    Int plus = S * d2 + s * D2;
    Int m2 = minus * minus;
    Int D4d4 = D2 * D2 * d2 * d2;
    Int Ss = S * s;
    Int base = 2 * c.a5 * D4d4 * D2 * d2 + c.a4 * D4d4 * plus + 2 * c.a3 * D4d4 * Ss + c.a2 * D2 * d2 * Ss * plus +
               Ss * Ss * plus;
    Int cross = 2 * D * d * U * u;
    Quad sum{D2 * d2 * m2, m2 * plus, Ss * m2, base - cross};
    Quad diff{D2 * d2 * m2, m2 * plus, Ss * m2, base + cross};
    return {sum, diff};
}

std::pair<KummerCoords, KummerCoords> sum_and_diff_coords(const QuinticCurve& c, const CurvePoint& P,
                                                          const CurvePoint& Q) {
    auto [s, d] = sum_and_diff_raw(c, P, Q);
    return {KummerCoords(s), KummerCoords(d)};
}

CQuad to_complex(const Quad& k, mpfr_prec_t prec) {
    CQuad out;
    for (int i = 0; i < 4; ++i) out[i] = Complex(Real::with_prec(k[i], prec), Real(prec, 0));
    return out;
}

Complex ell_root(const Complex& rho, const CQuad& K) { return rho * rho * K[0] - rho * K[1] + K[2]; }

Complex ell_infinity(const CQuad& K) { return K[0]; }

Complex ell_pair(const QuinticCurve& c, const Complex& alpha, const Complex& beta, const CQuad& K) {
    mpfr_prec_t p = alpha.prec();
    auto R = [&](const Int& z) { return Complex(Real::with_prec(z, p), Real(p, 0)); };
    Complex sum = alpha + beta;
    Complex prod = alpha * beta;
    Complex num = R(c.a5) * Real::with_prec(2.0, p) + R(c.a4) * sum + R(c.a3) * prod * Real::with_prec(2.0, p) +
                  R(c.a2) * prod * sum + prod * prod * sum;
    Complex diff = alpha - beta;
    return num / (diff * diff) * K[0] + prod * K[1] - sum * K[2] + K[3];
}

}  // namespace g2
