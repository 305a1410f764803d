#include "g2/mp.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace g2 {

namespace {
thread_local mpfr_prec_t g_working_precision = 256;

mpfr_prec_t pmax(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }
}  // namespace

mpfr_prec_t working_precision() { return g_working_precision; }
void set_working_precision(mpfr_prec_t bits) { g_working_precision = bits; }

std::string Real::str(int digits) const {
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

Real& Real::operator+=(const Real& o) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(const Real& o) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(const Real& o) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(const Real& o) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real operator+(const Real& a, const Real& b) {
    Real r(pmax(a, b), 0);
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, const Real& b) {
    Real r(pmax(a, b), 0);
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, const Real& b) {
    Real r(pmax(a, b), 0);
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, const Real& b) {
    Real r(pmax(a, b), 0);
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator-(const Real& a) {
    Real r(a.prec(), 0);
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, long b) {
    Real r(a.prec(), 0);
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, long b) {
    Real r(a.prec(), 0);
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

#define G2_UNARY(name, fn)                          \
    Real name(const Real& a) {                      \
        Real r(a.prec(), 0);                        \
        fn(r.raw(), a.raw(), MPFR_RNDN);            \
        return r;                                   \
    }
G2_UNARY(abs, mpfr_abs)
G2_UNARY(sqrt, mpfr_sqrt)
G2_UNARY(log, mpfr_log)
G2_UNARY(exp, mpfr_exp)
G2_UNARY(sin, mpfr_sin)
G2_UNARY(cos, mpfr_cos)
#undef G2_UNARY

Real floor(const Real& a) {
    Real r(a.prec(), 0);
    mpfr_floor(r.raw(), a.raw());
    return r;
}
Real round(const Real& a) {
    Real r(a.prec(), 0);
    mpfr_round(r.raw(), a.raw());
    return r;
}
Real atan2(const Real& y, const Real& x) {
    Real r(pmax(y, x), 0);
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
Real pow(const Real& a, const Real& b) {
    Real r(pmax(a, b), 0);
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real hypot(const Real& a, const Real& b) {
    Real r(pmax(a, b), 0);
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }
Real ldexp(const Real& a, long e) {
    Real r(a.prec(), 0);
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

double log_abs(const mpz_class& z) {
    long e = 0;
    double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * 0.69314718055994530942;
}

Real log_abs(const mpz_class& z, mpfr_prec_t prec) {
    Real r = Real::with_prec(z, prec + 32 + static_cast<mpfr_prec_t>(mpz_sizeinbase(z.get_mpz_t(), 2)));
    return log(abs(r)).rounded(prec);
}

Complex& Complex::operator*=(const Complex& o) {
    *this = *this * o;
    return *this;
}
Complex& Complex::operator/=(const Complex& o) {
    *this = *this / o;
    return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re() + b.re(), a.im() + b.im()); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re() - b.re(), a.im() - b.im()); }
Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re());
}
Complex operator/(const Complex& a, const Complex& b) {
    Real d = norm(b);
    return Complex((a.re() * b.re() + a.im() * b.im()) / d, (a.im() * b.re() - a.re() * b.im()) / d);
}
Complex operator-(const Complex& a) { return Complex(-a.re(), -a.im()); }
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re() * b, a.im() * b); }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re() / b, a.im() / b); }

Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }
Real abs(const Complex& z) { return hypot(z.re(), z.im()); }
Real arg(const Complex& z) { return atan2(z.im(), z.re()); }
Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }

Complex sqrt(const Complex& z) {
    if (z.re().is_zero() && z.im().is_zero()) return z;
    Real r = abs(z);
    Real a = sqrt((r + abs(z.re())) / 2);
    if (z.re().sign() >= 0) return Complex(a, z.im() / (a * 2));
    Real b = z.im().sign() >= 0 ? a : -a;
    return Complex(abs(z.im()) / (a * 2), b);
}

Complex exp(const Complex& z) {
    Real m = exp(z.re());
    return Complex(m * cos(z.im()), m * sin(z.im()));
}

Complex log(const Complex& z) { return Complex(log(abs(z)), arg(z)); }

Complex expi(const Real& theta) { return Complex(cos(theta), sin(theta)); }

Complex pow(const Complex& z, long n) {
    Complex result(Real::with_prec(1.0, z.prec()), Real(z.prec(), 0));
    Complex base = z;
    bool inv = n < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    while (k) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    if (inv) return Complex(Real::with_prec(1.0, z.prec()), Real(z.prec(), 0)) / result;
    return result;
}

}  // namespace g2
