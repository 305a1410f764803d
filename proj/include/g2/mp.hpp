#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

namespace g2 {

// Working precision used when a Real is created without an explicit one.
mpfr_prec_t working_precision();
void set_working_precision(mpfr_prec_t bits);

class PrecisionScope {
public:
    explicit PrecisionScope(mpfr_prec_t bits) : saved_(working_precision()) { set_working_precision(bits); }
    ~PrecisionScope() { set_working_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    mpfr_prec_t saved_;
};

class Real {
public:
    Real() { mpfr_init2(v_, working_precision()); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t prec, int) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(double x) { mpfr_init2(v_, working_precision()); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(int x) { mpfr_init2(v_, working_precision()); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(long x) { mpfr_init2(v_, working_precision()); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(long long x) { mpfr_init2(v_, working_precision()); mpfr_set_si(v_, static_cast<long>(x), MPFR_RNDN); }
    Real(const mpz_class& z) { mpfr_init2(v_, working_precision()); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    Real(const mpq_class& q) { mpfr_init2(v_, working_precision()); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    ~Real() { mpfr_clear(v_); }

    Real& operator=(const Real& o) {
        if (this != &o) {
            if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    static Real from_string(const std::string& s, mpfr_prec_t prec) {
        Real r(prec, 0);
        mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
        return r;
    }
    static Real with_prec(double x, mpfr_prec_t prec) {
        Real r(prec, 0);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real with_prec(const mpz_class& z, mpfr_prec_t prec) {
        Real r(prec, 0);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec, 0);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real log2(mpfr_prec_t prec) {
        Real r(prec, 0);
        mpfr_const_log2(r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    Real rounded(mpfr_prec_t p) const {
        Real r(p, 0);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    double to_double_down() const { return mpfr_get_d(v_, MPFR_RNDD); }
    double to_double_up() const { return mpfr_get_d(v_, MPFR_RNDU); }
    long exponent() const { return mpfr_zero_p(v_) ? 0 : mpfr_get_exp(v_); }
    std::string str(int digits = 30) const;
    mpz_class round_to_z() const {
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
        return z;
    }
    mpz_class floor_to_z() const {
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
        return z;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
inline Real operator*(long b, const Real& a) { return a * b; }

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }

Real abs(const Real& a);
Real sqrt(const Real& a);
Real log(const Real& a);
Real exp(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& a, const Real& b);
Real floor(const Real& a);
Real round(const Real& a);
Real hypot(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real ldexp(const Real& a, long e);

// log|z| for a big integer, exact to double rounding; z must be nonzero.
double log_abs(const mpz_class& z);
Real log_abs(const mpz_class& z, mpfr_prec_t prec);

class Complex {
public:
    Complex() = default;
    Complex(const Real& re) : re_(re), im_(re.prec(), 0) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(double re) : re_(re), im_(0.0) {}

    static Complex with_prec(double re, double im, mpfr_prec_t prec) {
        return Complex(Real::with_prec(re, prec), Real::with_prec(im, prec));
    }
    static Complex polar(const Real& r, const Real& theta) { return Complex(r * cos(theta), r * sin(theta)); }

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }
    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
    Complex rounded(mpfr_prec_t p) const { return Complex(re_.rounded(p), im_.rounded(p)); }

    Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);

private:
    Real re_;
    Real im_;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Real& b);
inline Complex operator*(const Real& b, const Complex& a) { return a * b; }
Complex operator/(const Complex& a, const Real& b);

Real norm(const Complex& z);
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex sqrt(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex expi(const Real& theta);
Complex pow(const Complex& z, long n);

}  // namespace g2
