#pragma once

#include "g2/integer.hpp"
#include "g2/mp.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

namespace g2 {

// Roots of f cached per precision; entries are written once and then only read.
class RootCache {
public:
    const std::vector<Complex>* find(mpfr_prec_t prec) const;
    const std::vector<Complex>& insert(mpfr_prec_t prec, std::vector<Complex> roots);

private:
    mutable std::shared_mutex mu_;
    std::map<mpfr_prec_t, std::unique_ptr<const std::vector<Complex>>> by_prec_;
};

// y^2 = x^5 + a2 x^3 + a3 x^2 + a4 x + a5.
struct QuinticCurve {
    Int a2, a3, a4, a5;
    Int disc;   // Res(f, f')
    Int delta;  // 2^8 * disc
    double H = 1.0;

    std::array<Int, 4> coeffs() const { return {a2, a3, a4, a5}; }
    double h() const;
    std::string key() const;

    // Five distinct complex roots at the requested precision, sorted by (re, im).
    const std::vector<Complex>& roots(mpfr_prec_t prec = 256) const;

    Complex eval(const Complex& x) const;
    Complex eval_derivative(const Complex& x) const;

    std::shared_ptr<RootCache> cache = std::make_shared<RootCache>();
};

// Exact Res(f, f') via the 9x9 Sylvester determinant.
Int discriminant(const Int& a2, const Int& a3, const Int& a4, const Int& a5);
// Same value from the expanded polynomial in the coefficients.
Int discriminant_poly(const Int& a2, const Int& a3, const Int& a4, const Int& a5);
// 128-bit evaluation of the expanded polynomial; valid while all |a_i| <= 2^20.
__int128 discriminant_i128(int64_t a2, int64_t a3, int64_t a4, int64_t a5);

double naive_height_H(const Int& a2, const Int& a3, const Int& a4, const Int& a5);

// Throws SingularCurve when the discriminant vanishes.
QuinticCurve make_curve(const Int& a2, const Int& a3, const Int& a4, const Int& a5);
QuinticCurve make_curve(long a2, long a3, long a4, long a5);

// floor(T^i) for i = 2..5.
std::array<int64_t, 4> family_bounds(double T);

using CurveSink = std::function<void(const QuinticCurve&)>;
using CoeffPredicate = std::function<bool(int64_t, int64_t, int64_t, int64_t)>;

// Streams the nonsingular curves with |a_i| <= T^i in lexicographic coefficient order.
void enumerate_family(double T, const CurveSink& sink, const CoeffPredicate& pred = nullptr);

// Counts of the coefficient box and its nonsingular part.
struct FamilyCount {
    uint64_t box = 0;
    uint64_t nonsingular = 0;
};
FamilyCount count_family_reference(double T);
FamilyCount count_family_parallel(double T);
// Counts the singular locus directly via square factorizations f = g^2 k.
uint64_t count_singular_by_factorization(double T);

struct ComplexRootOptions {
    int max_iterations = 2000;
};
std::vector<Complex> complex_roots(const QuinticCurve& c, mpfr_prec_t prec, const ComplexRootOptions& opt = {});

struct RootPair {
    int ia = 0;
    int ib = 1;
    Complex alpha;
    Complex beta;
    double min_quantity = 0.0;
};
RootPair alpha_beta_star(const QuinticCurve& c, mpfr_prec_t prec = 256);

}  // namespace g2
