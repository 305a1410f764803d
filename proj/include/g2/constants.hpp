#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "g2/analytic.hpp"

namespace g2 {

// Fitted-and-frozen monitoring constants. Values are produced by `g2 calibrate`
// and mirrored in data/frozen_constants.json.
struct FrozenConstants {
    int version = 1;
    double c_arch = 9.644003757268509;  // archimedean duplication step, 2x margin over the fuzz maximum
    double c_xi = 0.0;                  // uniform bound on |Xi_chi(Z)|
    double c_asym = 0.0;                // near-zero theta ratios lie in [1/c_asym, c_asym]
    double i3_ratio = 0.0;              // i3(roots) / i3(thetas)
    double c_fit = 0.0;                 // Im tau_1 <= (10/pi) h(f) - (1/(3 pi)) log|Delta_f| + c_fit
    double c_disc = 0.0;                // |Delta_f| <= c_disc H(f)^20
    std::string provenance;
};

const FrozenConstants& frozen_constants();
FrozenConstants load_constants(const std::string& path);
void save_constants(const FrozenConstants& c, const std::string& path);

// Relative drift of each fitted field, keyed by name.
std::vector<std::pair<std::string, double>> constant_drift(const FrozenConstants& frozen, const FrozenConstants& fresh);

struct CalibrationCorpus {
    std::vector<std::array<long, 4>> curves;
    uint64_t seed = 1;
};

// Throws Error if the file is missing or malformed.
CalibrationCorpus load_corpus(const std::string& path);

struct CalibrationOptions {
    mpfr_prec_t prec = 128;
    int arch_samples = 1000;
    int xi_samples = 1000;  // random Z per curve
    mpfr_prec_t xi_prec = 64;
    int asym_samples = 20;  // random Z per curve and characteristic class
    double disc_T = 2.0;
    double margin = 2.0;
};

double calibrate_c_arch(uint64_t seed, int samples);
// Largest |Delta_f| / H(f)^20 over the family at height T.
double max_disc_ratio(double T);
// Im tau_1 - (10/pi) h(f) + (1/(3 pi)) log|Delta_f| for a reduced Riemann matrix.
double im_tau1_excess(const RiemannData& rd, const QuinticCurve& c);
// Largest |Xi_chi(Z)| over all chi and random Z in the fundamental parallelepiped.
double max_xi(const RiemannData& rd, uint64_t seed, int samples, mpfr_prec_t prec = 64);
// True when the Igusa-Clebsch I4 vanishes to working precision, as for x^5 + 1.
bool i4_degenerate(const QuinticCurve& c, mpfr_prec_t prec);
// Largest max(r, 1/r) of near-zero theta ratios over three characteristic classes.
double max_asym_ratio(const RiemannData& rd, uint64_t seed, int samples);

FrozenConstants calibrate(const CalibrationCorpus& corpus, const CalibrationOptions& opt = {});

}  // namespace g2
