#pragma once

#include <optional>

namespace g2 {

struct KLResult {
    double eta = 0.0;
    double bracket = 0.0;
    double exponent_base = 1.0;  // exp(bracket), the per-dimension growth of a spherical code
};

// Throws DomainError unless -1 < eta < 1.
KLResult kl_exponent(double eta);

struct OptimizeResult {
    double alpha_star = 0.0;
    double base_S = 0.0;        // kl(alpha)
    double base_cluster = 0.0;  // kl(second argument)
    double product = 0.0;
    double lo = 0.0, hi = 0.0;  // search interval
    double max_second_arg = 0.0;
    bool unimodal = true;       // grid pre-scan found a single local minimum
};

struct OptimizeOptions {
    int grid_points = 10000;
    double tolerance = 1e-10;
    double lo_shift = 0.0;  // interval perturbation for stability checks
    double hi_shift = 0.0;
};

// Minimizes kl(alpha) * kl(6 - 8 alpha) over (1/sqrt 2, 3/4].
OptimizeResult optimize_genus2(const OptimizeOptions& opt = {});

// Minimizes kl(alpha) * kl((1 + 1/g - 2 alpha) / (1/2 - 1/(2g))) over
// (max(1/sqrt g, 1/4 + 3/(4g)), 1/2 + 1/(2g)); g empty means the limit g -> infinity.
// Throws EmptyInterval when the interval is empty, DomainError for g < 1.
OptimizeResult optimize_general_genus(std::optional<int> g, const OptimizeOptions& opt = {});

}  // namespace g2
