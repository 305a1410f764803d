#include "g2/packing.hpp"

#include "g2/errors.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace g2 {

KLResult kl_exponent(double eta) {
    if (!(eta > -1.0 && eta < 1.0)) throw DomainError("kl_exponent needs -1 < eta < 1");
    double s = std::sin(std::acos(eta));
    double p = (1.0 + s) / (2.0 * s);
    double q = (1.0 - s) / (2.0 * s);
    KLResult r;
    r.eta = eta;
    r.bracket = p * std::log(p) - (q > 0.0 ? q * std::log(q) : 0.0);
    r.exponent_base = std::exp(r.bracket);
    return r;
}

namespace {

struct Objective {
    std::function<double(double)> second;  // second cosine argument
    double lo, hi;
};

OptimizeResult minimize(const Objective& ob, const OptimizeOptions& opt) {
    auto f = [&](double a) { return kl_exponent(a).exponent_base * kl_exponent(ob.second(a)).exponent_base; };
    double lo = ob.lo + opt.lo_shift, hi = ob.hi + opt.hi_shift;
    int n = opt.grid_points;
    std::vector<double> xs(static_cast<size_t>(n)), fs(static_cast<size_t>(n));
    OptimizeResult r;
    r.lo = lo;
    r.hi = hi;
    size_t best = 0;
    for (int i = 0; i < n; ++i) {
        // open at lo, closed at hi
        double a = lo + (hi - lo) * (i + 1) / n;
        xs[static_cast<size_t>(i)] = a;
        fs[static_cast<size_t>(i)] = f(a);
        r.max_second_arg = std::max(r.max_second_arg, ob.second(a));
        if (fs[static_cast<size_t>(i)] < fs[best]) best = static_cast<size_t>(i);
    }
    int minima = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        bool left = i == 0 || fs[i] < fs[i - 1];
        bool right = i + 1 == xs.size() || fs[i] <= fs[i + 1];
        minima += left && right;
    }
    r.unimodal = minima == 1;
    // golden section on the whole interval when unimodal, else on the bracket around the best grid point
    double a = r.unimodal ? lo : xs[best > 0 ? best - 1 : 0];
    double b = r.unimodal ? hi : xs[std::min(best + 1, xs.size() - 1)];
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > opt.tolerance) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    r.alpha_star = (a + b) / 2;
    r.base_S = kl_exponent(r.alpha_star).exponent_base;
    r.base_cluster = kl_exponent(ob.second(r.alpha_star)).exponent_base;
    r.product = r.base_S * r.base_cluster;
    return r;
}

}  // namespace

OptimizeResult optimize_genus2(const OptimizeOptions& opt) {
    return minimize({[](double a) { return 6.0 - 8.0 * a; }, 1.0 / std::sqrt(2.0), 0.75}, opt);
}

OptimizeResult optimize_general_genus(std::optional<int> g, const OptimizeOptions& opt) {
    if (!g) return minimize({[](double a) { return 2.0 - 4.0 * a; }, 0.25, 0.5}, opt);
    if (*g < 1) throw DomainError("genus must be positive");
    double gg = *g;
    double lo = std::max(1.0 / std::sqrt(gg), 0.25 + 0.75 / gg);
    double hi = 0.5 + 0.5 / gg;
    if (!(lo < hi)) throw EmptyInterval("alpha interval is empty for g = " + std::to_string(*g));
    return minimize({[gg](double a) { return (1.0 + 1.0 / gg - 2.0 * a) / (0.5 - 0.5 / gg); }, lo, hi}, opt);
}

}  // namespace g2
