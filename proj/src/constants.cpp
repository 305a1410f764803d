#include "g2/constants.hpp"

#include "g2/errors.hpp"
#include "g2/heights.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

namespace g2 {

const FrozenConstants& frozen_constants() {
    static const FrozenConstants c = [] {
        FrozenConstants f;
        f.c_arch = 9.644003757268509;
        f.c_xi = 2.324296296141296;
        f.c_asym = 4.7124502223020155;
        f.i3_ratio = 3.796875;
        f.c_fit = 3.4959526825582827;
        f.c_disc = 6672896.00000001;
        f.provenance =
            "g2 calibrate: seed 1, 12 corpus curves at 128 bits, 1000 archimedean samples, family T <= 2 for "
            "c_disc, margin 2.000000";
        return f;
    }();
    return c;
}

namespace {

const char* const kFields[] = {"c_arch", "c_xi", "c_asym", "i3_ratio", "c_fit", "c_disc"};

double field(const FrozenConstants& c, const std::string& name) {
    if (name == "c_arch") return c.c_arch;
    if (name == "c_xi") return c.c_xi;
    if (name == "c_asym") return c.c_asym;
    if (name == "i3_ratio") return c.i3_ratio;
    if (name == "c_fit") return c.c_fit;
    return c.c_disc;
}

}  // namespace

FrozenConstants load_constants(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open constants file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed constants file " + path + ": " + e.what());
    }
    FrozenConstants c;
    try {
        c.version = j.at("version").get<int>();
        const auto& v = j.at("constants");
        c.c_arch = v.at("c_arch").get<double>();
        c.c_xi = v.at("c_xi").get<double>();
        c.c_asym = v.at("c_asym").get<double>();
        c.i3_ratio = v.at("i3_ratio").get<double>();
        c.c_fit = v.at("c_fit").get<double>();
        c.c_disc = v.at("c_disc").get<double>();
        c.provenance = j.value("provenance", "");
    } catch (const nlohmann::json::exception& e) {
        throw Error("constants file " + path + " fails the schema: " + e.what());
    }
    return c;
}

void save_constants(const FrozenConstants& c, const std::string& path) {
    nlohmann::json j;
    j["version"] = c.version;
    j["provenance"] = c.provenance;
    nlohmann::json v;
    for (const char* f : kFields) v[f] = field(c, f);
    j["constants"] = v;
    std::ofstream out(path);
    if (!out) throw Error("cannot write constants file " + path);
    out << j.dump(2) << '\n';
}

std::vector<std::pair<std::string, double>> constant_drift(const FrozenConstants& frozen, const FrozenConstants& fresh) {
    std::vector<std::pair<std::string, double>> out;
    for (const char* f : kFields) {
        double a = field(frozen, f), b = field(fresh, f);
        double scale = std::max(std::fabs(a), 1e-300);
        out.emplace_back(f, std::fabs(b - a) / scale);
    }
    return out;
}

CalibrationCorpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("calibration corpus not found: " + path);
    CalibrationCorpus c;
    try {
        nlohmann::json j;
        in >> j;
        c.seed = j.at("seed").get<uint64_t>();
        for (const auto& row : j.at("curves")) c.curves.push_back(row.get<std::array<long, 4>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed calibration corpus " + path + ": " + e.what());
    }
    if (c.curves.empty()) throw Error("calibration corpus " + path + " has no curves");
    return c;
}

double calibrate_c_arch(uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    int n = 0;
    while (n < samples) {
        double T = static_cast<double>(1 + rng() % 4);
        auto b = family_bounds(T);
        auto r = [&](int64_t B) { return static_cast<long>(rng() % static_cast<uint64_t>(2 * B + 1)) - B; };
        QuinticCurve c;
        try {
            c = make_curve(r(b[0]), r(b[1]), r(b[2]), r(b[3]));
        } catch (const SingularCurve&) {
            continue;
        }
        std::uniform_real_distribution<double> ux(-3 * c.H, 3 * c.H);
        double x = ux(rng);
        std::array<double, 4> K{0, 1, x, x * x};
        auto a = c.coeffs();
        for (int s = 0; s < 4; ++s) {
            worst = std::max(worst, std::fabs(archimedean_step(c, K)) - 12 * c.h());
            PrecisionScope ps(128);
            std::array<Real, 4> ar{Real(a[0]), Real(a[1]), Real(a[2]), Real(a[3])};
            std::array<Real, 4> kr{Real(K[0]), Real(K[1]), Real(K[2]), Real(K[3])};
            auto d = delta_real(ar, kr);
            Real m = max(max(abs(d[0]), abs(d[1])), max(abs(d[2]), abs(d[3])));
            for (size_t i = 0; i < 4; ++i) K[i] = (d[i] / m).to_double();
        }
        ++n;
    }
    return worst;
}

double max_disc_ratio(double T) {
    double worst = 0.0;
    enumerate_family(T, [&](const QuinticCurve& c) {
        double r = std::exp(std::log(std::fabs(c.delta.get_d())) - 20 * std::log(c.H));
        worst = std::max(worst, r);
    });
    return worst;
}

bool i4_degenerate(const QuinticCurve& c, mpfr_prec_t prec) {
    PrecisionScope scope(prec);
    const auto& r = c.roots(prec);
    double m = 1.0;
    for (const auto& z : r) m = std::max(m, abs(z).to_double());
    double i4 = abs(igusa_i4(r)).to_double();
    return i4 < std::ldexp(1.0, -static_cast<int>(prec) / 2) * std::pow(m, 8);
}

double im_tau1_excess(const RiemannData& rd, const QuinticCurve& c) {
    double y1 = rd.tau(0, 0).im().to_double();
    double ld = std::log(std::fabs(c.delta.get_d()));
    return y1 - 10.0 / M_PI * c.h() + ld / (3.0 * M_PI);
}

double max_xi(const RiemannData& rd, uint64_t seed, int samples, mpfr_prec_t prec) {
    PrecisionScope scope(prec);
    CMat2 tau;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) tau(i, j) = rd.tau(i, j).rounded(prec);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    const auto& chars = all_characteristics();
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        std::array<Real, 2> a{Real::with_prec(u(rng), prec), Real::with_prec(u(rng), prec)};
        std::array<Real, 2> b{Real::with_prec(u(rng), prec), Real::with_prec(u(rng), prec)};
        CVec2 Z = from_lattice_coordinates(a, b, tau);
        for (const auto& ch : chars) worst = std::max(worst, xi(ch, Z, tau, prec).to_double());
    }
    return worst;
}

double max_asym_ratio(const RiemannData& rd, uint64_t seed, int samples) {
    mpfr_prec_t prec = rd.precision_bits;
    PrecisionScope scope(prec);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.01, 0.01);
    const ThetaChar classes[3] = {{{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}, {{1, 1}, {0, 0}}};
    double worst = 1.0;
    for (const auto& ch : classes)
        for (int s = 0; s < samples; ++s) {
            std::array<Real, 2> a{Real::with_prec(u(rng), prec), Real::with_prec(u(rng), prec)};
            std::array<Real, 2> b{Real::with_prec(u(rng), prec), Real::with_prec(u(rng), prec)};
            double r = near_zero_ratio(ch, from_lattice_coordinates(a, b, rd.tau), rd.tau, prec);
            worst = std::max({worst, r, 1.0 / r});
        }
    return worst;
}

FrozenConstants calibrate(const CalibrationCorpus& corpus, const CalibrationOptions& opt) {
    FrozenConstants out;
    out.c_arch = opt.margin * calibrate_c_arch(corpus.seed, opt.arch_samples);
    out.c_disc = opt.margin * max_disc_ratio(opt.disc_T);
    double xi_max = 0.0, asym = 1.0, fit = -1e300, ratio_sum = 0.0;
    uint64_t k = 0;
    int ratio_n = 0;
    for (const auto& co : corpus.curves) {
        auto c = make_curve(co[0], co[1], co[2], co[3]);
        auto rd = compute_periods(c, opt.prec);
        xi_max = std::max(xi_max, max_xi(rd, corpus.seed + k, opt.xi_samples, opt.xi_prec));
        asym = std::max(asym, max_asym_ratio(rd, corpus.seed + k, opt.asym_samples));
        fit = std::max(fit, im_tau1_excess(rd, c));
        if (!i4_degenerate(c, opt.prec)) {
            ratio_sum += (igusa_i3_roots(c, opt.prec) / igusa_i3_thetas(rd)).re().to_double();
            ++ratio_n;
        }
        ++k;
    }
    out.c_xi = opt.margin * xi_max;
    out.c_asym = opt.margin * asym;
    out.c_fit = fit + (opt.margin - 1.0);
    out.i3_ratio = ratio_n > 0 ? ratio_sum / ratio_n : 0.0;
    out.provenance = "g2 calibrate: seed " + std::to_string(corpus.seed) + ", " +
                     std::to_string(corpus.curves.size()) + " corpus curves at " + std::to_string(opt.prec) +
                     " bits, " + std::to_string(opt.arch_samples) + " archimedean samples, family T <= " +
                     std::to_string(static_cast<int>(opt.disc_T)) + " for c_disc, margin " +
                     std::to_string(opt.margin);
    return out;
}

}  // namespace g2
