#include "commands.hpp"

#include "g2/analytic.hpp"
#include "g2/constants.hpp"
#include "g2/errors.hpp"
#include "g2/family.hpp"
#include "g2/gap.hpp"
#include "g2/heights.hpp"
#include "g2/packing.hpp"
#include "g2/points.hpp"
#include "g2/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

namespace g2::cli {

using nlohmann::json;

std::array<long, 4> parse_curve(const std::string& spec) {
    std::array<long, 4> a{};
    std::stringstream ss(spec);
    std::string item;
    size_t n = 0;
    while (std::getline(ss, item, ',')) {
        if (n == 4) throw Error("curve needs four coefficients a2,a3,a4,a5: " + spec);
        size_t used = 0;
        try {
            a[n] = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw Error("bad coefficient '" + item + "' in " + spec);
        ++n;
    }
    if (n != 4) throw Error("curve needs four coefficients a2,a3,a4,a5: " + spec);
    return a;
}

long height_band(const std::array<long, 4>& a) {
    long k = 1;
    auto fits = [&](long k) {
        for (int i = 0; i < 4; ++i) {
            long double p = std::pow(static_cast<long double>(k), i + 2);
            if (static_cast<long double>(std::labs(a[static_cast<size_t>(i)])) > p) return false;
        }
        return true;
    };
    while (!fits(k)) ++k;
    return k;
}

namespace {

QuinticCurve curve_of(const std::string& spec) {
    auto a = parse_curve(spec);
    return make_curve(a[0], a[1], a[2], a[3]);
}

json point_json(const CurvePoint& p) {
    if (p.infinity) return {{"infinity", true}};
    return {{"s", p.s.get_str()}, {"e", p.e.get_str()}, {"t", p.t.get_str()}};
}

HeightOptions height_options(const RunConfig& cfg) {
    HeightOptions ho;
    ho.prec = static_cast<mpfr_prec_t>(cfg.precision_bits);
    ho.target_error = cfg.target_error;
    ho.c_arch = frozen_constants().c_arch;
    return ho;
}

json height_json(const CanonicalHeightResult& h) {
    json mu = json::object();
    for (const auto& [p, v] : h.prime_corrections) mu[p.get_str()] = v;
    return {{"value", h.value},          {"error_radius", h.error_radius},
            {"n_doublings", h.n_doublings}, {"naive", h.naive},
            {"mu_inf", h.archimedean_correction}, {"mu_p", mu}};
}

bool read_lines(const std::string& path, std::vector<std::string>& lines, bool& trailing_partial) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    trailing_partial = !all.empty() && all.back() != '\n';
    std::stringstream ss(all);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    if (trailing_partial) lines.pop_back();
    return true;
}

}  // namespace

int cmd_enumerate(const RunConfig& cfg) {
    cfg.validate();
    const std::string cmd = "enumerate";
    const std::string path = output_path(cfg, "curves.jsonl");
    std::optional<std::array<int64_t, 4>> last;
    bool resume = false;
    std::vector<std::string> lines;
    bool partial = false;
    if (read_lines(path, lines, partial) && !lines.empty()) {
        json h = json::parse(lines.front(), nullptr, false);
        if (!h.is_discarded() && h.value("config_hash", "") == cfg.hash(cmd)) {
            resume = true;
            if (partial) {
                uintmax_t keep = 0;
                for (const auto& l : lines) keep += l.size() + 1;
                std::filesystem::resize_file(path, keep);
            }
            if (lines.size() > 1) last = json::parse(lines.back()).at("a").get<std::array<int64_t, 4>>();
        }
    }
    OutputFile out(cfg, cmd, "curves.jsonl", OutputFile::Kind::jsonl, resume);
    uint64_t n = 0;
    CoeffPredicate pred;
    if (last) {
        auto l = *last;
        pred = [l](int64_t a2, int64_t a3, int64_t a4, int64_t a5) {
            return std::array<int64_t, 4>{a2, a3, a4, a5} > l;
        };
    }
    enumerate_family(
        cfg.T,
        [&](const QuinticCurve& c) {
            out.record({{"a", {c.a2.get_si(), c.a3.get_si(), c.a4.get_si(), c.a5.get_si()}},
                        {"disc", c.disc.get_str()},
                        {"H", c.H}});
            if (++n % 4096 == 0) out.flush();
        },
        pred);
    std::cout << "enumerate: " << n << " curves written to " << out.path() << (resume ? " (resumed)" : "") << '\n';
    return kPass;
}

int cmd_search(const RunConfig& cfg, const std::string& curve) {
    cfg.validate();
    auto c = curve_of(curve);
    auto pts = search_points(c, cfg.e_max, cfg.s_max);
    OutputFile out(cfg, "search", "points.jsonl", OutputFile::Kind::jsonl);
    for (const auto& p : pts) out.record({{"curve", c.key()}, {"point", point_json(p)}});
    std::cout << "search: " << pts.size() << " points on " << c.key() << '\n';
    return kPass;
}

int cmd_heights(const RunConfig& cfg, const std::string& curve) {
    cfg.validate();
    auto c = curve_of(curve);
    auto ho = height_options(cfg);
    auto pts = search_points(c, cfg.e_max, cfg.s_max);
    OutputFile out(cfg, "heights", "heights.jsonl", OutputFile::Kind::jsonl);
    for (const auto& p : pts) {
        auto h = canonical_height(c, kappa(p), ho);
        out.record({{"curve", c.key()}, {"point", point_json(p)}, {"height", height_json(h)}});
    }
    std::cout << "heights: " << pts.size() << " points on " << c.key() << '\n';
    return kPass;
}

int cmd_theta(const RunConfig& cfg, const std::string& curve) {
    cfg.validate();
    auto c = curve_of(curve);
    auto prec = static_cast<mpfr_prec_t>(cfg.precision_bits);
    auto rd = compute_periods(c, prec);
    PrecisionScope ps(prec);
    json doc;
    doc["curve"] = c.key();
    doc["riemann"] = json::parse(riemann_json(rd));
    doc["chi_infinity"] = find_chi_infinity(rd, c).str();
    json crho = json::array();
    for (int b = 0; b < 5; ++b) crho.push_back(c_rho(rd, c, b, default_auxiliary_root(rd, c, b)));
    doc["c_rho"] = crho;
    CVec2 zero;
    zero[0] = Complex::with_prec(0.0, 0.0, prec);
    zero[1] = Complex::with_prec(0.0, 0.0, prec);
    json consts = json::object();
    for (const auto& ch : even_characteristics())
        consts[ch.str()] = std::log10(abs(theta(ch, zero, rd.tau, prec)).to_double());
    doc["log10_even_theta_constants"] = consts;
    if (i4_degenerate(c, prec)) {
        doc["i3_ratio"] = nullptr;
    } else {
        doc["i3_ratio"] = (igusa_i3_roots(c, prec) / igusa_i3_thetas(rd)).re().to_double();
    }
    doc["im_tau1_excess"] = im_tau1_excess(rd, c);
    OutputFile out(cfg, "theta", "theta.json", OutputFile::Kind::json);
    out.document(doc);
    std::cout << "theta: Riemann data for " << c.key() << " written to " << out.path() << '\n';
    return kPass;
}

int cmd_gap(const RunConfig& cfg, const std::string& curve) {
    cfg.validate();
    auto c = curve_of(curve);
    auto ho = height_options(cfg);
    auto pts = search_points(c, cfg.e_max, cfg.s_max);
    std::optional<RiemannData> rd;
    if (cfg.theta_enabled) rd = compute_periods(c, static_cast<mpfr_prec_t>(cfg.precision_bits));
    ClassifyOptions co;
    co.delta = cfg.delta;
    co.want_cell = rd.has_value();
    co.height = ho;
    OutputFile out(cfg, "gap", "gap.jsonl", OutputFile::Kind::jsonl);
    std::vector<LabeledPoint> labeled;
    for (const auto& p : pts) {
        if (p.infinity) continue;
        auto h = canonical_height(c, p, ho);
        auto lab = classify(c, p, co, rd ? &*rd : nullptr, &h);
        labeled.push_back({p, lab, h});
        out.record({{"type", "point"}, {"point", point_json(p)}, {"label", lab.key()}, {"height", h.value}});
    }
    GapOptions go;
    go.delta = cfg.delta;
    go.height = ho;
    auto rep = verify_gap_pairs(c, labeled, go);
    json r = json::parse(rep.json());
    r["type"] = "report";
    out.record(r);
    std::cout << "gap: " << labeled.size() << " points, " << rep.pairs.size() << " qualifying pairs, "
              << rep.violations << " violations" << (rep.vacuous ? " (vacuous)" : "") << '\n';
    return rep.violations == 0 ? kPass : kViolation;
}

int cmd_packing(const RunConfig& cfg) {
    cfg.validate();
    json doc;
    json kl = json::array();
    for (double eta : {0.0, 0.5, 0.6334, 39.0 / 59.0, 64.0 / 95.0, 0.75}) {
        auto r = kl_exponent(eta);
        kl.push_back({{"eta", eta}, {"bracket", r.bracket}, {"base", r.exponent_base}});
    }
    doc["kl"] = kl;
    auto to_json = [](const OptimizeResult& r) {
        return json{{"alpha_star", r.alpha_star}, {"base_S", r.base_S},     {"base_cluster", r.base_cluster},
                    {"product", r.product},       {"lo", r.lo},             {"hi", r.hi},
                    {"max_second_arg", r.max_second_arg}, {"unimodal", r.unimodal}};
    };
    auto g2r = optimize_genus2();
    doc["genus2"] = to_json(g2r);
    json gen = json::array();
    for (std::optional<int> g : {std::optional<int>(2), std::optional<int>(3), std::optional<int>(4),
                                 std::optional<int>(5), std::optional<int>(10), std::optional<int>(100),
                                 std::optional<int>()}) {
        auto j = to_json(optimize_general_genus(g));
        j["g"] = g ? json(*g) : json("infinity");
        gen.push_back(j);
    }
    doc["general"] = gen;
    OutputFile out(cfg, "packing", "packing.json", OutputFile::Kind::json);
    out.document(doc);
    std::printf("packing: genus 2 alpha* = %.6f, product = %.6f; g = infinity product = %.6f\n", g2r.alpha_star,
                g2r.product, gen.back()["product"].get<double>());
    return kPass;
}

int cmd_survey(const RunConfig& cfg) {
    cfg.validate();
    std::vector<std::array<long, 4>> curves;
    enumerate_family(cfg.T, [&](const QuinticCurve& c) {
        curves.push_back({c.a2.get_si(), c.a3.get_si(), c.a4.get_si(), c.a5.get_si()});
    });
    std::vector<long> counts(curves.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (size_t i = 0; i < curves.size(); ++i) {
        const auto& a = curves[i];
        auto c = make_curve(a[0], a[1], a[2], a[3]);
        counts[i] = static_cast<long>(search_points(c, cfg.e_max, cfg.s_max).size());
    }
    struct Band {
        long curves = 0, total = 0, max = 0;
    };
    std::map<long, Band> bands;
    Band all;
    {
        OutputFile per(cfg, "survey", "survey_curves.jsonl", OutputFile::Kind::jsonl);
        for (size_t i = 0; i < curves.size(); ++i) {
            long b = height_band(curves[i]);
            per.record({{"a", curves[i]}, {"band", b}, {"points_found", counts[i]}});
            for (Band* x : {&bands[b], &all}) {
                ++x->curves;
                x->total += counts[i];
                x->max = std::max(x->max, counts[i]);
            }
        }
    }
    OutputFile sum(cfg, "survey", "summary.csv", OutputFile::Kind::csv);
    sum.csv_header("T_band,curves,avg_points,max_points");
    auto line = [&](const std::string& label, const Band& b) {
        char buf[128];
        double avg = b.curves ? static_cast<double>(b.total) / static_cast<double>(b.curves) : 0.0;
        std::snprintf(buf, sizeof buf, "%s,%ld,%.6f,%ld", label.c_str(), b.curves, avg, b.max);
        sum.row(buf);
    };
    for (const auto& [k, b] : bands) line(std::to_string(k), b);
    line("all", all);
    std::cout << "survey: " << curves.size() << " curves, average points found "
              << (all.curves ? static_cast<double>(all.total) / static_cast<double>(all.curves) : 0.0)
              << " (lower bound for #C(Q))\n";
    return kPass;
}

int cmd_calibrate(const RunConfig& cfg, const CalibrateArgs& args) {
    cfg.validate();
    std::string corpus_path = args.corpus.empty() ? std::string(G2_DATA_DIR) + "/calibration_corpus.json" : args.corpus;
    auto corpus = load_corpus(corpus_path);
    CalibrationOptions opt;
    if (args.precision_bits) opt.prec = static_cast<mpfr_prec_t>(*args.precision_bits);
    auto fresh = calibrate(corpus, opt);
    std::filesystem::create_directories(cfg.output_dir);
    std::string path = output_path(cfg, "frozen_constants.json");
    save_constants(fresh, path);
    {
        std::ifstream in(path);
        json j;
        in >> j;
        OutputFile out(cfg, "calibrate", "frozen_constants.json", OutputFile::Kind::json);
        j["corpus"] = corpus_path;
        out.document(j);
    }
    std::cout << "calibrate: wrote " << path << '\n';
    if (!args.compare) return kPass;
    auto frozen = load_constants(*args.compare);
    bool ok = true;
    json drift = json::object();
    for (const auto& [name, d] : constant_drift(frozen, fresh)) {
        drift[name] = d;
        bool pass = d <= 0.1;
        ok = ok && pass;
        std::printf("  %-9s drift %.3e %s\n", name.c_str(), d, pass ? "ok" : "EXCEEDS 10%");
    }
    OutputFile out(cfg, "calibrate", "calibrate_drift.json", OutputFile::Kind::json);
    out.document({{"compared_with", *args.compare}, {"drift", drift}, {"pass", ok}});
    std::cout << "calibrate: drift " << (ok ? "within" : "beyond") << " 10%\n";
    return ok ? kPass : kViolation;
}

int cmd_verify(const RunConfig& cfg, const VerifyArgs& args) {
    cfg.validate();
    auto c = curve_of(args.curve);
    VerifyOptions opt;
    opt.prec = static_cast<mpfr_prec_t>(cfg.precision_bits);
    opt.target_error = cfg.target_error;
    opt.delta = cfg.delta;
    opt.e_max = cfg.e_max;
    opt.s_max = cfg.s_max;
    opt.theta = cfg.theta_enabled;
    opt.seed = cfg.seed;
    opt.inject_delta_fault = args.inject_delta_fault;
    auto rep = verify_curve(c, opt);
    OutputFile out(cfg, "verify", "verify.json", OutputFile::Kind::json);
    json doc = json::parse(rep.json());
    doc["inject_delta_fault"] = args.inject_delta_fault;
    out.document(doc);
    for (const auto& s : rep.sections) {
        std::cout << s.name << ": " << (s.pass() ? "PASS" : "FAIL") << (s.vacuous() ? " (vacuous)" : "") << '\n';
        for (const auto& ch : s.checks)
            std::cout << "  " << (ch.pass ? "ok  " : "FAIL") << ' ' << ch.name << (ch.vacuous ? " [vacuous]" : "")
                      << (ch.detail.empty() ? "" : ": " + ch.detail) << '\n';
    }
    std::cout << "verify " << c.key() << ": " << (rep.pass() ? "PASS" : "FAIL") << '\n';
    return rep.pass() ? kPass : kViolation;
}

}  // namespace g2::cli
