#include "commands.hpp"

#include "g2/errors.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

using namespace g2::cli;

namespace {

void add_config_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--precision_bits", cfg.precision_bits, "Working precision in bits")->capture_default_str();
    sub->add_option("--target_error", cfg.target_error, "Target error for canonical heights")->capture_default_str();
    sub->add_option("--delta", cfg.delta, "Gap parameter delta")->capture_default_str();
    sub->add_option("--T", cfg.T, "Family height cutoff")->capture_default_str();
    sub->add_option("--e_max", cfg.e_max, "Search bound on e")->capture_default_str();
    sub->add_option("--s_max", cfg.s_max, "Search bound on |s|")->capture_default_str();
    sub->add_option("--theta_enabled", cfg.theta_enabled, "Use theta functions where optional")->capture_default_str();
    sub->add_option("--output_dir", cfg.output_dir, "Directory for result files")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus-2 heights, gap principle and packing bounds"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string curve;
    CalibrateArgs cal;
    std::string compare;
    long cal_prec = 0;
    VerifyArgs ver;
    std::function<int()> run;

    auto with_curve = [&](const char* name, const char* help, int (*fn)(const RunConfig&, const std::string&)) {
        auto* s = app.add_subcommand(name, help);
        add_config_flags(s, cfg);
        s->add_option("--curve", curve, "Coefficients a2,a3,a4,a5")->required();
        s->callback([&, fn] { run = [&, fn] { return fn(cfg, curve); }; });
    };

    auto* en = app.add_subcommand("enumerate", "Stream the family |a_i| <= T^i to curves.jsonl");
    add_config_flags(en, cfg);
    en->callback([&] { run = [&] { return cmd_enumerate(cfg); }; });

    with_curve("search", "Rational points in the box e <= e_max, |s| <= s_max", cmd_search);
    with_curve("heights", "Canonical heights of the searched points", cmd_heights);
    with_curve("theta", "Riemann matrix, characteristics and theta constants", cmd_theta);
    with_curve("gap", "Partition labels and gap-principle pair report", cmd_gap);

    auto* pk = app.add_subcommand("packing", "Kabatiansky-Levenshtein exponents and optimized point bounds");
    add_config_flags(pk, cfg);
    pk->callback([&] { run = [&] { return cmd_packing(cfg); }; });

    auto* sv = app.add_subcommand("survey", "Point counts over the family, summarized per height band");
    add_config_flags(sv, cfg);
    sv->callback([&] { run = [&] { return cmd_survey(cfg); }; });

    auto* ca = app.add_subcommand("calibrate", "Recompute the frozen constants from the calibration corpus");
    add_config_flags(ca, cfg);
    ca->add_option("--corpus", cal.corpus, "Calibration corpus (JSON)");
    auto* cmp = ca->add_option("--compare", compare, "Frozen constants file to compare against");
    auto* cp = ca->add_option("--calibration_bits", cal_prec, "Precision for the period computations");
    ca->callback([&, cmp, cp] {
        if (cmp->count()) cal.compare = compare;
        if (cp->count()) cal.precision_bits = cal_prec;
        run = [&] { return cmd_calibrate(cfg, cal); };
    });

    auto* vf = app.add_subcommand("verify", "Run every invariant suite on one curve");
    add_config_flags(vf, cfg);
    vf->add_option("--curve", ver.curve, "Coefficients a2,a3,a4,a5")->required();
    vf->add_flag("--inject_delta_fault", ver.inject_delta_fault, "Alter one duplication coefficient");
    vf->callback([&] { run = [&] { return cmd_verify(cfg, ver); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        return run();
    } catch (const g2::PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << '\n';
        return kPrecision;
    } catch (const g2::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kViolation;
    } catch (const g2::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
