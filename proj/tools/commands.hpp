#pragma once

#include "run_config.hpp"

#include <array>
#include <optional>
#include <string>

namespace g2::cli {

enum ExitCode { kPass = 0, kUsage = 1, kViolation = 2, kPrecision = 3 };

// "a2,a3,a4,a5"
std::array<long, 4> parse_curve(const std::string& spec);

// Smallest integer k >= 1 with |a_i| <= k^i for i = 2..5.
long height_band(const std::array<long, 4>& a);

// curves.jsonl; resumes after the last complete record when the header hash matches.
int cmd_enumerate(const RunConfig& cfg);
// points.jsonl for one curve.
int cmd_search(const RunConfig& cfg, const std::string& curve);
// heights.jsonl: canonical height of every searched point.
int cmd_heights(const RunConfig& cfg, const std::string& curve);
// theta.json: Riemann matrix, characteristic table, c_rho and Igusa data.
int cmd_theta(const RunConfig& cfg, const std::string& curve);
// gap.jsonl: partition labels and the pair report; exit 2 on a violation.
int cmd_gap(const RunConfig& cfg, const std::string& curve);
// packing.json: KL anchors and optimizations for several genera.
int cmd_packing(const RunConfig& cfg);
// survey_curves.jsonl with per-curve counts and summary.csv per height band.
int cmd_survey(const RunConfig& cfg);

struct CalibrateArgs {
    std::string corpus;                 // defaults to the bundled corpus
    std::optional<std::string> compare;  // frozen file to compare against; drift > 10% fails
    std::optional<long> precision_bits;
};
int cmd_calibrate(const RunConfig& cfg, const CalibrateArgs& args);

struct VerifyArgs {
    std::string curve;
    bool inject_delta_fault = false;
};
int cmd_verify(const RunConfig& cfg, const VerifyArgs& args);

}  // namespace g2::cli
