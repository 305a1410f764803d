#pragma once

#include "g2/analytic.hpp"
#include "g2/heights.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace g2 {

inline constexpr double kCUp = 25.0 / 3.0;
inline constexpr double kCDown = 8.0;
inline constexpr double kBigPointBound = 0.6334;
inline constexpr double kNormalPointBound = 0.6737;

enum class PointClass { I, II, III };
enum class Arrow { up, bullet, down };
enum class RhoTag { alpha_star, beta_star };

const char* to_string(PointClass c);
const char* to_string(Arrow a);
const char* to_string(RhoTag r);

struct PartitionLabel {
    PointClass cls = PointClass::III;
    Arrow arrow = Arrow::bullet;
    std::optional<std::array<int, 4>> cell;
    RhoTag rho = RhoTag::alpha_star;
    // Band indices with base 1 + delta; empty when a ratio is undefined (zero heights).
    std::optional<int> i;
    std::optional<int> j;  // unused for class III

    std::string key() const;
};
bool operator==(const PartitionLabel& a, const PartitionLabel& b);

// Thresholds for one (curve, delta).
struct GapThresholds {
    double delta = 0.25;
    int N = 4;                 // cell mesh 1/(2N)
    bool exact = false;        // delta = 1/m, compared in integers
    long m = 4;                // 1/delta when exact
    double log_x_big = 0.0;    // log(delta^{-1/delta} H(f))
    double log_x_small = 0.0;  // log(delta^{1/delta} H(f))
    double h_f = 0.0;
};
GapThresholds gap_thresholds(const QuinticCurve& c, double delta);

// The six printed sets, evaluated independently of one another.
struct Membership {
    bool I_up = false, I_down = false, II_up = false, II_bullet = false, II_down = false, III = false;
    int count() const { return I_up + I_down + II_up + II_bullet + II_down + III; }
};
Membership membership(const QuinticCurve& c, const CurvePoint& P, const GapThresholds& t);

struct ClassifyOptions {
    double delta = 0.25;
    bool want_cell = true;
    HeightOptions height;
};

// Throws InfinityPoint for the point at infinity and MissingAnalytic if a cell is requested without rd.
PartitionLabel classify(const QuinticCurve& c, const CurvePoint& P, const ClassifyOptions& opt = {},
                        const RiemannData* rd = nullptr, const CanonicalHeightResult* h = nullptr);

// Cell of a lift Z in the fundamental parallelepiped; coordinates on the boundary snap toward -1/2.
std::array<int, 4> cell_of(const CVec2& Z, const CMat2& tau, int N);

struct LabeledPoint {
    CurvePoint P;
    PartitionLabel label;
    CanonicalHeightResult height;
};

struct PairRecord {
    std::string label;
    std::string lemma;  // "big" or "normal"
    std::string p, q;
    double cos_value = 0.0;
    double cos_error = 0.0;
    double bound = 0.0;
    double margin = 0.0;  // bound + slack - cos
    bool violation = false;
    bool fabricated = false;
};

struct LabelSummary {
    std::string label;
    int points = 0;
    int pairs = 0;
    double min_margin = 0.0;
    bool vacuous = true;
};

struct GapReport {
    double delta = 0.25;
    double slack = 2.5;
    std::vector<PairRecord> pairs;
    std::vector<LabelSummary> labels;
    int excluded_opposite = 0;  // P = -Q
    int excluded_sign = 0;      // y < 0 in the big-point case
    int excluded_torsion = 0;
    int excluded_class = 0;     // class I or III
    bool vacuous = true;
    int violations = 0;

    std::string json() const;
};

struct GapOptions {
    double delta = 0.25;
    double slack_factor = 10.0;
    HeightOptions height;
    // Extra fabricated pairs for the harness self-test: (label, cos value).
    std::vector<std::pair<std::string, double>> inject;
};

PairRecord judge_pair(const std::string& label, const std::string& lemma, double cos_value, double cos_error,
                      double slack);
GapReport verify_gap_pairs(const QuinticCurve& c, const std::vector<LabeledPoint>& pts, const GapOptions& opt = {});

using Gram = std::vector<std::vector<double>>;

// Gram matrix of canonical-height pairings <P, Q> = (h(P+Q) - h(P) - h(Q)) / 2.
Gram pairing_gram(const QuinticCurve& c, const std::vector<CurvePoint>& pts, const HeightOptions& opt = {});

bool is_psd(const Gram& g, double tol = 1e-9);
double gram_cos(const Gram& g, size_t i, size_t j);

struct SubsetResult {
    std::vector<size_t> selected;  // ascending
    std::vector<size_t> zero;      // indices with vanishing norm, never selected
};
// Candidates are visited by increasing norm, ties by lowest index.
SubsetResult greedy_separated_subset(const Gram& g, double alpha, double tol = 1e-12);
// Brute-force check: S pairwise separated and every other nonzero index blocked by S.
bool audit_maximal(const Gram& g, double alpha, const std::vector<size_t>& S, double tol = 1e-12);

struct ClusterAudit {
    size_t removed = 0;
    std::vector<size_t> members;
    double max_inner = 0.0;  // largest <v_P, v_P'> over the remaining pairs
    double threshold = 0.0;  // -2 delta^{1/2} + slack * delta
    bool pass = true;
    bool vacuous = false;
    int remaining = 0;
    int outside = 0;  // members with cos(P, Q) <= alpha, left out of the cluster
    double count_bound = 0.0;  // from 0 <= |sum v_P/|v_P||^2, plus the removed element
    double printed_scale = 0.0;  // delta^{-1/2}
    int violations = 0;
};
// members: indices other than the center q; throws DegenerateGram when a norm is at most tol.
ClusterAudit cluster_repulsion_audit(const Gram& g, size_t q, const std::vector<size_t>& members, double alpha,
                                     double delta, double slack_factor = 10.0, double tol = 1e-12);

}  // namespace g2
