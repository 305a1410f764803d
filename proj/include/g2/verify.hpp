#pragma once

#include "g2/family.hpp"
#include "g2/kummer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace g2 {

struct Check {
    std::string name;
    bool pass = true;
    bool vacuous = false;
    std::string detail;
};

struct Section {
    std::string name;
    std::vector<Check> checks;

    bool pass() const;
    bool vacuous() const;  // every check vacuous
    void add(std::string name, bool pass, std::string detail = {}, bool vacuous = false);
};

struct VerifyOptions {
    mpfr_prec_t prec = 256;
    double target_error = 1e-8;
    double delta = 0.25;
    long e_max = 6;
    long s_max = 200;
    bool theta = true;
    uint64_t seed = 1;
    int max_points = 8;  // points carried into the height and analytic sections
    bool inject_delta_fault = false;
};

struct VerifyReport {
    std::string curve;
    std::vector<Section> sections;

    bool pass() const;
    std::string json() const;
};

// Expected term counts and coefficient sums of the four duplication forms.
DeltaChecksum expected_delta_checksum();
// Copy of the duplication table with one coefficient altered, for the harness self-test.
std::vector<DeltaTerm> faulted_delta_terms();

VerifyReport verify_curve(const QuinticCurve& c, const VerifyOptions& opt = {});

}  // namespace g2
