#include "doctest.h"

#include "commands.hpp"
#include "g2/errors.hpp"
#include "g2/family.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace g2;
using namespace g2::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("g2_cli_" + name)) {
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::vector<std::string> lines_of(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

RunConfig config_in(const TempDir& d, double T = 1.0) {
    RunConfig c;
    c.output_dir = d.path.string();
    c.T = T;
    return c;
}

}  // namespace

TEST_CASE("curve specs and height bands") {
    CHECK(parse_curve("0,0,0,1") == std::array<long, 4>{0, 0, 0, 1});
    CHECK(parse_curve("-3,8,-58,117") == std::array<long, 4>{-3, 8, -58, 117});
    CHECK_THROWS_AS(parse_curve("0,0,0"), Error);
    CHECK_THROWS_AS(parse_curve("0,0,0,1,2"), Error);
    CHECK_THROWS_AS(parse_curve("0,x,0,1"), Error);
    CHECK(height_band({0, 0, 0, 1}) == 1);
    CHECK(height_band({4, 0, 0, 1}) == 2);
    CHECK(height_band({5, 0, 0, 1}) == 3);
    CHECK(height_band({0, 0, 0, 33}) == 3);
}

TEST_CASE("run config validation and hashing") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    auto h = c.hash("survey");
    CHECK(h.size() == 16);
    CHECK(h == RunConfig{}.hash("survey"));
    CHECK(h != c.hash("enumerate"));
    RunConfig moved = c;
    moved.output_dir = "/elsewhere";
    CHECK(moved.hash("survey") == h);
    RunConfig other = c;
    other.seed = 2;
    CHECK(other.hash("survey") != h);
    using Mutate = void (*)(RunConfig&);
    for (Mutate bad : {+[](RunConfig& r) { r.precision_bits = 0; }, +[](RunConfig& r) { r.target_error = -1; },
                     +[](RunConfig& r) { r.delta = 1.5; }, +[](RunConfig& r) { r.T = 0; },
                     +[](RunConfig& r) { r.e_max = 0; }, +[](RunConfig& r) { r.seed = 0; }}) {
        RunConfig r;
        bad(r);
        CHECK_THROWS_AS(r.validate(), Error);
    }
}

TEST_CASE("enumerate writes the family with a config header") {
    TempDir d("enum");
    CHECK(cmd_enumerate(config_in(d, 1.0)) == kPass);
    auto lines = lines_of(d.path / "curves.jsonl");
    REQUIRE(lines.size() == 71);
    auto header = nlohmann::json::parse(lines[0]);
    CHECK(header["type"] == "header");
    CHECK(header["config_hash"] == config_in(d).hash("enumerate"));
    for (size_t i = 1; i < lines.size(); ++i) CHECK(nlohmann::json::parse(lines[i])["config_hash"] == header["config_hash"]);
    CHECK(fs::exists(d.path / "curves.jsonl.meta.json"));

    TempDir e("enum_empty");
    CHECK(cmd_enumerate(config_in(e, 0.5)) == kPass);
    CHECK(lines_of(e.path / "curves.jsonl").size() == 1);
}

TEST_CASE("enumerate at T = 2 matches a direct count") {
    TempDir d("enum2");
    CHECK(cmd_enumerate(config_in(d, 2.0)) == kPass);
    auto n = lines_of(d.path / "curves.jsonl").size() - 1;
    CHECK(n == count_family_reference(2.0).nonsingular);
    CHECK(n == 327792);
}

TEST_CASE("enumerate resumes after a truncated record") {
    TempDir d("resume");
    auto cfg = config_in(d, 1.0);
    cmd_enumerate(cfg);
    auto full = slurp(d.path / "curves.jsonl");
    auto cut = full.substr(0, full.size() - 150);
    {
        std::ofstream out(d.path / "curves.jsonl", std::ios::binary | std::ios::trunc);
        out << cut;
    }
    CHECK(cmd_enumerate(cfg) == kPass);
    CHECK(slurp(d.path / "curves.jsonl") == full);

    RunConfig other = cfg;
    other.seed = 7;
    CHECK(cmd_enumerate(other) == kPass);
    auto lines = lines_of(d.path / "curves.jsonl");
    CHECK(lines.size() == 71);
    CHECK(nlohmann::json::parse(lines[0])["config_hash"] == other.hash("enumerate"));
}

TEST_CASE("survey is deterministic and counts x^5 + 1 correctly") {
    TempDir a("survey_a"), b("survey_b");
    auto ca = config_in(a), cb = config_in(b);
    for (auto* c : {&ca, &cb}) {
        c->e_max = 4;
        c->s_max = 60;
    }
    CHECK(cmd_survey(ca) == kPass);
    CHECK(cmd_survey(cb) == kPass);
    CHECK(slurp(a.path / "summary.csv") == slurp(b.path / "summary.csv"));
    CHECK(slurp(a.path / "survey_curves.jsonl") == slurp(b.path / "survey_curves.jsonl"));
    bool seen = false;
    for (const auto& l : lines_of(a.path / "survey_curves.jsonl")) {
        auto j = nlohmann::json::parse(l);
        if (j.contains("a") && j["a"] == std::array<long, 4>{0, 0, 0, 1}) {
            CHECK(j["points_found"].get<long>() >= 4);
            seen = true;
        }
    }
    CHECK(seen);
    auto csv = lines_of(a.path / "summary.csv");
    REQUIRE(csv.size() == 3);
    CHECK(csv[0] == "T_band,curves,avg_points,max_points,config_hash");
    std::stringstream row(csv[2]);
    std::string band, curves, avg;
    std::getline(row, band, ',');
    std::getline(row, curves, ',');
    std::getline(row, avg, ',');
    CHECK(band == "all");
    CHECK(curves == "70");
    CHECK(std::stod(avg) >= 1.0);
}

TEST_CASE("calibrate reports a missing corpus") {
    TempDir d("cal");
    CalibrateArgs args;
    args.corpus = (d.path / "missing.json").string();
    CHECK_THROWS_WITH_AS(cmd_calibrate(config_in(d), args), doctest::Contains("corpus not found"), Error);
}

TEST_CASE("verify passes on x^5 + 1 and catches an injected delta fault") {
    TempDir d("verify");
    auto cfg = config_in(d);
    VerifyArgs args{"0,0,0,1", false};
    CHECK(cmd_verify(cfg, args) == kPass);
    auto rep = nlohmann::json::parse(slurp(d.path / "verify.json"));
    bool vacuous_gap = false;
    for (const auto& s : rep["sections"])
        if (s["name"] == "gap")
            for (const auto& c : s["checks"]) vacuous_gap = vacuous_gap || c["vacuous"].get<bool>();
    CHECK(vacuous_gap);
    args.inject_delta_fault = true;
    CHECK(cmd_verify(cfg, args) == kViolation);
}

TEST_CASE("gap and packing commands") {
    TempDir d("gap");
    auto cfg = config_in(d);
    cfg.e_max = 3;
    cfg.s_max = 30;
    CHECK(cmd_gap(cfg, "0,1,1,1") == kPass);
    auto lines = lines_of(d.path / "gap.jsonl");
    CHECK(nlohmann::json::parse(lines.back())["type"] == "report");
    CHECK(cmd_packing(cfg) == kPass);
    auto doc = nlohmann::json::parse(slurp(d.path / "packing.json"));
    CHECK(doc["genus2"]["product"].get<double>() <= 1.872);
    CHECK(doc["general"].back()["g"] == "infinity");
    CHECK(doc["config_hash"] == cfg.hash("packing"));
}
