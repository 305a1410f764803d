#include "run_config.hpp"

#include "g2/errors.hpp"

#include <openssl/evp.h>

#include <ctime>
#include <filesystem>
#include <iomanip>
#include <sstream>

namespace g2::cli {

void RunConfig::validate() const {
    if (precision_bits <= 0) throw Error("precision_bits must be positive");
    if (!(target_error > 0)) throw Error("target_error must be positive");
    if (!(delta > 0) || !(delta < 1)) throw Error("delta must lie in (0, 1)");
    if (!(T > 0)) throw Error("T must be positive");
    if (e_max <= 0 || s_max <= 0) throw Error("e_max and s_max must be positive");
    if (seed == 0) throw Error("seed must be positive");
}

nlohmann::json RunConfig::to_json() const {
    return {{"precision_bits", precision_bits}, {"target_error", target_error}, {"delta", delta}, {"T", T},
            {"e_max", e_max}, {"s_max", s_max}, {"theta_enabled", theta_enabled}, {"seed", seed}};
}

std::string RunConfig::hash(const std::string& command) const {
    std::string text = nlohmann::json{{"command", command}, {"config", to_json()}}.dump();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream o;
    for (unsigned i = 0; i < 8; ++i) o << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return o.str();
}

std::string output_path(const RunConfig& cfg, const std::string& name) {
    return (std::filesystem::path(cfg.output_dir) / name).string();
}

namespace {

std::string utc(std::chrono::system_clock::time_point t) {
    std::time_t tt = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    std::ostringstream o;
    o << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return o.str();
}

}  // namespace

OutputFile::OutputFile(const RunConfig& cfg, const std::string& command, const std::string& name, Kind kind,
                       bool append)
    : path_(output_path(cfg, name)), hash_(cfg.hash(command)), command_(command), config_(cfg.to_json()), kind_(kind),
      started_(std::chrono::system_clock::now()) {
    std::filesystem::create_directories(cfg.output_dir);
    out_.open(path_, append ? std::ios::app : std::ios::trunc);
    if (!out_) throw Error("cannot write " + path_);
    if (append) return;
    if (kind_ == Kind::jsonl) {
        nlohmann::json h{{"type", "header"}, {"command", command}, {"config", cfg.to_json()}, {"config_hash", hash_}};
        out_ << h.dump() << '\n';
    }
}

OutputFile::~OutputFile() {
    out_.close();
    auto now = std::chrono::system_clock::now();
    nlohmann::json meta{{"file", path_},
                        {"command", command_},
                        {"config_hash", hash_},
                        {"started_utc", utc(started_)},
                        {"finished_utc", utc(now)},
                        {"wall_seconds", std::chrono::duration<double>(now - started_).count()}};
    std::ofstream m(path_ + ".meta.json");
    m << meta.dump(2) << '\n';
}

void OutputFile::record(nlohmann::json j) {
    j["config_hash"] = hash_;
    out_ << j.dump() << '\n';
}

void OutputFile::csv_header(const std::string& names) { out_ << names << ",config_hash\n"; }

void OutputFile::row(const std::string& csv_fields) { out_ << csv_fields << ',' << hash_ << '\n'; }

void OutputFile::document(nlohmann::json j) {
    j["config"] = config_;
    j["config_hash"] = hash_;
    out_ << j.dump(2) << '\n';
}

}  // namespace g2::cli
