#pragma once

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <string>

namespace g2::cli {

struct RunConfig {
    long precision_bits = 256;
    double target_error = 1e-8;
    double delta = 0.25;
    double T = 1.0;
    long e_max = 6;
    long s_max = 200;
    bool theta_enabled = true;
    std::string output_dir = ".";
    uint64_t seed = 1;

    // Throws g2::Error unless every numeric field is positive and delta < 1.
    void validate() const;
    // Fields that determine results; output_dir is left out.
    nlohmann::json to_json() const;
    // First 16 hex digits of SHA-256 over the command name and to_json().
    std::string hash(const std::string& command) const;
};

// Result file with the config in its first record and timestamps in <path>.meta.json.
class OutputFile {
public:
    enum class Kind { jsonl, csv, json };

    OutputFile(const RunConfig& cfg, const std::string& command, const std::string& name, Kind kind,
               bool append = false);
    ~OutputFile();
    OutputFile(const OutputFile&) = delete;
    OutputFile& operator=(const OutputFile&) = delete;

    void record(nlohmann::json j);            // jsonl: one line, tagged with the config hash
    void csv_header(const std::string& names);  // csv: adds the config_hash column
    void row(const std::string& csv_fields);    // csv: config hash appended as the last column
    void document(nlohmann::json j);          // json: single object with config and hash
    void flush() { out_.flush(); }

    const std::string& path() const { return path_; }
    const std::string& config_hash() const { return hash_; }

private:
    std::string path_, hash_, command_;
    nlohmann::json config_;
    Kind kind_;
    std::ofstream out_;
    std::chrono::system_clock::time_point started_;
};

std::string output_path(const RunConfig& cfg, const std::string& name);

}  // namespace g2::cli
