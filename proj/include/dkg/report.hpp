#pragma once

#include "dkg/types.hpp"

#include <filesystem>
#include <fstream>
#include <map>

namespace dkg {

/// Typed key=value parameters with a fixed set of allowed keys and defaults.
class Params {
public:
    /// `defaults` lists every allowed key. Config-file lines are `key = value`
    /// ('#' starts a comment); overrides are `key=value` strings applied after.
    static Params load(const std::map<std::string, std::string>& defaults, const std::string& config_path,
                       const std::vector<std::string>& overrides);

    const std::string& str(const std::string& key) const;
    double num(const std::string& key) const;
    long integer(const std::string& key) const;
    bool flag(const std::string& key) const;
    std::vector<double> list(const std::string& key) const;
    const std::map<std::string, std::string>& all() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

/// Comma-separated doubles; accepts fractions such as 3/4.
std::vector<double> parse_number_list(const std::string& s);
double parse_number(const std::string& s);

/// Fixed-format number for CSV output (stable across runs).
std::string fmt(double v);

class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& cells);

private:
    std::ofstream os_;
    size_t columns_;
};

std::string code_version();
std::string utc_timestamp();

/// <outdir>/<command>/<label or timestamp>/, created on demand.
std::filesystem::path make_run_dir(const std::string& outdir, const std::string& command, const std::string& label);

/// manifest.json with command, params, seed, grid, code_version, started_at.
void write_manifest(const std::filesystem::path& dir, const std::string& command, const Params& params,
                    std::uint64_t seed, const std::string& grid);

}  // namespace dkg
