#include "dkg/report.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#ifndef DKG_CODE_VERSION
#define DKG_CODE_VERSION "unknown"
#endif

namespace dkg {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

void set_checked(std::map<std::string, std::string>& kv, const std::string& key, const std::string& value,
                 const std::string& where) {
    if (!kv.count(key)) throw ContractError("unknown parameter '" + key + "' in " + where);
    kv[key] = value;
}

}  // namespace

Params Params::load(const std::map<std::string, std::string>& defaults, const std::string& config_path,
                    const std::vector<std::string>& overrides) {
    Params p;
    p.kv_ = defaults;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ContractError("cannot read config file " + config_path);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ContractError(config_path + ":" + std::to_string(lineno) + ": expected key = value");
            set_checked(p.kv_, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), config_path);
        }
    }
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw ContractError("expected key=value, got '" + o + "'");
        set_checked(p.kv_, trim(o.substr(0, eq)), trim(o.substr(eq + 1)), "command line");
    }
    return p;
}

const std::string& Params::str(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw ContractError("missing parameter '" + key + "'");
    return it->second;
}

double Params::num(const std::string& key) const {
    try {
        return parse_number(str(key));
    } catch (const ContractError&) {
        throw ContractError("parameter '" + key + "' is not a number: '" + str(key) + "'");
    }
}

long Params::integer(const std::string& key) const {
    const double v = num(key);
    if (v != std::floor(v)) throw ContractError("parameter '" + key + "' must be an integer");
    return long(v);
}

bool Params::flag(const std::string& key) const {
    const std::string& v = str(key);
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw ContractError("parameter '" + key + "' must be a boolean");
}

std::vector<double> Params::list(const std::string& key) const {
    try {
        return parse_number_list(str(key));
    } catch (const ContractError&) {
        throw ContractError("parameter '" + key + "' is not a number list: '" + str(key) + "'");
    }
}

double parse_number(const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty()) throw ContractError("empty number");
    const auto slash = s.find('/');
    size_t used = 0;
    try {
        if (slash != std::string::npos) {
            const double a = std::stod(s.substr(0, slash), &used);
            if (used != slash) throw ContractError("bad number '" + s + "'");
            const std::string den = s.substr(slash + 1);
            const double b = std::stod(den, &used);
            if (used != den.size() || b == 0.0) throw ContractError("bad number '" + s + "'");
            return a / b;
        }
        const double v = std::stod(s, &used);
        if (used != s.size()) throw ContractError("bad number '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw ContractError("bad number '" + s + "'");
    }
}

std::vector<double> parse_number_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
    if (out.empty()) throw ContractError("empty list");
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : os_(path, std::ios::trunc | std::ios::binary), columns_(header.size()) {
    if (!os_) throw ContractError("cannot write " + path.string());
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    require(cells.size() == columns_, "CsvWriter: wrong number of cells");
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) os_ << ',';
        os_ << cells[i];
    }
    os_ << '\n';
    os_.flush();
}

std::string code_version() { return DKG_CODE_VERSION; }

std::string utc_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
    return buf;
}

std::filesystem::path make_run_dir(const std::string& outdir, const std::string& command, const std::string& label) {
    const std::filesystem::path dir = std::filesystem::path(outdir) / command / (label.empty() ? utc_timestamp() : label);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_manifest(const std::filesystem::path& dir, const std::string& command, const Params& params,
                    std::uint64_t seed, const std::string& grid) {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["params"] = params.all();
    j["seed"] = seed;
    j["grid"] = grid;
    j["code_version"] = code_version();
    j["started_at"] = utc_timestamp();
    std::ofstream os(dir / "manifest.json");
    if (!os) throw ContractError("cannot write manifest in " + dir.string());
    os << j.dump(2) << '\n';
}

}  // namespace dkg
