#include "tbvp/cli.hpp"

#include "tbvp/smooth_function.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tbvp::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v))
        throw ConfigError(key + ": expected a number, got '" + text + "'");
    return v;
}

long long parse_int(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    long long v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
        throw ConfigError(key + ": expected an integer, got '" + text + "'");
    return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (trim(item).empty()) continue;
        out.push_back(parse_double(key, item));
    }
    return out;
}

}  // namespace

FunctionSpec parse_function(const std::string& text) {
    const std::string t = trim(text);
    FunctionSpec f;
    const auto open = t.find('(');
    if (open == std::string::npos) {
        f.name = t;
    } else {
        if (t.back() != ')') throw ConfigError("function '" + text + "': missing ')'");
        f.name = trim(t.substr(0, open));
        const std::string inner = t.substr(open + 1, t.size() - open - 2);
        if (f.name == "file") {
            f.file = trim(inner);
            if (f.file.empty()) throw ConfigError("function '" + text + "': empty file path");
        } else {
            f.params = parse_list(f.name, inner);
        }
    }
    if (f.name.empty()) throw ConfigError("function '" + text + "': missing name");
    return f;
}

RunConfig parse_config(std::istream& in, const std::string& base_dir) {
    RunConfig cfg;
    bool have_f0 = false, have_fT = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "f0" || key == "fT") {
            FunctionSpec f = parse_function(value);
            if (!f.file.empty() && std::filesystem::path(f.file).is_relative())
                f.file = (std::filesystem::path(base_dir) / f.file).string();
            (key == "f0" ? cfg.f0 : cfg.fT) = f;
            (key == "f0" ? have_f0 : have_fT) = true;
        } else if (key == "T") {
            cfg.T = parse_double(key, value);
        } else if (key == "K1") {
            cfg.K1 = static_cast<int>(parse_int(key, value));
        } else if (key == "K2") {
            cfg.K2 = static_cast<int>(parse_int(key, value));
        } else if (key == "n") {
            cfg.n = static_cast<int>(parse_int(key, value));
        } else if (key == "norm") {
            if (value == "l1") cfg.norm = 1;
            else if (value == "l2") cfg.norm = 2;
            else throw ConfigError("norm: expected l1 or l2, got '" + value + "'");
        } else if (key == "eps_schedule") {
            cfg.eps_schedule = parse_list(key, value);
        } else if (key == "seed") {
            const long long s = parse_int(key, value);
            if (s < 0) throw ConfigError("seed: must be non-negative");
            cfg.seed = static_cast<std::uint64_t>(s);
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else if (key == "oracle_n") {
            cfg.oracle_n = static_cast<int>(parse_int(key, value));
        } else if (key == "oracle_max_iter") {
            cfg.oracle_max_iter = static_cast<int>(parse_int(key, value));
        } else if (key == "n_t") {
            cfg.n_t = static_cast<int>(parse_int(key, value));
        } else {
            throw ConfigError("unknown key '" + key + "' on line " + std::to_string(lineno));
        }
    }

    if (!have_f0) throw ConfigError("f0: missing");
    if (!have_fT) throw ConfigError("fT: missing");
    if (!(cfg.T > 0.0)) throw ConfigError("T: must be positive");
    if (cfg.K1 < 1) throw ConfigError("K1: must be at least 1");
    if (cfg.K2 < 1) throw ConfigError("K2: must be at least 1");
    if (cfg.n < 65 || cfg.n % 2 == 0) throw ConfigError("n: must be odd and at least 65");
    if (cfg.oracle_n < 65 || cfg.oracle_n % 2 == 0)
        throw ConfigError("oracle_n: must be odd and at least 65");
    if (cfg.oracle_max_iter < 0) throw ConfigError("oracle_max_iter: must be non-negative");
    if (cfg.n_t < 9) throw ConfigError("n_t: must be at least 9");
    if (cfg.eps_schedule.empty()) throw ConfigError("eps_schedule: empty");
    for (double e : cfg.eps_schedule)
        if (!(e > 0.0)) throw ConfigError("eps_schedule: entries must be positive");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    const auto parent = std::filesystem::path(path).parent_path();
    return parse_config(in, parent.empty() ? "." : parent.string());
}

namespace {

SmoothFunction build_function(const FunctionSpec& f) {
    if (f.file.empty()) return catalog(f.name, f.params);
    const auto rows = read_csv(f.file);
    std::vector<double> x, y;
    for (const auto& r : rows) {
        if (r.size() < 2) throw ConfigError(f.file + ": expected two columns x, f(x)");
        x.push_back(r[0]);
        y.push_back(r[1]);
    }
    return spline_from_samples(x, y);
}

}  // namespace

ProblemSpec build_problem(const RunConfig& cfg) {
    return ProblemSpec(build_function(cfg.f0), build_function(cfg.fT), cfg.T, cfg.K1, cfg.K2);
}

}  // namespace tbvp::cli
