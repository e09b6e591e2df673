#include "ftwave/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "ftwave/error.hpp"

namespace ftwave {

namespace {

struct Entry {
    std::string value;
    std::string where;  // "line N" or "override"
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

const char* const kKnownKeys[] = {
    "domain.a",        "domain.b",          "domain.T",   "domain.c",           "grid.n_x",
    "grid.n_t",        "grid.fd_refine",    "solver.method", "noise.enabled",   "noise.amp_level",
    "noise.phase_level", "noise.seed",      "noise.distribution", "output.prefix",
};

const char* const kRequiredKeys[] = {"domain.a", "domain.b", "domain.T", "domain.c", "grid.n_x", "grid.n_t"};

bool known(const std::string& key) {
    for (const char* k : kKnownKeys)
        if (key == k) return true;
    return false;
}

[[noreturn]] void fail(const Entry& e, const std::string& key, const std::string& why) {
    throw ConfigError(e.where + ": " + key + " = " + e.value + ": " + why);
}

double parse_real(const Entry& e, const std::string& key) {
    const char* s = e.value.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || errno == ERANGE || !std::isfinite(v)) fail(e, key, "expected a finite real number");
    return v;
}

std::uint64_t parse_unsigned(const Entry& e, const std::string& key) {
    const std::string& s = e.value;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        fail(e, key, "expected a non-negative integer");
    errno = 0;
    const unsigned long long v = std::strtoull(s.c_str(), nullptr, 10);
    if (errno == ERANGE) fail(e, key, "integer out of range");
    return static_cast<std::uint64_t>(v);
}

bool parse_bool(const Entry& e, const std::string& key) {
    if (e.value == "true" || e.value == "1" || e.value == "yes" || e.value == "on") return true;
    if (e.value == "false" || e.value == "0" || e.value == "no" || e.value == "off") return false;
    fail(e, key, "expected true or false");
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ExperimentConfig build(const std::map<std::string, Entry>& entries) {
    for (const char* k : kRequiredKeys)
        if (!entries.count(k)) throw ConfigError(std::string("missing key: ") + k);

    auto get = [&](const char* k) -> const Entry* {
        const auto it = entries.find(k);
        return it == entries.end() ? nullptr : &it->second;
    };

    ExperimentConfig cfg;
    cfg.a = parse_real(*get("domain.a"), "domain.a");
    cfg.b = parse_real(*get("domain.b"), "domain.b");
    cfg.T = parse_real(*get("domain.T"), "domain.T");
    cfg.c = parse_real(*get("domain.c"), "domain.c");
    if (!(cfg.b > cfg.a)) fail(*get("domain.b"), "domain.b", "requires domain.b > domain.a");
    if (!(cfg.T > 0.0)) fail(*get("domain.T"), "domain.T", "requires domain.T > 0");
    if (!(cfg.c > 0.0)) fail(*get("domain.c"), "domain.c", "requires domain.c > 0");

    for (const char* k : {"grid.n_x", "grid.n_t"}) {
        const std::uint64_t n = parse_unsigned(*get(k), k);
        if (n < 2) fail(*get(k), k, "violates n >= 2 (a fuzzy partition needs at least two nodes)");
        (std::string_view(k) == "grid.n_x" ? cfg.n_x : cfg.n_t) = static_cast<std::size_t>(n);
    }
    if (const Entry* e = get("grid.fd_refine")) {
        const std::uint64_t f = parse_unsigned(*e, "grid.fd_refine");
        if (f < 1) fail(*e, "grid.fd_refine", "requires fd_refine >= 1");
        cfg.fd_refine = static_cast<std::size_t>(f);
    }
    if (const Entry* e = get("solver.method")) {
        if (e->value == "ft")
            cfg.method = Method::ft;
        else if (e->value == "fd")
            cfg.method = Method::fd;
        else
            fail(*e, "solver.method", "expected ft or fd");
    }

    NoiseSpec noise;
    if (const Entry* e = get("noise.amp_level")) noise.amp_level = parse_real(*e, "noise.amp_level");
    if (const Entry* e = get("noise.phase_level")) noise.phase_level = parse_real(*e, "noise.phase_level");
    if (const Entry* e = get("noise.seed")) noise.seed = parse_unsigned(*e, "noise.seed");
    if (const Entry* e = get("noise.distribution")) {
        if (e->value == "gaussian")
            noise.distribution = NoiseDistribution::gaussian;
        else if (e->value == "uniform")
            noise.distribution = NoiseDistribution::uniform;
        else
            fail(*e, "noise.distribution", "expected gaussian or uniform");
    }
    if (noise.amp_level < 0.0) fail(*get("noise.amp_level"), "noise.amp_level", "requires a level >= 0");
    if (noise.phase_level < 0.0) fail(*get("noise.phase_level"), "noise.phase_level", "requires a level >= 0");
    if (const Entry* e = get("noise.enabled"); e && parse_bool(*e, "noise.enabled")) cfg.noise = noise;

    if (const Entry* e = get("output.prefix")) cfg.output_prefix = e->value;
    return cfg;
}

void ingest(std::string_view text, std::map<std::string, Entry>& entries) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        const std::string body = trim(std::string_view(line).substr(0, hash));
        if (body.empty()) continue;
        const std::string where = "line " + std::to_string(lineno);
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value', got '" + body + "'");
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty()) throw ConfigError(where + ": missing key before '='");
        if (!known(key)) throw ConfigError(where + ": unknown key '" + key + "'");
        if (value.empty()) throw ConfigError(where + ": missing value for " + key);
        entries[key] = Entry{value, where};
    }
}

}  // namespace

void ExperimentConfig::validate() const {
    if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) throw ConfigError("domain: requires finite b > a");
    if (!(T > 0.0) || !std::isfinite(T)) throw ConfigError("domain: requires T > 0");
    if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("domain: requires c > 0");
    if (n_x < 2 || n_t < 2) throw ConfigError("grid: n_x and n_t violate n >= 2");
    if (fd_refine < 1) throw ConfigError("grid: fd_refine must be >= 1");
    if (noise) {
        try {
            noise->validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
}

ExperimentConfig parse_config(std::string_view text) { return parse_config(text, {}); }

ExperimentConfig parse_config(std::string_view text,
                              const std::vector<std::pair<std::string, std::string>>& overrides) {
    std::map<std::string, Entry> entries;
    ingest(text, entries);
    for (const auto& [key, value] : overrides) {
        const std::string k = trim(key);
        if (!known(k)) throw ConfigError("override: unknown key '" + k + "'");
        entries[k] = Entry{trim(value), "override"};
    }
    ExperimentConfig cfg = build(entries);
    cfg.validate();
    return cfg;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return ss.str();
}

std::string format_config(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "domain.a = " << format_real(cfg.a) << '\n'
       << "domain.b = " << format_real(cfg.b) << '\n'
       << "domain.T = " << format_real(cfg.T) << '\n'
       << "domain.c = " << format_real(cfg.c) << '\n'
       << "grid.n_x = " << cfg.n_x << '\n'
       << "grid.n_t = " << cfg.n_t << '\n'
       << "grid.fd_refine = " << cfg.fd_refine << '\n'
       << "solver.method = " << method_name(cfg.method) << '\n'
       << "noise.enabled = " << (cfg.noise ? "true" : "false") << '\n';
    if (cfg.noise) {
        os << "noise.amp_level = " << format_real(cfg.noise->amp_level) << '\n'
           << "noise.phase_level = " << format_real(cfg.noise->phase_level) << '\n'
           << "noise.seed = " << cfg.noise->seed << '\n'
           << "noise.distribution = " << distribution_name(cfg.noise->distribution) << '\n';
    }
    os << "output.prefix = " << cfg.output_prefix << '\n';
    return os.str();
}

std::string_view method_name(Method m) noexcept { return m == Method::ft ? "ft" : "fd"; }

std::string_view distribution_name(NoiseDistribution d) noexcept {
    return d == NoiseDistribution::gaussian ? "gaussian" : "uniform";
}

}  // namespace ftwave
