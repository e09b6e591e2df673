#include "ftwave/field_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "ftwave/config.hpp"
#include "ftwave/error.hpp"

namespace ftwave {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& s, const std::string& what) {
    const char* p = s.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(p, &end);
    if (end == p || *end != '\0' || !std::isfinite(v)) throw IoError("malformed " + what + ": '" + s + "'");
    return v;
}

std::uint64_t to_unsigned(const std::string& s, const std::string& what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw IoError("malformed " + what + ": '" + s + "'");
    errno = 0;
    const unsigned long long v = std::strtoull(s.c_str(), nullptr, 10);
    if (errno == ERANGE) throw IoError("malformed " + what + ": '" + s + "'");
    return v;
}

}  // namespace

std::string format_field(const SampledField& f, const FieldMetadata& meta) {
    std::string out;
    out.reserve(f.values().size() * 25 + 256);
    auto header = [&](std::string_view key, const std::string& value) {
        out += "# ";
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    header("kind", meta.kind);
    header("nx", std::to_string(f.nx()));
    header("nt", std::to_string(f.nt()));
    header("a", format_double(f.x_axis().lo));
    header("b", format_double(f.x_axis().hi));
    if (!f.is_1d()) {
        header("t0", format_double(f.t_axis().lo));
        header("T", format_double(f.t_axis().hi));
    }
    if (meta.c) header("c", format_double(*meta.c));
    if (meta.seed) header("seed", std::to_string(*meta.seed));
    if (meta.generator) header("generator", *meta.generator);
    header("created-by", meta.created_by.empty() ? std::string(kCreatedBy) : meta.created_by);
    for (std::size_t l = 0; l < f.nt(); ++l) {
        const auto row = f.row(l);
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ' ';
            out += format_double(row[k]);
        }
        out += '\n';
    }
    return out;
}

FieldFile parse_field(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    FieldMetadata meta;
    std::optional<std::size_t> nx, nt;
    std::optional<double> a, b, t0, T;
    std::vector<double> values;
    std::size_t rows = 0;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(line);
        if (body.empty()) continue;
        if (body[0] == '#') {
            if (rows > 0) throw IoError("line " + std::to_string(lineno) + ": header after data");
            const std::string kv = trim(std::string_view(body).substr(1));
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw IoError("line " + std::to_string(lineno) + ": malformed header");
            const std::string key = trim(std::string_view(kv).substr(0, eq));
            const std::string value = trim(std::string_view(kv).substr(eq + 1));
            if (key == "kind") meta.kind = value;
            else if (key == "nx") nx = to_unsigned(value, "nx");
            else if (key == "nt") nt = to_unsigned(value, "nt");
            else if (key == "a") a = to_double(value, "a");
            else if (key == "b") b = to_double(value, "b");
            else if (key == "t0") t0 = to_double(value, "t0");
            else if (key == "T") T = to_double(value, "T");
            else if (key == "c") meta.c = to_double(value, "c");
            else if (key == "seed") meta.seed = to_unsigned(value, "seed");
            else if (key == "generator") meta.generator = value;
            else if (key == "created-by") meta.created_by = value;
            else throw IoError("line " + std::to_string(lineno) + ": unknown header key '" + key + "'");
            continue;
        }
        if (!nx || !nt || !a || !b) throw IoError("missing header (nx, nt, a, b required before data)");
        std::size_t count = 0;
        std::size_t pos = 0;
        while (pos < body.size()) {
            const auto next = body.find_first_of(" \t", pos);
            const std::string tok = body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            if (!tok.empty()) {
                values.push_back(to_double(tok, "value on line " + std::to_string(lineno)));
                ++count;
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (count != *nx)
            throw IoError("line " + std::to_string(lineno) + ": expected " + std::to_string(*nx) + " values, got " +
                          std::to_string(count));
        ++rows;
    }
    if (!nx || !nt || !a || !b) throw IoError("missing header (nx, nt, a, b required)");
    if (rows != *nt) throw IoError("expected " + std::to_string(*nt) + " rows, got " + std::to_string(rows));
    try {
        const UniformAxis xa = UniformAxis::make(*a, *b, *nx);
        if (*nt == 1 && !T) return FieldFile{SampledField(xa, std::move(values)), meta};
        if (!T) throw IoError("missing header T for a 2D field");
        const UniformAxis ta = UniformAxis::make(t0.value_or(0.0), *T, *nt);
        return FieldFile{SampledField(xa, ta, std::move(values)), meta};
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("invalid field: ") + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

void write_field(const std::string& path, const SampledField& f, const FieldMetadata& meta) {
    write_text_file(path, format_field(f, meta));
}

FieldFile read_field(const std::string& path) { return parse_field(read_text_file(path)); }

void write_components(const std::string& path, const FTComponents& c, FieldMetadata meta) {
    meta.kind = "ft-components";
    std::vector<double> v(c.values().begin(), c.values().end());
    const UniformAxis xa{c.px().a(), c.px().b(), c.n()};
    if (c.is_1d()) {
        write_field(path, SampledField(xa, std::move(v)), meta);
    } else {
        const UniformAxis ta{c.pt().a(), c.pt().b(), c.m()};
        write_field(path, SampledField(xa, ta, std::move(v)), meta);
    }
}

FTComponents read_components(const std::string& path) {
    FieldFile ff = read_field(path);
    if (ff.meta.kind != "ft-components") throw IoError(path + ": not a components file (kind = " + ff.meta.kind + ")");
    const SampledField& f = ff.field;
    std::vector<double> v(f.values().begin(), f.values().end());
    const FuzzyPartition px = FuzzyPartition::uniform(f.x_axis().lo, f.x_axis().hi, f.nx());
    if (f.is_1d()) return FTComponents(px, std::move(v));
    return FTComponents(px, FuzzyPartition::uniform(f.t_axis().lo, f.t_axis().hi, f.nt()), std::move(v));
}

std::string format_slice(const Slice& s) {
    std::string out = s.axis == SliceAxis::time ? "# axis = t\n" : "# axis = x\n";
    out += "# at = " + format_double(s.at) + "\n";
    out += "# index = " + std::to_string(s.index + 1) + "\n";
    for (std::size_t k = 0; k < s.values.size(); ++k)
        out += format_double(s.coords[k]) + ' ' + format_double(s.values[k]) + '\n';
    return out;
}

void write_slice(const std::string& path, const Slice& s) { write_text_file(path, format_slice(s)); }

std::string format_report(const ErrorReport& r) {
    return "max_abs = " + format_double(r.max_abs) + "\nrmse = " + format_double(r.rmse) +
           "\nl2_rel = " + format_double(r.l2_rel) + "\nn_points = " + std::to_string(r.n_points) + "\n";
}

ErrorReport parse_report(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ErrorReport r;
    int seen = 0;
    while (std::getline(in, line)) {
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw IoError("malformed report line: " + body);
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key == "max_abs") r.max_abs = to_double(value, key), seen |= 1;
        else if (key == "rmse") r.rmse = to_double(value, key), seen |= 2;
        else if (key == "l2_rel") r.l2_rel = value == "inf" ? INFINITY : to_double(value, key), seen |= 4;
        else if (key == "n_points") r.n_points = to_unsigned(value, key), seen |= 8;
        else throw IoError("unknown report key: " + key);
    }
    if (seen != 15) throw IoError("incomplete report");
    return r;
}

}  // namespace ftwave
