#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ftwave/analysis.hpp"
#include "ftwave/field.hpp"
#include "ftwave/transform.hpp"

namespace ftwave {

/// Header keys carried alongside a field.
struct FieldMetadata {
    std::string kind = "field";  // "field" or "ft-components"
    std::optional<double> c;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> generator;
    std::string created_by;  // defaults to the library tag on write when empty

    friend bool operator==(const FieldMetadata&, const FieldMetadata&) = default;
};

struct FieldFile {
    SampledField field;
    FieldMetadata meta;
};

/// Text format: `# key = value` header lines (kind, nx, nt, a, b, t0, T and
/// optionally c, seed, generator, created-by), then nt rows of nx
/// space-separated values printed with 17 significant digits. Row l is time
/// level l; a 1D field is written with nt = 1.
std::string format_field(const SampledField& f, const FieldMetadata& meta);
FieldFile parse_field(const std::string& text);

/// Throw IoError on I/O failure or malformed content.
void write_field(const std::string& path, const SampledField& f, const FieldMetadata& meta = {});
FieldFile read_field(const std::string& path);

/// Components are stored in the field format with kind = ft-components; the
/// partition nodes play the role of the sample grid.
void write_components(const std::string& path, const FTComponents& c, FieldMetadata meta = {});
FTComponents read_components(const std::string& path);

/// Two columns (coordinate, value) with a `#` header naming the snapped line.
std::string format_slice(const Slice& s);
void write_slice(const std::string& path, const Slice& s);

/// `key = value` lines.
std::string format_report(const ErrorReport& r);
ErrorReport parse_report(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);

/// 17 significant digits; round-trips every finite double.
std::string format_double(double v);

inline constexpr const char* kCreatedBy = "ftwave 1.0.0";

}  // namespace ftwave
