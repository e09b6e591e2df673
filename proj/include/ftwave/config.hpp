#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ftwave/noise.hpp"

namespace ftwave {

enum class Method { ft, fd };

/// One standing-wave experiment.
///
/// Text form is flat `section.key = value` lines with `#` comments:
///
///     domain.a = 0          # required
///     domain.b = 10         # required
///     domain.T = 10         # required
///     domain.c = 1          # required
///     grid.n_x = 401        # required, partition nodes in space
///     grid.n_t = 601        # required, partition nodes in time
///     grid.fd_refine = 35   # reference grid refinement, default 35
///     solver.method = ft    # ft | fd, default ft
///     noise.enabled = false
///     noise.amp_level = 0.1
///     noise.phase_level = 0.1
///     noise.seed = 42
///     noise.distribution = gaussian   # gaussian | uniform
///     output.prefix = out/standing_wave_
///
/// Unknown keys are rejected.
struct ExperimentConfig {
    double a = 0.0;
    double b = 10.0;
    double T = 10.0;
    double c = 1.0;
    std::size_t n_x = 401;
    std::size_t n_t = 601;
    std::size_t fd_refine = 35;
    Method method = Method::ft;
    std::optional<NoiseSpec> noise;
    std::string output_prefix = "ftwave_";

    double hx() const noexcept { return (b - a) / static_cast<double>(n_x - 1); }
    double ht() const noexcept { return T / static_cast<double>(n_t - 1); }
    /// c*ht/hx, unchecked.
    double courant() const noexcept { return c * ht() / hx(); }

    /// Invariant checks; throws ConfigError. Stability is checked separately.
    void validate() const;
};

/// Throws ConfigError naming the offending line (or the missing key).
ExperimentConfig parse_config(std::string_view text);

/// Same as parse_config followed by key overrides, applied in order as if the
/// lines `key = value` were appended to the text.
ExperimentConfig parse_config(std::string_view text, const std::vector<std::pair<std::string, std::string>>& overrides);

/// Reads a file; throws IoError when it cannot be read.
std::string read_text_file(const std::string& path);

/// Canonical text form; parse_config(format_config(c)) reproduces c.
std::string format_config(const ExperimentConfig& cfg);

std::string_view method_name(Method m) noexcept;
std::string_view distribution_name(NoiseDistribution d) noexcept;

}  // namespace ftwave
