#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace ftwave {

enum class NoiseDistribution { gaussian, uniform };

/// Generator tag written into output headers; identifies the exact draw stream.
inline constexpr std::string_view kNoiseGenerator = "mt19937_64/box-muller-v1";

struct NoiseSpec {
    double amp_level = 0.1;    // relative amplitude scale
    double phase_level = 0.1;  // phase jitter scale, radians
    std::uint64_t seed = 42;
    NoiseDistribution distribution = NoiseDistribution::gaussian;

    /// Throws std::invalid_argument for negative or non-finite levels.
    void validate() const;
};

/// Unit-scale variates from a 64-bit Mersenne Twister.
///
/// gaussian: Box-Muller cosine branch, u1 = (bits>>11 + 1)*2^-53 in (0, 1],
/// u2 = (bits>>11)*2^-53 in [0, 1); two engine draws per variate.
/// uniform: 2*(bits>>11)*2^-53 - 1 in [-1, 1); one draw per variate.
class NoiseStream {
public:
    NoiseStream(std::uint64_t seed, NoiseDistribution dist) : engine_(seed), dist_(dist) {}
    double next();

private:
    std::mt19937_64 engine_;
    NoiseDistribution dist_;
};

/// samples[k]*(1 + amp*xa[k]) + phase*xp[k]*slope[k], slope by centred differences.
/// The amplitude stream (one variate per index) is drawn before the phase stream;
/// the first and last samples are returned unchanged.
std::vector<double> add_noise(std::span<const double> samples, std::span<const double> xs, const NoiseSpec& spec);

/// Closed form for a sine initial condition:
/// (1 + amp*xa[k]) * sin(wavenumber*x[k] + phase*xp[k]), ends set to sin(wavenumber*x) unperturbed.
std::vector<double> add_sine_noise(std::span<const double> xs, const NoiseSpec& spec, double wavenumber);

/// samples[k] + sigma*z[k] with Gaussian z from the same generator, every sample perturbed.
std::vector<double> add_white_noise(std::span<const double> samples, double sigma, std::uint64_t seed);

}  // namespace ftwave
