#include "ftwave/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ftwave {

namespace {
constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

std::vector<double> draw(NoiseStream& s, std::size_t n) {
    std::vector<double> out(n);
    for (auto& v : out) v = s.next();
    return out;
}
}  // namespace

void NoiseSpec::validate() const {
    if (!std::isfinite(amp_level) || amp_level < 0.0 || !std::isfinite(phase_level) || phase_level < 0.0)
        throw std::invalid_argument("noise: levels must be finite and non-negative");
}

double NoiseStream::next() {
    if (dist_ == NoiseDistribution::uniform)
        return 2.0 * (static_cast<double>(engine_() >> 11) * kTwoPow53Inv) - 1.0;
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * kTwoPow53Inv;
    const double u2 = static_cast<double>(engine_() >> 11) * kTwoPow53Inv;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> add_noise(std::span<const double> samples, std::span<const double> xs, const NoiseSpec& spec) {
    if (samples.size() != xs.size()) throw std::invalid_argument("add_noise: samples and xs differ in length");
    spec.validate();
    const std::size_t n = samples.size();
    NoiseStream stream(spec.seed, spec.distribution);
    const auto xa = draw(stream, n);
    const auto xp = draw(stream, n);
    std::vector<double> out(samples.begin(), samples.end());
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double slope = (samples[k + 1] - samples[k - 1]) / (xs[k + 1] - xs[k - 1]);
        out[k] = samples[k] * (1.0 + spec.amp_level * xa[k]) + spec.phase_level * xp[k] * slope;
    }
    return out;
}

std::vector<double> add_sine_noise(std::span<const double> xs, const NoiseSpec& spec, double wavenumber) {
    spec.validate();
    const std::size_t n = xs.size();
    NoiseStream stream(spec.seed, spec.distribution);
    const auto xa = draw(stream, n);
    const auto xp = draw(stream, n);
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const bool end = k == 0 || k + 1 == n;
        out[k] = end ? std::sin(wavenumber * xs[k])
                     : (1.0 + spec.amp_level * xa[k]) * std::sin(wavenumber * xs[k] + spec.phase_level * xp[k]);
    }
    return out;
}

std::vector<double> add_white_noise(std::span<const double> samples, double sigma, std::uint64_t seed) {
    if (!std::isfinite(sigma) || sigma < 0.0) throw std::invalid_argument("add_white_noise: sigma must be >= 0");
    NoiseStream stream(seed, NoiseDistribution::gaussian);
    std::vector<double> out(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) out[k] = samples[k] + sigma * stream.next();
    return out;
}

}  // namespace ftwave
