#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ftwave {

/// Uniform sample grid on [lo, hi] including both endpoints.
struct UniformAxis {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t count = 2;

    /// Throws std::invalid_argument unless count >= 2, lo < hi and both finite.
    static UniformAxis make(double lo, double hi, std::size_t count);

    double spacing() const noexcept { return (hi - lo) / static_cast<double>(count - 1); }

    /// Coordinate of sample k; the last sample is exactly hi.
    double operator[](std::size_t k) const noexcept {
        return k + 1 == count ? hi : lo + spacing() * static_cast<double>(k);
    }

    std::vector<double> coordinates() const;

    /// Axis with `factor` sub-intervals per interval of this one.
    UniformAxis refined(std::size_t factor) const;

    friend bool operator==(const UniformAxis&, const UniformAxis&) = default;
};

/// Function samples on a uniform 1D or 2D grid.
///
/// 2D values are stored time-major: row l holds the space samples at time
/// level l, matching the on-disk layout. A 1D field has a single row and no
/// time axis.
class SampledField {
public:
    SampledField(UniformAxis x, std::vector<double> values);
    SampledField(UniformAxis x, UniformAxis t, std::vector<double> values);

    template <class Fn>
    static SampledField sample(const UniformAxis& x, Fn&& fn) {
        std::vector<double> v(x.count);
        for (std::size_t k = 0; k < x.count; ++k) v[k] = fn(x[k]);
        return SampledField(x, std::move(v));
    }

    template <class Fn>
    static SampledField sample(const UniformAxis& x, const UniformAxis& t, Fn&& fn) {
        std::vector<double> v(x.count * t.count);
        for (std::size_t l = 0; l < t.count; ++l) {
            const double tl = t[l];
            for (std::size_t k = 0; k < x.count; ++k) v[l * x.count + k] = fn(x[k], tl);
        }
        return SampledField(x, t, std::move(v));
    }

    bool is_1d() const noexcept { return !t_.has_value(); }
    const UniformAxis& x_axis() const noexcept { return x_; }
    /// Precondition: !is_1d().
    const UniformAxis& t_axis() const { return t_.value(); }
    std::size_t nx() const noexcept { return x_.count; }
    std::size_t nt() const noexcept { return t_ ? t_->count : 1; }

    double at(std::size_t k, std::size_t l = 0) const { return values_[l * nx() + k]; }
    double& at(std::size_t k, std::size_t l = 0) { return values_[l * nx() + k]; }

    std::span<const double> row(std::size_t l) const {
        return std::span<const double>(values_).subspan(l * nx(), nx());
    }
    std::span<double> row(std::size_t l) { return std::span<double>(values_).subspan(l * nx(), nx()); }
    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }

    bool same_grid(const SampledField& other) const noexcept { return x_ == other.x_ && t_ == other.t_; }

    friend bool operator==(const SampledField&, const SampledField&) = default;

private:
    UniformAxis x_;
    std::optional<UniformAxis> t_;
    std::vector<double> values_;
};

}  // namespace ftwave
