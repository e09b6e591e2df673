#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ftwave/field.hpp"
#include "ftwave/partition.hpp"

namespace ftwave {

/// Basis-weighted trapezoid weights of one partition on one sample axis.
///
/// For basis i the weights are trapezoid_weight(k) * A_i(s_k) over the samples
/// s_k lying in the closed support of A_i; samples outside contribute exactly
/// zero and are skipped. The numerator and denominator of a component share
/// these weights.
class AxisQuadrature {
public:
    /// Throws std::invalid_argument when the axis does not span [p.a, p.b] or a
    /// support is under-resolved (< 3 samples, < 2 for the half-triangle ends).
    AxisQuadrature(const FuzzyPartition& p, const UniformAxis& samples);

    std::size_t size() const noexcept { return first_.size(); }
    /// Index of the first sample carrying weight for basis i.
    std::size_t first(std::size_t i) const { return first_[i]; }
    std::span<const double> weights(std::size_t i) const { return weights_[i]; }
    /// Integral of A_i under the rule.
    double denominator(std::size_t i) const { return denominator_[i]; }

    /// Integral of f*A_i under the rule, summed left to right.
    double numerator(std::size_t i, std::span<const double> values) const;

private:
    std::vector<std::size_t> first_;
    std::vector<std::vector<double>> weights_;
    std::vector<double> denominator_;
};

/// F-transform components over one (1D) or two (space x time) partitions.
///
/// Storage is time-major: component (i, j) lives at j*n + i, so each time
/// level is a contiguous row, matching the on-disk layout.
class FTComponents {
public:
    FTComponents(FuzzyPartition px, std::vector<double> values);
    FTComponents(FuzzyPartition px, FuzzyPartition pt, std::vector<double> values);

    bool is_1d() const noexcept { return !pt_.has_value(); }
    const FuzzyPartition& px() const noexcept { return px_; }
    /// Precondition: !is_1d().
    const FuzzyPartition& pt() const { return pt_.value(); }
    std::size_t n() const noexcept { return px_.size(); }
    std::size_t m() const noexcept { return pt_ ? pt_->size() : 1; }

    double at(std::size_t i, std::size_t j = 0) const { return values_[j * n() + i]; }
    std::span<const double> row(std::size_t j) const {
        return std::span<const double>(values_).subspan(j * n(), n());
    }
    std::span<const double> values() const noexcept { return values_; }

    friend bool operator==(const FTComponents&, const FTComponents&) = default;

private:
    FuzzyPartition px_;
    std::optional<FuzzyPartition> pt_;
    std::vector<double> values_;
};

/// Numerator and denominator of one 2D component under the tensor trapezoid rule.
struct WeightedIntegral {
    double numerator;
    double denominator;
};

FTComponents ftransform_1d(const SampledField& f, const FuzzyPartition& px);
FTComponents ftransform_2d(const SampledField& f, const FuzzyPartition& px, const FuzzyPartition& pt);

/// Double integral of f*A_i*B_j and of A_i*B_j (0-based i, j).
WeightedIntegral weighted_integral_2d(const SampledField& f, const FuzzyPartition& px, const FuzzyPartition& pt,
                                      std::size_t i, std::size_t j);

/// sum_i A_i(x) F_i at every x. Throws std::out_of_range for x outside [a, b].
std::vector<double> inverse_ftransform_1d(const FTComponents& c, std::span<const double> xs);
/// Inverse transform evaluated on a uniform grid.
SampledField inverse_ftransform_1d(const FTComponents& c, const UniformAxis& xs);
SampledField inverse_ftransform_2d(const FTComponents& c, const UniformAxis& xs, const UniformAxis& ts);

/// Forward then inverse transform, resampled on f's own grid.
SampledField denoise(const SampledField& f, const FuzzyPartition& px);
SampledField denoise(const SampledField& f, const FuzzyPartition& px, const FuzzyPartition& pt);

}  // namespace ftwave
