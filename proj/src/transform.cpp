#include "ftwave/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ftwave/simd/kernels.hpp"

namespace ftwave {

namespace {

bool same_endpoint(double u, double v) {
    return std::fabs(u - v) <= 1e-12 * std::max({1.0, std::fabs(u), std::fabs(v)});
}

void require_domain(const FuzzyPartition& p, const UniformAxis& axis) {
    if (!same_endpoint(axis.lo, p.a()) || !same_endpoint(axis.hi, p.b()))
        throw std::invalid_argument("F-transform: sample axis does not match the partition interval");
}

}  // namespace

AxisQuadrature::AxisQuadrature(const FuzzyPartition& p, const UniformAxis& samples) {
    require_domain(p, samples);
    const std::size_t n = p.size();
    const std::size_t count = samples.count;
    const double dx = samples.spacing();
    first_.resize(n);
    weights_.resize(n);
    denominator_.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        const auto [lo, hi] = p.support(i);
        const double s0 = std::ceil((lo - samples.lo) / dx);
        std::size_t k0 = s0 <= 0.0 ? 0 : std::min(count - 1, static_cast<std::size_t>(s0));
        while (k0 > 0 && samples[k0 - 1] >= lo) --k0;
        while (k0 + 1 < count && samples[k0] < lo) ++k0;
        const double s1 = std::floor((hi - samples.lo) / dx);
        std::size_t k1 = s1 <= 0.0 ? 0 : std::min(count - 1, static_cast<std::size_t>(s1));
        while (k1 + 1 < count && samples[k1 + 1] <= hi) ++k1;
        while (k1 > 0 && samples[k1] > hi) --k1;

        const bool half = i == 0 || i + 1 == n;
        const std::size_t needed = half ? 2 : 3;
        if (k1 < k0 || k1 - k0 + 1 < needed)
            throw std::invalid_argument("F-transform: support of basis " + std::to_string(i + 1) +
                                        " is under-resolved (needs at least " + std::to_string(needed) +
                                        " samples)");

        std::vector<double> w;
        w.reserve(k1 - k0 + 1);
        for (std::size_t k = k0; k <= k1; ++k) {
            const double tw = (k == 0 || k + 1 == count) ? 0.5 * dx : dx;
            w.push_back(tw * p.basis(i, samples[k]));
        }
        std::size_t lead = 0;
        while (lead < w.size() && w[lead] == 0.0) ++lead;
        std::size_t trail = w.size();
        while (trail > lead && w[trail - 1] == 0.0) --trail;
        first_[i] = k0 + lead;
        weights_[i].assign(w.begin() + static_cast<std::ptrdiff_t>(lead), w.begin() + static_cast<std::ptrdiff_t>(trail));

        double d = 0.0;
        for (double v : weights_[i]) d += v;
        denominator_[i] = d;
    }
}

double AxisQuadrature::numerator(std::size_t i, std::span<const double> values) const {
    const std::span<const double> w = weights_[i];
    const std::size_t k0 = first_[i];
    if (k0 + w.size() > values.size()) throw std::invalid_argument("F-transform: value row too short");
    double s = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * values[k0 + k];
    return s;
}

FTComponents::FTComponents(FuzzyPartition px, std::vector<double> values)
    : px_(std::move(px)), values_(std::move(values)) {
    if (values_.size() != px_.size()) throw std::invalid_argument("F-transform components: size mismatch");
}

FTComponents::FTComponents(FuzzyPartition px, FuzzyPartition pt, std::vector<double> values)
    : px_(std::move(px)), pt_(std::move(pt)), values_(std::move(values)) {
    if (values_.size() != px_.size() * pt_->size())
        throw std::invalid_argument("F-transform components: size mismatch");
}

FTComponents ftransform_1d(const SampledField& f, const FuzzyPartition& px) {
    if (!f.is_1d()) throw std::invalid_argument("ftransform_1d: expected a 1D field");
    const AxisQuadrature q(px, f.x_axis());
    std::vector<double> out(px.size());
    const auto row = f.row(0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = q.numerator(i, row) / q.denominator(i);
    return FTComponents(px, std::move(out));
}

namespace {

// acc = sum_l b_jl * f.row(l) over the time weights of component j.
void contract_time(const SampledField& f, const AxisQuadrature& qt, std::size_t j, std::vector<double>& acc) {
    std::fill(acc.begin(), acc.end(), 0.0);
    const auto w = qt.weights(j);
    const std::size_t l0 = qt.first(j);
    for (std::size_t l = 0; l < w.size(); ++l) simd::axpy(w[l], f.row(l0 + l), acc);
}

}  // namespace

FTComponents ftransform_2d(const SampledField& f, const FuzzyPartition& px, const FuzzyPartition& pt) {
    if (f.is_1d()) throw std::invalid_argument("ftransform_2d: expected a 2D field");
    const AxisQuadrature qx(px, f.x_axis());
    const AxisQuadrature qt(pt, f.t_axis());
    const std::size_t n = px.size();
    const std::size_t m = pt.size();
    std::vector<double> out(n * m);
    std::vector<double> acc(f.nx());
    for (std::size_t j = 0; j < m; ++j) {
        contract_time(f, qt, j, acc);
        for (std::size_t i = 0; i < n; ++i)
            out[j * n + i] = qx.numerator(i, acc) / (qx.denominator(i) * qt.denominator(j));
    }
    return FTComponents(px, pt, std::move(out));
}

WeightedIntegral weighted_integral_2d(const SampledField& f, const FuzzyPartition& px, const FuzzyPartition& pt,
                                      std::size_t i, std::size_t j) {
    if (f.is_1d()) throw std::invalid_argument("weighted_integral_2d: expected a 2D field");
    if (i >= px.size() || j >= pt.size()) throw std::out_of_range("weighted_integral_2d: index out of range");
    const AxisQuadrature qx(px, f.x_axis());
    const AxisQuadrature qt(pt, f.t_axis());
    std::vector<double> acc(f.nx());
    contract_time(f, qt, j, acc);
    return {qx.numerator(i, acc), qx.denominator(i) * qt.denominator(j)};
}

std::vector<double> inverse_ftransform_1d(const FTComponents& c, std::span<const double> xs) {
    const auto F = c.row(0);
    std::vector<double> out(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const Cover cv = c.px().cover(xs[k]);
        out[k] = cv.w_lo * F[cv.lo] + cv.w_hi * F[cv.hi];
    }
    return out;
}

SampledField inverse_ftransform_1d(const FTComponents& c, const UniformAxis& xs) {
    return SampledField(xs, inverse_ftransform_1d(c, xs.coordinates()));
}

SampledField inverse_ftransform_2d(const FTComponents& c, const UniformAxis& xs, const UniformAxis& ts) {
    if (c.is_1d()) throw std::invalid_argument("inverse_ftransform_2d: expected 2D components");
    std::vector<Cover> xc(xs.count);
    for (std::size_t k = 0; k < xs.count; ++k) xc[k] = c.px().cover(xs[k]);

    std::vector<double> out(xs.count * ts.count);
    std::vector<double> tmp(c.n());
    for (std::size_t l = 0; l < ts.count; ++l) {
        const Cover tc = c.pt().cover(ts[l]);
        simd::blend(tc.w_lo, c.row(tc.lo), tc.w_hi, c.row(tc.hi), tmp);
        double* dst = out.data() + l * xs.count;
        for (std::size_t k = 0; k < xs.count; ++k) dst[k] = xc[k].w_lo * tmp[xc[k].lo] + xc[k].w_hi * tmp[xc[k].hi];
    }
    return SampledField(xs, ts, std::move(out));
}

SampledField denoise(const SampledField& f, const FuzzyPartition& px) {
    return inverse_ftransform_1d(ftransform_1d(f, px), f.x_axis());
}

SampledField denoise(const SampledField& f, const FuzzyPartition& px, const FuzzyPartition& pt) {
    return inverse_ftransform_2d(ftransform_2d(f, px, pt), f.x_axis(), f.t_axis());
}

}  // namespace ftwave
