#include "ftwave/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ftwave/simd/kernels.hpp"

namespace ftwave {

double exact_solution(double x, double t) {
    constexpr double pi = std::numbers::pi;
    return 0.5 * std::sin(pi * (x - t)) + 0.5 * std::sin(pi * (x + t));
}

SampledField exact_field(const UniformAxis& xs, const UniformAxis& ts) {
    return SampledField::sample(xs, ts, exact_solution);
}

ErrorReport compare(const SampledField& a, const SampledField& b) {
    if (!a.same_grid(b)) throw std::invalid_argument("compare: fields live on different grids");
    const simd::DiffStats s = simd::diff_stats(a.values(), b.values());
    ErrorReport r;
    r.n_points = a.values().size();
    r.max_abs = s.max_abs;
    r.rmse = std::sqrt(s.sum_sq_diff / static_cast<double>(r.n_points));
    if (s.sum_sq_ref > 0.0)
        r.l2_rel = std::sqrt(s.sum_sq_diff / s.sum_sq_ref);
    else
        r.l2_rel = s.sum_sq_diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return r;
}

double convergence_order(std::span<const RefinementSample> samples) {
    if (samples.size() < 3) throw std::invalid_argument("convergence order: needs at least 3 refinement levels");
    for (std::size_t k = 0; k < samples.size(); ++k) {
        if (!(samples[k].error > 0.0) || !(samples[k].h > 0.0))
            throw std::invalid_argument("convergence order: h and errors must be positive");
        if (k > 0 && !(samples[k].h < samples[k - 1].h))
            throw std::invalid_argument("convergence order: h must decrease strictly");
    }
    const double n = static_cast<double>(samples.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& s : samples) {
        sx += std::log(s.h);
        sy += std::log(s.error);
    }
    const double mx = sx / n, my = sy / n;
    double sxy = 0.0, sxx = 0.0;
    for (const auto& s : samples) {
        const double dx = std::log(s.h) - mx;
        sxy += dx * (std::log(s.error) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

Slice slice(const SampledField& f, SliceAxis axis, double at) {
    if (f.is_1d()) throw std::invalid_argument("slice: needs a 2D field");
    const UniformAxis& ax = axis == SliceAxis::time ? f.t_axis() : f.x_axis();
    if (!(at >= ax.lo && at <= ax.hi)) throw std::out_of_range("slice: coordinate outside the axis range");
    const double s = std::round((at - ax.lo) / ax.spacing());
    std::size_t idx = static_cast<std::size_t>(s);
    if (idx >= ax.count) idx = ax.count - 1;

    Slice out{axis, idx, ax[idx], {}, {}};
    if (axis == SliceAxis::time) {
        out.coords = f.x_axis().coordinates();
        const auto r = f.row(idx);
        out.values.assign(r.begin(), r.end());
    } else {
        out.coords = f.t_axis().coordinates();
        out.values.resize(f.nt());
        for (std::size_t l = 0; l < f.nt(); ++l) out.values[l] = f.at(idx, l);
    }
    return out;
}

}  // namespace ftwave
