#include "ftwave/fd_reference.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ftwave/error.hpp"
#include "ftwave/wave_ft_solver.hpp"

namespace ftwave {

namespace {

void require_divides(std::size_t count, std::size_t factor, const char* axis) {
    if (factor == 0 || (count - 1) % factor != 0)
        throw std::invalid_argument(std::string("decimation factor does not divide the ") + axis + " intervals");
}

void check_finite(std::span<const double> row, std::size_t level) {
    for (std::size_t k = 0; k < row.size(); ++k)
        if (!std::isfinite(row[k])) throw NumericalError(k + 1, level + 1);
}

}  // namespace

SampledField fd_march(const FdMarchInput& in) {
    const std::size_t nx = in.x.count;
    const std::size_t nt = in.t.count;
    if (in.initial.size() != nx || in.velocity.size() != nx || in.left.size() != nt || in.right.size() != nt)
        throw std::invalid_argument("fd_march: input lengths do not match the grid");
    require_divides(nx, in.keep_x, "space");
    require_divides(nt, in.keep_t, "time");

    const double hx = in.x.spacing();
    const double ht = in.t.spacing();
    const double r = check_stability(in.c, hx, ht);
    const double r2 = r * r;
    const double center = 2.0 * (1.0 - r2);
    const double fscale = in.c * in.c * ht * ht;

    const std::size_t out_nx = (nx - 1) / in.keep_x + 1;
    const std::size_t out_nt = (nt - 1) / in.keep_t + 1;
    std::vector<double> out(out_nx * out_nt);
    auto keep = [&](const std::vector<double>& level, std::size_t l) {
        if (l % in.keep_t != 0) return;
        double* dst = out.data() + (l / in.keep_t) * out_nx;
        for (std::size_t k = 0; k < out_nx; ++k) dst[k] = level[k * in.keep_x];
    };

    std::vector<double> prev(in.initial);
    prev[0] = in.left[0];
    prev[nx - 1] = in.right[0];
    check_finite(prev, 0);
    keep(prev, 0);

    std::vector<double> q(in.force ? nx : 0);
    auto sample_force = [&](std::size_t l) {
        const double tl = in.t[l];
        for (std::size_t k = 0; k < nx; ++k) q[k] = in.force(in.x[k], tl);
    };

    // Level 1: ghost level u(x, -ht) = u(x, ht) - 2 ht g(x) eliminated.
    std::vector<double> cur(nx);
    if (in.force) sample_force(0);
    for (std::size_t k = 1; k + 1 < nx; ++k) {
        double bracket = r2 * (prev[k - 1] + prev[k + 1]) + center * prev[k];
        if (in.force) bracket = bracket - fscale * q[k];
        cur[k] = 0.5 * bracket + ht * in.velocity[k];
    }
    cur[0] = in.left[1];
    cur[nx - 1] = in.right[1];
    check_finite(cur, 1);
    keep(cur, 1);

    std::vector<double> next(nx);
    for (std::size_t l = 1; l + 1 < nt; ++l) {
        if (in.force) {
            sample_force(l);
            for (std::size_t k = 1; k + 1 < nx; ++k)
                next[k] = ((r2 * (cur[k - 1] + cur[k + 1]) + center * cur[k]) - prev[k]) - fscale * q[k];
        } else {
            for (std::size_t k = 1; k + 1 < nx; ++k)
                next[k] = (r2 * (cur[k - 1] + cur[k + 1]) + center * cur[k]) - prev[k];
        }
        next[0] = in.left[l + 1];
        next[nx - 1] = in.right[l + 1];
        check_finite(next, l + 1);
        keep(next, l + 1);
        std::swap(prev, cur);
        std::swap(cur, next);
    }

    const UniformAxis ox = UniformAxis::make(in.x.lo, in.x.hi, out_nx);
    const UniformAxis ot = UniformAxis::make(in.t.lo, in.t.hi, out_nt);
    return SampledField(ox, ot, std::move(out));
}

SampledField fd_solve(const WaveProblem& prob, std::size_t nx, std::size_t nt, std::size_t keep_x,
                      std::size_t keep_t) {
    prob.validate();
    FdMarchInput in;
    in.x = UniformAxis::make(prob.a, prob.b, nx);
    in.t = UniformAxis::make(0.0, prob.T, nt);
    // Refuse before sampling anything.
    check_stability(prob.c, in.x.spacing(), in.t.spacing());
    in.c = prob.c;
    in.initial = prob.initial_displacement.sample(in.x);
    in.velocity = prob.initial_velocity.sample(in.x);
    in.left = prob.left_boundary.sample(in.t);
    in.right = prob.right_boundary.sample(in.t);
    in.force = prob.force;
    in.keep_x = keep_x;
    in.keep_t = keep_t;
    return fd_march(in);
}

SampledField decimate(const SampledField& f, std::size_t factor_x, std::size_t factor_t) {
    require_divides(f.nx(), factor_x, "space");
    const std::size_t out_nx = (f.nx() - 1) / factor_x + 1;
    const UniformAxis ox = UniformAxis::make(f.x_axis().lo, f.x_axis().hi, out_nx);
    if (f.is_1d()) {
        std::vector<double> v(out_nx);
        for (std::size_t k = 0; k < out_nx; ++k) v[k] = f.at(k * factor_x);
        return SampledField(ox, std::move(v));
    }
    require_divides(f.nt(), factor_t, "time");
    const std::size_t out_nt = (f.nt() - 1) / factor_t + 1;
    const UniformAxis ot = UniformAxis::make(f.t_axis().lo, f.t_axis().hi, out_nt);
    std::vector<double> v(out_nx * out_nt);
    for (std::size_t l = 0; l < out_nt; ++l)
        for (std::size_t k = 0; k < out_nx; ++k) v[l * out_nx + k] = f.at(k * factor_x, l * factor_t);
    return SampledField(ox, ot, std::move(v));
}

}  // namespace ftwave
