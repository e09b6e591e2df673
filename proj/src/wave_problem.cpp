#include "ftwave/wave_problem.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace ftwave {

Profile::Profile(double constant) : fn_([constant](double) { return constant; }), zero_(constant == 0.0) {}

Profile::Profile(SampledField samples) : samples_(std::make_shared<const SampledField>(std::move(samples))) {
    if (!samples_->is_1d()) throw std::invalid_argument("profile: samples must be 1D");
}

double Profile::operator()(double x) const {
    if (!samples_) return fn_(x);
    const UniformAxis& ax = samples_->x_axis();
    if (x <= ax.lo) return samples_->at(0);
    if (x >= ax.hi) return samples_->at(ax.count - 1);
    const double s = (x - ax.lo) / ax.spacing();
    std::size_t k = static_cast<std::size_t>(s);
    if (k + 1 >= ax.count) k = ax.count - 2;
    const double frac = s - static_cast<double>(k);
    if (frac == 0.0) return samples_->at(k);
    return (1.0 - frac) * samples_->at(k) + frac * samples_->at(k + 1);
}

std::vector<double> Profile::sample(const UniformAxis& axis) const {
    if (samples_ && samples_->x_axis() == axis) {
        const auto v = samples_->values();
        return {v.begin(), v.end()};
    }
    std::vector<double> out(axis.count);
    for (std::size_t k = 0; k < axis.count; ++k) out[k] = (*this)(axis[k]);
    return out;
}

void WaveProblem::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) throw std::invalid_argument("wave problem: requires b > a");
    if (!std::isfinite(T) || !(T > 0.0)) throw std::invalid_argument("wave problem: requires T > 0");
    if (!std::isfinite(c) || !(c > 0.0)) throw std::invalid_argument("wave problem: requires c > 0");
}

std::vector<std::string> WaveProblem::corner_warnings() const {
    std::vector<std::string> out;
    auto check = [&](const char* which, double fv, double tv) {
        if (std::fabs(fv - tv) > corner_tolerance) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "corner incompatibility at %s: f = %.17g, boundary = %.17g", which, fv, tv);
            out.emplace_back(buf);
        }
    };
    check("x = a", initial_displacement(a), left_boundary(0.0));
    check("x = b", initial_displacement(b), right_boundary(0.0));
    return out;
}

WaveProblem standing_wave_problem(double a, double b, double T, double c) {
    WaveProblem p;
    p.a = a;
    p.b = b;
    p.T = T;
    p.c = c;
    p.initial_displacement = Profile([](double x) { return std::sin(std::numbers::pi * x); });
    p.initial_velocity = Profile(0.0);
    p.left_boundary = Profile(0.0);
    p.right_boundary = Profile(0.0);
    return p;
}

}  // namespace ftwave
