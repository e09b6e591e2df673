#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ftwave/field.hpp"

namespace ftwave {

/// A function of one variable, given either as a callable or as samples.
///
/// Sampled profiles are evaluated between samples by linear interpolation;
/// asked for values on their own axis they return the samples verbatim.
class Profile {
public:
    Profile() : Profile(0.0) {}
    explicit Profile(double constant);
    explicit Profile(std::function<double(double)> fn) : fn_(std::move(fn)) {}
    explicit Profile(SampledField samples);

    double operator()(double x) const;
    std::vector<double> sample(const UniformAxis& axis) const;

    /// Native samples when the profile is sampled, else nullptr.
    const SampledField* samples() const noexcept { return samples_.get(); }
    /// True only for profiles built from the constant 0.
    bool is_zero() const noexcept { return zero_; }

private:
    std::function<double(double)> fn_;
    std::shared_ptr<const SampledField> samples_;  // shared: copies of a problem share the samples
    bool zero_ = false;
};

using Forcing = std::function<double(double, double)>;

/// u_xx - u_tt / c^2 = q on [a, b] x [0, T] with
/// u(x,0) = f, u_t(x,0) = g, u(a,t) = T1, u(b,t) = T2.
struct WaveProblem {
    double a = 0.0;
    double b = 10.0;
    double T = 10.0;
    double c = 1.0;
    Profile initial_displacement;
    Profile initial_velocity;
    Profile left_boundary;
    Profile right_boundary;
    /// Empty means q == 0.
    Forcing force;
    double corner_tolerance = 1e-9;

    /// Throws std::invalid_argument for a degenerate domain or non-positive c.
    void validate() const;

    /// Corner incompatibility messages (f(a) vs T1(0), f(b) vs T2(0)); empty when compatible.
    std::vector<std::string> corner_warnings() const;
};

/// u(x,0) = sin(pi x), u_t(x,0) = 0, u = 0 at both ends.
WaveProblem standing_wave_problem(double a, double b, double T, double c);

}  // namespace ftwave
