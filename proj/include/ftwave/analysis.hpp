#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ftwave/field.hpp"

namespace ftwave {

/// u(x,t) = 0.5 sin(pi(x - t)) + 0.5 sin(pi(x + t)), the standing-wave solution
/// for u(x,0) = sin(pi x), u_t(x,0) = 0 and c = 1.
double exact_solution(double x, double t);

SampledField exact_field(const UniformAxis& xs, const UniformAxis& ts);

struct ErrorReport {
    double max_abs = 0.0;
    double rmse = 0.0;
    double l2_rel = 0.0;  // ||a - b|| / ||b||
    std::size_t n_points = 0;
};

/// Metrics of a against reference b over every shared node.
/// Throws std::invalid_argument when the grids differ.
ErrorReport compare(const SampledField& a, const SampledField& b);

struct RefinementSample {
    double h;
    double error;
};

/// Least-squares slope of log(error) against log(h).
/// Needs >= 3 samples with strictly decreasing h and positive errors.
double convergence_order(std::span<const RefinementSample> samples);

enum class SliceAxis { time, space };

struct Slice {
    SliceAxis axis;
    std::size_t index;  // 0-based node index of the snapped line
    double at;          // snapped coordinate
    std::vector<double> coords;
    std::vector<double> values;
};

/// Grid line nearest to `at`: axis == time returns the row u(., t*) over x,
/// axis == space the column u(x*, .) over t. Throws std::out_of_range.
Slice slice(const SampledField& f, SliceAxis axis, double at);

}  // namespace ftwave
