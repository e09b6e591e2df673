#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ftwave/field.hpp"
#include "ftwave/wave_problem.hpp"

namespace ftwave {

/// Pointwise inputs of the classical centred march.
struct FdMarchInput {
    UniformAxis x;
    UniformAxis t;
    double c = 1.0;
    std::vector<double> initial;   // u(x_k, 0)
    std::vector<double> velocity;  // u_t(x_k, 0)
    std::vector<double> left;      // u(a, t_l)
    std::vector<double> right;     // u(b, t_l)
    Forcing force;                 // empty means q == 0
    /// Keep every keep_x-th sample of every keep_t-th level (both ends kept).
    std::size_t keep_x = 1;
    std::size_t keep_t = 1;
};

/// Explicit centred scheme with three time levels in memory; stores only the
/// kept levels. Throws StabilityError and NumericalError.
SampledField fd_march(const FdMarchInput& in);

/// Samples the problem pointwise on an nx x nt grid and marches it.
/// `keep_x`/`keep_t` decimate the stored result while marching.
SampledField fd_solve(const WaveProblem& prob, std::size_t nx, std::size_t nt, std::size_t keep_x = 1,
                      std::size_t keep_t = 1);

/// Every factor-th sample along each axis, both ends included.
/// Throws std::invalid_argument unless the factors divide (count - 1).
SampledField decimate(const SampledField& f, std::size_t factor_x, std::size_t factor_t = 1);

}  // namespace ftwave
