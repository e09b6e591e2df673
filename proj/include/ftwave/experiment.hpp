#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ftwave/analysis.hpp"
#include "ftwave/config.hpp"
#include "ftwave/field.hpp"
#include "ftwave/field_io.hpp"
#include "ftwave/wave_ft_solver.hpp"
#include "ftwave/wave_problem.hpp"

namespace ftwave {

/// Standing-wave problem on the configured domain; with `noisy` the initial
/// displacement becomes amplitude/phase-perturbed samples on the refined grid.
WaveProblem make_problem(const ExperimentConfig& cfg, bool noisy);

/// Partition-node grid (n_x by n_t) and the refined finite-difference grid.
UniformAxis coarse_x(const ExperimentConfig& cfg);
UniformAxis coarse_t(const ExperimentConfig& cfg);
UniformAxis fine_x(const ExperimentConfig& cfg);
UniformAxis fine_t(const ExperimentConfig& cfg);

/// Finite-difference solution on the refined grid, decimated to the coarse grid.
SampledField run_fd(const ExperimentConfig& cfg, bool noisy);

/// F-transform solution; refined-grid samples feed the forward transforms.
FTWaveSolution run_ft(const ExperimentConfig& cfg, bool noisy);

/// Slice positions emitted by `run`: time slices at 3.63 s and 5.45 s, space
/// slices at 9.08 m and 4.54 m.
struct SliceRequest {
    SliceAxis axis;
    double at;
    const char* tag;
};
std::span<const SliceRequest> standard_slices() noexcept;

struct ExperimentResult {
    SampledField reference;  // noise-free FD
    SampledField noisy;      // FD from the (possibly) noisy initial condition
    SampledField ft;         // inverse transform of the component solution
    FTWaveSolution ft_solution;
    ErrorReport noisy_report;  // noisy vs reference
    ErrorReport ft_report;     // ft vs reference
    std::vector<std::string> warnings;
};

/// Reference, noisy FD and FT solutions plus their error reports. Deterministic.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Writes every output of run_experiment under cfg.output_prefix and returns the paths.
std::vector<std::string> write_experiment(const ExperimentConfig& cfg, const ExperimentResult& res);

struct ConvergenceLevel {
    std::size_t n_x;
    std::size_t n_t;
    double h;            // hx
    double node_error;   // max over nodes of |u(x_i, t_j) - U_ij|
    double probe_error;  // max over the probe grid of |u - inverse(U)|
};

/// Joint refinement holding r at its configured value. Needs c = 1 (the exact
/// standing-wave solution) and n_t - 1 divisible accordingly at every level.
std::vector<ConvergenceLevel> convergence_study(const ExperimentConfig& cfg, std::span<const std::size_t> n_x_levels,
                                                std::size_t probe_points = 2001);

/// Metadata header for a solution file produced under cfg.
FieldMetadata solution_metadata(const ExperimentConfig& cfg, bool noisy);

}  // namespace ftwave
