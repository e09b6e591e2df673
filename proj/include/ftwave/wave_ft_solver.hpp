#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ftwave/field.hpp"
#include "ftwave/partition.hpp"
#include "ftwave/simd/kernels.hpp"
#include "ftwave/transform.hpp"
#include "ftwave/wave_problem.hpp"

namespace ftwave {

/// Courant number r = c*ht/hx. Throws std::invalid_argument for non-positive
/// inputs and StabilityError when r > 1.
double check_stability(double c, double hx, double ht);

/// Coefficients of the explicit three-level recursion shared by the F-transform
/// and finite-difference marches.
struct StencilCoefficients {
    double r;
    double r2;           // r*r
    double center;       // 2*(1 - r2)
    double force_scale;  // c*c*ht*ht
    double ht;

    /// Validates stability via check_stability.
    static StencilCoefficients make(double c, double hx, double ht);

    simd::StencilWeights weights() const noexcept { return {r2, center, force_scale}; }
};

/// F-transformed initial, boundary and force data.
struct TransformedConditions {
    std::vector<double> F;   // of f over px
    std::vector<double> G;   // of g over px
    std::vector<double> T1;  // of T1 over pt
    std::vector<double> T2;  // of T2 over pt
    std::optional<FTComponents> Q;  // absent when q == 0
};

struct ConditionSampling {
    /// Sub-intervals per partition cell used to sample callable profiles.
    std::size_t refine = 8;
    /// Same, for the force q (sampled on a 2D grid).
    std::size_t force_refine = 4;
};

TransformedConditions transform_conditions(const WaveProblem& prob, const FuzzyPartition& px,
                                           const FuzzyPartition& pt, const ConditionSampling& sampling = {});

/// One step of the recursion: interior i gets
///   r2*(cur[i-1] + cur[i+1]) + 2(1-r2)*cur[i] - prev[i] - c^2 ht^2 q[i]
/// and the ends are pinned to the boundary components. `q` may be empty.
void step(std::span<const double> prev, std::span<const double> cur, std::span<const double> q,
          const StencilCoefficients& k, double left_next, double right_next, std::span<double> next);
std::vector<double> step(std::span<const double> prev, std::span<const double> cur, std::span<const double> q,
                         const StencilCoefficients& k, double left_next, double right_next);

/// Second time level with the ghost level eliminated through the centred
/// velocity condition: 0.5*(r2*(F[i-1]+F[i+1]) + 2(1-r2)*F[i] - c^2 ht^2 Q[i]) + ht*G[i].
std::vector<double> init_first_step(std::span<const double> F, std::span<const double> G,
                                    std::span<const double> q0, const StencilCoefficients& k, double left_1,
                                    double right_1);

struct FTWaveSolution {
    FTComponents U;  // time-major n x m component matrix
    double r;
    std::vector<std::string> warnings;

    const FuzzyPartition& px() const noexcept { return U.px(); }
    const FuzzyPartition& pt() const { return U.pt(); }
};

/// Marches the component recursion over all m time levels.
/// Throws StabilityError (r > 1) and NumericalError (non-finite component).
FTWaveSolution solve(const WaveProblem& prob, const FuzzyPartition& px, const FuzzyPartition& pt,
                     const ConditionSampling& sampling = {});

/// Same march starting from already-transformed conditions.
FTWaveSolution march(const TransformedConditions& cond, const FuzzyPartition& px, const FuzzyPartition& pt,
                     double c);

/// Inverse F-transform of the component matrix on a uniform grid.
SampledField reconstruct(const FTWaveSolution& sol, const UniformAxis& xs, const UniformAxis& ts);

}  // namespace ftwave
