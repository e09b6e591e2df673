#pragma once
// Data-parallel inner loops with a scalar reference and ISA-specific variants.
//
// Every variant produces bitwise-identical results to the scalar kernel:
// element-wise kernels evaluate the same expression tree per lane, and the one
// reduction (diff_stats) uses a fixed 4-lane blocked accumulation in all
// variants. The build disables floating-point contraction so no variant fuses
// a multiply into an add.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace ftwave::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

/// Coefficients of the three-level explicit wave stencil
///   next = ((neighbor*(left + right) + center*mid) - prev) - force*q
struct StencilWeights {
    double neighbor;
    double center;
    double force;
};

struct DiffStats {
    double max_abs = 0.0;
    double sum_sq_diff = 0.0;
    double sum_sq_ref = 0.0;
};

struct KernelTable {
    Isa isa;
    /// Updates next[1..n-2]; q may be null (unforced). next[0], next[n-1] untouched.
    void (*wave_step)(const double* prev, const double* cur, const double* q, StencilWeights w,
                      double* next, std::size_t n);
    /// y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    /// out = wa*a + wb*b
    void (*blend)(double wa, const double* a, double wb, const double* b, double* out, std::size_t n);
    /// max|a-b|, sum (a-b)^2, sum b^2 with 4-lane blocked sums combined as (l0+l1)+(l2+l3).
    DiffStats (*diff_stats)(const double* a, const double* b, std::size_t n);
};

/// Table for `isa`, or nullptr when the ISA is not compiled in or the CPU lacks it.
const KernelTable* kernels_for(Isa isa) noexcept;

std::vector<Isa> available_isas();

/// Active table. Defaults to the best available ISA; the FTWAVE_ISA environment
/// variable (scalar|avx2|neon) overrides the default on first use.
const KernelTable& kernels() noexcept;

/// Throws std::invalid_argument when the ISA is unavailable.
void select_isa(Isa isa);

Isa active_isa() noexcept;

// Span front-ends over the active table.

void wave_step(std::span<const double> prev, std::span<const double> cur, std::span<const double> q,
               StencilWeights w, std::span<double> next);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void blend(double wa, std::span<const double> a, double wb, std::span<const double> b, std::span<double> out);
DiffStats diff_stats(std::span<const double> a, std::span<const double> b);

namespace detail {
extern const KernelTable scalar_table;
#if defined(FTWAVE_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(FTWAVE_HAVE_NEON)
extern const KernelTable neon_table;
#endif
}  // namespace detail

}  // namespace ftwave::simd
