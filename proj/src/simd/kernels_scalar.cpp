#include "ftwave/simd/kernels.hpp"

#include <cmath>

namespace ftwave::simd::detail {
namespace {

void wave_step_scalar(const double* prev, const double* cur, const double* q, StencilWeights w, double* next,
                      std::size_t n) {
    if (n < 3) return;
    if (q == nullptr) {
        for (std::size_t i = 1; i + 1 < n; ++i)
            next[i] = (w.neighbor * (cur[i - 1] + cur[i + 1]) + w.center * cur[i]) - prev[i];
    } else {
        for (std::size_t i = 1; i + 1 < n; ++i)
            next[i] = ((w.neighbor * (cur[i - 1] + cur[i + 1]) + w.center * cur[i]) - prev[i]) - w.force * q[i];
    }
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) y[k] = y[k] + alpha * x[k];
}

void blend_scalar(double wa, const double* a, double wb, const double* b, double* out, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) out[k] = wa * a[k] + wb * b[k];
}

DiffStats diff_stats_scalar(const double* a, const double* b, std::size_t n) {
    double mx[4] = {0.0, 0.0, 0.0, 0.0};
    double sd[4] = {0.0, 0.0, 0.0, 0.0};
    double sr[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t lane = k & 3u;
        const double d = a[k] - b[k];
        const double ad = std::fabs(d);
        mx[lane] = ad > mx[lane] ? ad : mx[lane];
        sd[lane] = sd[lane] + d * d;
        sr[lane] = sr[lane] + b[k] * b[k];
    }
    DiffStats s;
    const double m01 = mx[0] > mx[1] ? mx[0] : mx[1];
    const double m23 = mx[2] > mx[3] ? mx[2] : mx[3];
    s.max_abs = m01 > m23 ? m01 : m23;
    s.sum_sq_diff = (sd[0] + sd[1]) + (sd[2] + sd[3]);
    s.sum_sq_ref = (sr[0] + sr[1]) + (sr[2] + sr[3]);
    return s;
}

}  // namespace

const KernelTable scalar_table{Isa::scalar, wave_step_scalar, axpy_scalar, blend_scalar, diff_stats_scalar};

}  // namespace ftwave::simd::detail
