#include "ftwave/simd/kernels.hpp"

#include <arm_neon.h>

#include <cmath>

namespace ftwave::simd::detail {
namespace {

// vmulq/vaddq only; vfmaq would fuse and break equivalence with the scalar kernel.

void wave_step_neon(const double* prev, const double* cur, const double* q, StencilWeights w, double* next,
                    std::size_t n) {
    if (n < 3) return;
    const std::size_t end = n - 1;
    const float64x2_t vn = vdupq_n_f64(w.neighbor);
    const float64x2_t vc = vdupq_n_f64(w.center);
    const float64x2_t vf = vdupq_n_f64(w.force);
    std::size_t i = 1;
    for (; i + 2 <= end; i += 2) {
        const float64x2_t sum = vaddq_f64(vld1q_f64(cur + i - 1), vld1q_f64(cur + i + 1));
        float64x2_t acc = vaddq_f64(vmulq_f64(vn, sum), vmulq_f64(vc, vld1q_f64(cur + i)));
        acc = vsubq_f64(acc, vld1q_f64(prev + i));
        if (q != nullptr) acc = vsubq_f64(acc, vmulq_f64(vf, vld1q_f64(q + i)));
        vst1q_f64(next + i, acc);
    }
    for (; i < end; ++i) {
        double v = (w.neighbor * (cur[i - 1] + cur[i + 1]) + w.center * cur[i]) - prev[i];
        if (q != nullptr) v = v - w.force * q[i];
        next[i] = v;
    }
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) vst1q_f64(y + k, vaddq_f64(vld1q_f64(y + k), vmulq_f64(va, vld1q_f64(x + k))));
    for (; k < n; ++k) y[k] = y[k] + alpha * x[k];
}

void blend_neon(double wa, const double* a, double wb, const double* b, double* out, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(wa);
    const float64x2_t vb = vdupq_n_f64(wb);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2)
        vst1q_f64(out + k, vaddq_f64(vmulq_f64(va, vld1q_f64(a + k)), vmulq_f64(vb, vld1q_f64(b + k))));
    for (; k < n; ++k) out[k] = wa * a[k] + wb * b[k];
}

DiffStats diff_stats_neon(const double* a, const double* b, std::size_t n) {
    // Lanes {0,1} and {2,3} of the 4-lane blocking live in two registers.
    float64x2_t mx[2] = {vdupq_n_f64(0.0), vdupq_n_f64(0.0)};
    float64x2_t sd[2] = {vdupq_n_f64(0.0), vdupq_n_f64(0.0)};
    float64x2_t sr[2] = {vdupq_n_f64(0.0), vdupq_n_f64(0.0)};
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        for (int h = 0; h < 2; ++h) {
            const float64x2_t vb = vld1q_f64(b + k + 2 * h);
            const float64x2_t d = vsubq_f64(vld1q_f64(a + k + 2 * h), vb);
            const float64x2_t ad = vabsq_f64(d);
            mx[h] = vbslq_f64(vcgtq_f64(ad, mx[h]), ad, mx[h]);
            sd[h] = vaddq_f64(sd[h], vmulq_f64(d, d));
            sr[h] = vaddq_f64(sr[h], vmulq_f64(vb, vb));
        }
    }
    double lm[4], ld[4], lr[4];
    vst1q_f64(lm, mx[0]);
    vst1q_f64(lm + 2, mx[1]);
    vst1q_f64(ld, sd[0]);
    vst1q_f64(ld + 2, sd[1]);
    vst1q_f64(lr, sr[0]);
    vst1q_f64(lr + 2, sr[1]);
    for (; k < n; ++k) {
        const std::size_t lane = k & 3u;
        const double d = a[k] - b[k];
        const double ad = std::fabs(d);
        lm[lane] = ad > lm[lane] ? ad : lm[lane];
        ld[lane] = ld[lane] + d * d;
        lr[lane] = lr[lane] + b[k] * b[k];
    }
    DiffStats s;
    const double m01 = lm[0] > lm[1] ? lm[0] : lm[1];
    const double m23 = lm[2] > lm[3] ? lm[2] : lm[3];
    s.max_abs = m01 > m23 ? m01 : m23;
    s.sum_sq_diff = (ld[0] + ld[1]) + (ld[2] + ld[3]);
    s.sum_sq_ref = (lr[0] + lr[1]) + (lr[2] + lr[3]);
    return s;
}

}  // namespace

const KernelTable neon_table{Isa::neon, wave_step_neon, axpy_neon, blend_neon, diff_stats_neon};

}  // namespace ftwave::simd::detail
