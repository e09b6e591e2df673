// Compiled with -mavx2 only (no -mfma): every lane evaluates the scalar
// expression tree with separate multiplies and adds.
#include "ftwave/simd/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace ftwave::simd::detail {
namespace {

void wave_step_avx2(const double* prev, const double* cur, const double* q, StencilWeights w, double* next,
                    std::size_t n) {
    if (n < 3) return;
    const std::size_t end = n - 1;
    const __m256d vn = _mm256_set1_pd(w.neighbor);
    const __m256d vc = _mm256_set1_pd(w.center);
    const __m256d vf = _mm256_set1_pd(w.force);
    std::size_t i = 1;
    for (; i + 4 <= end; i += 4) {
        const __m256d left = _mm256_loadu_pd(cur + i - 1);
        const __m256d right = _mm256_loadu_pd(cur + i + 1);
        const __m256d mid = _mm256_loadu_pd(cur + i);
        __m256d acc = _mm256_add_pd(_mm256_mul_pd(vn, _mm256_add_pd(left, right)), _mm256_mul_pd(vc, mid));
        acc = _mm256_sub_pd(acc, _mm256_loadu_pd(prev + i));
        if (q != nullptr) acc = _mm256_sub_pd(acc, _mm256_mul_pd(vf, _mm256_loadu_pd(q + i)));
        _mm256_storeu_pd(next + i, acc);
    }
    for (; i < end; ++i) {
        double v = (w.neighbor * (cur[i - 1] + cur[i + 1]) + w.center * cur[i]) - prev[i];
        if (q != nullptr) v = v - w.force * q[i];
        next[i] = v;
    }
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4)
        _mm256_storeu_pd(y + k, _mm256_add_pd(_mm256_loadu_pd(y + k), _mm256_mul_pd(va, _mm256_loadu_pd(x + k))));
    for (; k < n; ++k) y[k] = y[k] + alpha * x[k];
}

void blend_avx2(double wa, const double* a, double wb, const double* b, double* out, std::size_t n) {
    const __m256d va = _mm256_set1_pd(wa);
    const __m256d vb = _mm256_set1_pd(wb);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4)
        _mm256_storeu_pd(out + k, _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(a + k)),
                                                _mm256_mul_pd(vb, _mm256_loadu_pd(b + k))));
    for (; k < n; ++k) out[k] = wa * a[k] + wb * b[k];
}

DiffStats diff_stats_avx2(const double* a, const double* b, std::size_t n) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d mx = _mm256_setzero_pd();
    __m256d sd = _mm256_setzero_pd();
    __m256d sr = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d vb = _mm256_loadu_pd(b + k);
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + k), vb);
        const __m256d ad = _mm256_andnot_pd(sign, d);
        // (ad > mx) ? ad : mx, matching the scalar select (NaN keeps mx).
        mx = _mm256_blendv_pd(mx, ad, _mm256_cmp_pd(ad, mx, _CMP_GT_OQ));
        sd = _mm256_add_pd(sd, _mm256_mul_pd(d, d));
        sr = _mm256_add_pd(sr, _mm256_mul_pd(vb, vb));
    }
    alignas(32) double lm[4], ld[4], lr[4];
    _mm256_store_pd(lm, mx);
    _mm256_store_pd(ld, sd);
    _mm256_store_pd(lr, sr);
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

const KernelTable avx2_table{Isa::avx2, wave_step_avx2, axpy_avx2, blend_avx2, diff_stats_avx2};

}  // namespace ftwave::simd::detail
