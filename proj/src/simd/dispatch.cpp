#include "ftwave/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ftwave::simd {

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

const KernelTable* kernels_for(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return &detail::scalar_table;
        case Isa::avx2:
#if defined(FTWAVE_HAVE_AVX2)
            if (__builtin_cpu_supports("avx2")) return &detail::avx2_table;
#endif
            return nullptr;
        case Isa::neon:
#if defined(FTWAVE_HAVE_NEON)
            return &detail::neon_table;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
        if (kernels_for(isa) != nullptr) out.push_back(isa);
    return out;
}

namespace {

const KernelTable* initial_table() noexcept {
    if (const char* env = std::getenv("FTWAVE_ISA")) {
        const std::string_view want(env);
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
            if (want == isa_name(isa))
                if (const KernelTable* t = kernels_for(isa)) return t;
    }
    for (Isa isa : {Isa::avx2, Isa::neon})
        if (const KernelTable* t = kernels_for(isa)) return t;
    return &detail::scalar_table;
}

std::atomic<const KernelTable*>& active_slot() noexcept {
    static std::atomic<const KernelTable*> slot{initial_table()};
    return slot;
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": length mismatch");
}

}  // namespace

const KernelTable& kernels() noexcept { return *active_slot().load(std::memory_order_acquire); }

void select_isa(Isa isa) {
    const KernelTable* t = kernels_for(isa);
    if (t == nullptr) throw std::invalid_argument("ISA not available: " + std::string(isa_name(isa)));
    active_slot().store(t, std::memory_order_release);
}

Isa active_isa() noexcept { return kernels().isa; }

void wave_step(std::span<const double> prev, std::span<const double> cur, std::span<const double> q,
               StencilWeights w, std::span<double> next) {
    require_same_size(prev.size(), cur.size(), "wave_step");
    require_same_size(next.size(), cur.size(), "wave_step");
    if (!q.empty()) require_same_size(q.size(), cur.size(), "wave_step");
    kernels().wave_step(prev.data(), cur.data(), q.empty() ? nullptr : q.data(), w, next.data(), cur.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    require_same_size(x.size(), y.size(), "axpy");
    kernels().axpy(alpha, x.data(), y.data(), x.size());
}

void blend(double wa, std::span<const double> a, double wb, std::span<const double> b, std::span<double> out) {
    require_same_size(a.size(), b.size(), "blend");
    require_same_size(a.size(), out.size(), "blend");
    kernels().blend(wa, a.data(), wb, b.data(), out.data(), a.size());
}

DiffStats diff_stats(std::span<const double> a, std::span<const double> b) {
    require_same_size(a.size(), b.size(), "diff_stats");
    return kernels().diff_stats(a.data(), b.data(), a.size());
}

}  // namespace ftwave::simd
