#include "ftwave/wave_ft_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ftwave/error.hpp"

namespace ftwave {

double check_stability(double c, double hx, double ht) {
    if (!(c > 0.0) || !(hx > 0.0) || !(ht > 0.0) || !std::isfinite(c) || !std::isfinite(hx) || !std::isfinite(ht))
        throw std::invalid_argument("stability check: c, hx and ht must be positive and finite");
    const double r = c * ht / hx;
    if (r > 1.0) throw StabilityError(r);
    return r;
}

StencilCoefficients StencilCoefficients::make(double c, double hx, double ht) {
    const double r = check_stability(c, hx, ht);
    const double r2 = r * r;
    return {r, r2, 2.0 * (1.0 - r2), c * c * ht * ht, ht};
}

namespace {

void require_interval(const FuzzyPartition& p, double lo, double hi, const char* what) {
    if (p.a() != lo || p.b() != hi)
        throw std::invalid_argument(std::string(what) + " partition does not cover the problem domain");
}

std::vector<double> transform_profile(const Profile& prof, const FuzzyPartition& p, std::size_t refine) {
    const UniformAxis axis = UniformAxis::make(p.a(), p.b(), p.size()).refined(refine);
    const SampledField* native = prof.samples();
    const FTComponents c = native ? ftransform_1d(*native, p) : ftransform_1d(SampledField(axis, prof.sample(axis)), p);
    return {c.values().begin(), c.values().end()};
}

void require_finite_row(std::span<const double> row, std::size_t j) {
    for (std::size_t i = 0; i < row.size(); ++i)
        if (!std::isfinite(row[i])) throw NumericalError(i + 1, j + 1);
}

}  // namespace

TransformedConditions transform_conditions(const WaveProblem& prob, const FuzzyPartition& px,
                                           const FuzzyPartition& pt, const ConditionSampling& sampling) {
    prob.validate();
    require_interval(px, prob.a, prob.b, "space");
    require_interval(pt, 0.0, prob.T, "time");
    if (sampling.refine == 0 || sampling.force_refine == 0)
        throw std::invalid_argument("condition sampling: refinement must be >= 1");

    TransformedConditions out;
    out.F = transform_profile(prob.initial_displacement, px, sampling.refine);
    out.G = transform_profile(prob.initial_velocity, px, sampling.refine);
    out.T1 = transform_profile(prob.left_boundary, pt, sampling.refine);
    out.T2 = transform_profile(prob.right_boundary, pt, sampling.refine);
    if (prob.force) {
        const UniformAxis xs = UniformAxis::make(px.a(), px.b(), px.size()).refined(sampling.force_refine);
        const UniformAxis ts = UniformAxis::make(pt.a(), pt.b(), pt.size()).refined(sampling.force_refine);
        out.Q = ftransform_2d(SampledField::sample(xs, ts, prob.force), px, pt);
    }
    return out;
}

void step(std::span<const double> prev, std::span<const double> cur, std::span<const double> q,
          const StencilCoefficients& k, double left_next, double right_next, std::span<double> next) {
    const std::size_t n = cur.size();
    if (n < 2 || prev.size() != n || next.size() != n || (!q.empty() && q.size() != n))
        throw std::invalid_argument("step: vectors must share a length >= 2");
    simd::wave_step(prev, cur, q, k.weights(), next);
    next[0] = left_next;
    next[n - 1] = right_next;
}

std::vector<double> step(std::span<const double> prev, std::span<const double> cur, std::span<const double> q,
                         const StencilCoefficients& k, double left_next, double right_next) {
    std::vector<double> next(cur.size());
    step(prev, cur, q, k, left_next, right_next, next);
    return next;
}

std::vector<double> init_first_step(std::span<const double> F, std::span<const double> G,
                                    std::span<const double> q0, const StencilCoefficients& k, double left_1,
                                    double right_1) {
    const std::size_t n = F.size();
    if (n < 2 || G.size() != n || (!q0.empty() && q0.size() != n))
        throw std::invalid_argument("init_first_step: vectors must share a length >= 2");
    std::vector<double> out(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double bracket = k.r2 * (F[i - 1] + F[i + 1]) + k.center * F[i];
        if (!q0.empty()) bracket = bracket - k.force_scale * q0[i];
        out[i] = 0.5 * bracket + k.ht * G[i];
    }
    out[0] = left_1;
    out[n - 1] = right_1;
    return out;
}

FTWaveSolution march(const TransformedConditions& cond, const FuzzyPartition& px, const FuzzyPartition& pt,
                     double c) {
    const StencilCoefficients k = StencilCoefficients::make(c, px.h(), pt.h());
    const std::size_t n = px.size();
    const std::size_t m = pt.size();
    if (cond.F.size() != n || cond.G.size() != n || cond.T1.size() != m || cond.T2.size() != m)
        throw std::invalid_argument("march: condition vectors do not match the partitions");
    if (cond.Q && (cond.Q->n() != n || cond.Q->m() != m))
        throw std::invalid_argument("march: force components do not match the partitions");

    std::vector<double> U(n * m);
    auto row = [&](std::size_t j) { return std::span<double>(U).subspan(j * n, n); };
    auto qrow = [&](std::size_t j) { return cond.Q ? cond.Q->row(j) : std::span<const double>{}; };

    // Boundary components win over F at the corners.
    std::copy(cond.F.begin(), cond.F.end(), row(0).begin());
    row(0)[0] = cond.T1[0];
    row(0)[n - 1] = cond.T2[0];
    require_finite_row(row(0), 0);
    if (m > 1) {
        const auto first = init_first_step(row(0), cond.G, qrow(0), k, cond.T1[1], cond.T2[1]);
        std::copy(first.begin(), first.end(), row(1).begin());
        require_finite_row(row(1), 1);
    }
    for (std::size_t j = 1; j + 1 < m; ++j) {
        step(row(j - 1), row(j), qrow(j), k, cond.T1[j + 1], cond.T2[j + 1], row(j + 1));
        require_finite_row(row(j + 1), j + 1);
    }
    return FTWaveSolution{FTComponents(px, pt, std::move(U)), k.r, {}};
}

FTWaveSolution solve(const WaveProblem& prob, const FuzzyPartition& px, const FuzzyPartition& pt,
                     const ConditionSampling& sampling) {
    prob.validate();
    require_interval(px, prob.a, prob.b, "space");
    require_interval(pt, 0.0, prob.T, "time");
    // Refuse before spending time on the transforms.
    check_stability(prob.c, px.h(), pt.h());
    FTWaveSolution sol = march(transform_conditions(prob, px, pt, sampling), px, pt, prob.c);
    sol.warnings = prob.corner_warnings();
    return sol;
}

SampledField reconstruct(const FTWaveSolution& sol, const UniformAxis& xs, const UniformAxis& ts) {
    return inverse_ftransform_2d(sol.U, xs, ts);
}

}  // namespace ftwave
