#include "ftwave/experiment.hpp"

#include <cmath>
#include <numbers>

#include "ftwave/error.hpp"
#include "ftwave/fd_reference.hpp"
#include "ftwave/noise.hpp"
#include "ftwave/transform.hpp"

namespace ftwave {

UniformAxis coarse_x(const ExperimentConfig& cfg) { return UniformAxis::make(cfg.a, cfg.b, cfg.n_x); }
UniformAxis coarse_t(const ExperimentConfig& cfg) { return UniformAxis::make(0.0, cfg.T, cfg.n_t); }
UniformAxis fine_x(const ExperimentConfig& cfg) { return coarse_x(cfg).refined(cfg.fd_refine); }
UniformAxis fine_t(const ExperimentConfig& cfg) { return coarse_t(cfg).refined(cfg.fd_refine); }

WaveProblem make_problem(const ExperimentConfig& cfg, bool noisy) {
    WaveProblem p = standing_wave_problem(cfg.a, cfg.b, cfg.T, cfg.c);
    if (noisy && cfg.noise) {
        const UniformAxis xs = fine_x(cfg);
        p.initial_displacement =
            Profile(SampledField(xs, add_sine_noise(xs.coordinates(), *cfg.noise, std::numbers::pi)));
    }
    return p;
}

SampledField run_fd(const ExperimentConfig& cfg, bool noisy) {
    check_stability(cfg.c, cfg.hx(), cfg.ht());
    const WaveProblem p = make_problem(cfg, noisy);
    return fd_solve(p, fine_x(cfg).count, fine_t(cfg).count, cfg.fd_refine, cfg.fd_refine);
}

FTWaveSolution run_ft(const ExperimentConfig& cfg, bool noisy) {
    const WaveProblem p = make_problem(cfg, noisy);
    const FuzzyPartition px = FuzzyPartition::uniform(cfg.a, cfg.b, cfg.n_x);
    const FuzzyPartition pt = FuzzyPartition::uniform(0.0, cfg.T, cfg.n_t);
    ConditionSampling sampling;
    sampling.refine = cfg.fd_refine;
    return solve(p, px, pt, sampling);
}

std::span<const SliceRequest> standard_slices() noexcept {
    static constexpr SliceRequest kSlices[] = {
        {SliceAxis::time, 3.63, "t3.63"},
        {SliceAxis::space, 9.08, "x9.08"},
        {SliceAxis::time, 5.45, "t5.45"},
        {SliceAxis::space, 4.54, "x4.54"},
    };
    return kSlices;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    check_stability(cfg.c, cfg.hx(), cfg.ht());
    SampledField reference = run_fd(cfg, false);
    SampledField noisy = cfg.noise ? run_fd(cfg, true) : reference;
    FTWaveSolution sol = run_ft(cfg, true);
    SampledField ft = reconstruct(sol, coarse_x(cfg), coarse_t(cfg));
    const ErrorReport noisy_report = compare(noisy, reference);
    const ErrorReport ft_report = compare(ft, reference);
    std::vector<std::string> warnings = sol.warnings;
    return ExperimentResult{std::move(reference), std::move(noisy), std::move(ft), std::move(sol),
                            noisy_report,         ft_report,        std::move(warnings)};
}

FieldMetadata solution_metadata(const ExperimentConfig& cfg, bool noisy) {
    FieldMetadata m;
    m.c = cfg.c;
    if (noisy && cfg.noise) {
        m.seed = cfg.noise->seed;
        m.generator = std::string(kNoiseGenerator);
    }
    return m;
}

std::vector<std::string> write_experiment(const ExperimentConfig& cfg, const ExperimentResult& res) {
    const std::string& pre = cfg.output_prefix;
    std::vector<std::string> paths;
    auto field = [&](const std::string& name, const SampledField& f, bool noisy) {
        paths.push_back(pre + name);
        write_field(paths.back(), f, solution_metadata(cfg, noisy));
    };
    paths.push_back(pre + "config.cfg");
    write_text_file(paths.back(), format_config(cfg));
    field("fd_reference.field", res.reference, false);
    field("fd_noisy.field", res.noisy, true);
    field("ft_solution.field", res.ft, true);
    paths.push_back(pre + "ft_components.field");
    write_components(paths.back(), res.ft_solution.U, solution_metadata(cfg, true));
    paths.push_back(pre + "report_fd_noisy.txt");
    write_text_file(paths.back(), format_report(res.noisy_report));
    paths.push_back(pre + "report_ft.txt");
    write_text_file(paths.back(), format_report(res.ft_report));

    const struct {
        const char* name;
        const SampledField* f;
    } sources[] = {{"reference", &res.reference}, {"noisy", &res.noisy}, {"ft", &res.ft}};
    for (const SliceRequest& req : standard_slices()) {
        const UniformAxis& ax = req.axis == SliceAxis::time ? res.reference.t_axis() : res.reference.x_axis();
        if (req.at < ax.lo || req.at > ax.hi) continue;
        for (const auto& src : sources) {
            paths.push_back(pre + "slice_" + req.tag + "_" + src.name + ".dat");
            write_slice(paths.back(), slice(*src.f, req.axis, req.at));
        }
    }
    return paths;
}

std::vector<ConvergenceLevel> convergence_study(const ExperimentConfig& cfg, std::span<const std::size_t> n_x_levels,
                                                std::size_t probe_points) {
    cfg.validate();
    if (cfg.c != 1.0) throw ConfigError("convergence: the exact standing-wave solution assumes domain.c = 1");
    const std::size_t num = cfg.n_t - 1;
    const std::size_t den = cfg.n_x - 1;
    std::vector<ConvergenceLevel> out;
    for (std::size_t nx : n_x_levels) {
        if (nx < 2 || ((nx - 1) * num) % den != 0)
            throw ConfigError("convergence: n_x = " + std::to_string(nx) + " cannot hold r fixed");
        ExperimentConfig level = cfg;
        level.n_x = nx;
        level.n_t = (nx - 1) * num / den + 1;
        level.noise.reset();
        const FTWaveSolution sol = run_ft(level, false);

        const UniformAxis xs = coarse_x(level);
        const UniformAxis ts = coarse_t(level);
        const SampledField nodes(xs, ts, std::vector<double>(sol.U.values().begin(), sol.U.values().end()));
        const double node_error = compare(nodes, exact_field(xs, ts)).max_abs;

        const UniformAxis px = UniformAxis::make(cfg.a, cfg.b, probe_points);
        const UniformAxis pt = UniformAxis::make(0.0, cfg.T, probe_points);
        const double probe_error = compare(reconstruct(sol, px, pt), exact_field(px, pt)).max_abs;
        out.push_back({level.n_x, level.n_t, level.hx(), node_error, probe_error});
    }
    return out;
}

}  // namespace ftwave
