// ftwave: command-line front end for the F-transform wave solver.

#include <CLI11.hpp>

#include <cmath>

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ftwave/analysis.hpp"
#include "ftwave/config.hpp"
#include "ftwave/error.hpp"
#include "ftwave/experiment.hpp"
#include "ftwave/fd_reference.hpp"
#include "ftwave/field_io.hpp"
#include "ftwave/partition.hpp"
#include "ftwave/simd/kernels.hpp"
#include "ftwave/transform.hpp"
#include "ftwave/wave_ft_solver.hpp"

namespace {

using namespace ftwave;

struct ConfigFlags {
    std::string path;
    std::vector<std::string> sets;
    std::string method;
    bool noise = false;
    std::optional<std::uint64_t> seed;
    std::string out;

    void attach(CLI::App* cmd, bool with_method) {
        cmd->add_option("-c,--config", path, "Experiment config file")->required()->check(CLI::ExistingFile);
        cmd->add_option("--set", sets, "Override a config key (key=value), repeatable");
        if (with_method) cmd->add_option("--method", method, "ft or fd")->check(CLI::IsMember({"ft", "fd"}));
        cmd->add_flag("--noise", noise, "Enable initial-condition noise");
        cmd->add_option("--seed", seed, "Override noise.seed");
        cmd->add_option("-o,--out", out, "Override output.prefix");
    }

    ExperimentConfig load() const {
        std::vector<std::pair<std::string, std::string>> ov;
        for (const std::string& s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + s + "'");
            ov.emplace_back(s.substr(0, eq), s.substr(eq + 1));
        }
        if (!method.empty()) ov.emplace_back("solver.method", method);
        if (noise) ov.emplace_back("noise.enabled", "true");
        if (seed) ov.emplace_back("noise.seed", std::to_string(*seed));
        if (!out.empty()) ov.emplace_back("output.prefix", out);
        return parse_config(read_text_file(path), ov);
    }
};

void print_report(const char* title, const ErrorReport& r) {
    std::cout << "# " << title << '\n' << format_report(r);
}

int cmd_partition_info(double a, double b, std::size_t n) {
    const FuzzyPartition p = FuzzyPartition::uniform(a, b, n);
    std::cout << "a = " << format_double(p.a()) << "\nb = " << format_double(p.b()) << "\nn = " << p.size()
              << "\nh = " << format_double(p.h()) << '\n';

    std::mt19937_64 rng(20240229);
    std::uniform_real_distribution<double> ux(a, b);
    double unity = 0.0;
    for (int s = 0; s < 1000; ++s) {
        const double x = ux(rng);
        const Cover cv = p.cover(x);
        double sum = 0.0;
        for (std::size_t i = cv.lo; i <= cv.hi; ++i) sum += p.basis(i, x);
        unity = std::max(unity, std::abs(sum - 1.0));
    }
    double symmetry = 0.0;
    double shift = 0.0;
    if (n >= 3) {
        // x_i + d is drawn as a double and reflected exactly (d = x+ - x_i is exact),
        // so the two arguments are symmetric about x_i without rounding.
        std::uniform_int_distribution<std::size_t> ui(1, n - 2);
        for (int s = 0; s < 1000; ++s) {
            const std::size_t i = ui(rng);
            const double right = std::uniform_real_distribution<double>(p.node(i), p.node(i + 1))(rng);
            const double d = right - p.node(i);
            symmetry = std::max(symmetry, std::abs(p.basis(i, p.node(i) - d) - p.basis(i, right)));
        }
    }
    if (n >= 4) {
        std::uniform_int_distribution<std::size_t> ui(1, n - 3);
        for (int s = 0; s < 1000; ++s) {
            const std::size_t i = ui(rng);
            const double x = std::uniform_real_distribution<double>(p.node(i), p.node(i + 2))(rng);
            shift = std::max(shift, std::abs(p.basis(i + 1, x) - p.basis(i, x - p.h())));
        }
    }
    auto status = [](double dev, double tol) { return dev < tol ? "ok" : "exceeds"; };
    std::cout << "partition_of_unity_max_dev = " << format_double(unity) << " (" << status(unity, 1e-12)
              << " at 1e-12)\nsymmetry_max_dev = " << format_double(symmetry) << " (" << status(symmetry, 1e-14)
              << " at 1e-14)\nshift_max_dev = " << format_double(shift) << " (" << status(shift, 1e-14)
              << " at 1e-14; x - h is rounded, floor ~ ulp(b)/h = " << format_double((std::nextafter(std::fabs(b), INFINITY) - std::fabs(b)) / p.h())
              << ")\n";
    return 0;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"F-transform solver for the 1D wave equation with noisy initial data"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kCreatedBy);
    std::string isa;
    app.add_option("--isa", isa, "Force a kernel variant (scalar, avx2, neon)");

    // partition-info
    auto* pinfo = app.add_subcommand("partition-info", "Print a uniform fuzzy partition and check its axioms");
    double pa = 0.0, pb = 10.0;
    std::size_t pn = 401;
    pinfo->add_option("--a", pa, "Left endpoint");
    pinfo->add_option("--b", pb, "Right endpoint");
    pinfo->add_option("-n,--n", pn, "Number of nodes");

    // transform / denoise
    std::string in_path, out_path;
    std::size_t tnx = 0, tnt = 0;
    auto* tr = app.add_subcommand("transform", "Forward F-transform of a field file");
    auto* dn = app.add_subcommand("denoise", "Forward then inverse F-transform of a field file");
    for (auto* cmd : {tr, dn}) {
        cmd->add_option("-i,--in", in_path, "Input field file")->required();
        cmd->add_option("-o,--out", out_path, "Output file")->required();
        cmd->add_option("--n-x", tnx, "Space partition nodes")->required();
        cmd->add_option("--n-t", tnt, "Time partition nodes (2D fields)");
    }

    ConfigFlags solve_flags, run_flags, conv_flags;
    auto* sv = app.add_subcommand("solve", "Solve the configured problem with the FT or FD method");
    solve_flags.attach(sv, true);
    auto* rn = app.add_subcommand("run", "Reference, noisy FD and FT solutions with reports and slices");
    run_flags.attach(rn, false);
    auto* cv = app.add_subcommand("convergence", "Joint-refinement study against the exact solution");
    conv_flags.attach(cv, false);
    std::vector<std::size_t> levels{51, 101, 201, 401};
    std::size_t probe = 2001;
    cv->add_option("--levels", levels, "n_x values")->delimiter(',');
    cv->add_option("--probe", probe, "Probe points per axis for the uniform error");

    std::vector<std::string> cmp_paths;
    auto* cp = app.add_subcommand("compare", "Error report of field A against reference B");
    cp->add_option("files", cmp_paths, "A B")->required()->expected(2);
    std::string cmp_out;
    cp->add_option("-o,--out", cmp_out, "Write the report to a file");

    std::string slice_axis, slice_in, slice_out;
    double slice_at = 0.0;
    auto* sl = app.add_subcommand("slice", "Extract the grid line nearest to a time or space coordinate");
    sl->add_option("-i,--in", slice_in, "Field file")->required();
    sl->add_option("--axis", slice_axis, "t or x")->required()->check(CLI::IsMember({"t", "x"}));
    sl->add_option("--at", slice_at, "Coordinate")->required();
    sl->add_option("-o,--out", slice_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(ExitCode::config);
    }

    if (!isa.empty()) {
        bool found = false;
        for (auto v : {simd::Isa::scalar, simd::Isa::avx2, simd::Isa::neon})
            if (isa == simd::isa_name(v)) simd::select_isa(v), found = true;
        if (!found) throw ConfigError("unknown ISA '" + isa + "'");
    }

    if (*pinfo) return cmd_partition_info(pa, pb, pn);

    if (*tr || *dn) {
        const FieldFile ff = read_field(in_path);
        const SampledField& f = ff.field;
        const FuzzyPartition px = FuzzyPartition::uniform(f.x_axis().lo, f.x_axis().hi, tnx);
        std::optional<FuzzyPartition> pt;
        if (!f.is_1d()) {
            if (tnt == 0) throw ConfigError("--n-t is required for a 2D field");
            pt = FuzzyPartition::uniform(f.t_axis().lo, f.t_axis().hi, tnt);
        }
        FieldMetadata meta = ff.meta;
        meta.created_by.clear();
        if (*tr) {
            write_components(out_path, pt ? ftransform_2d(f, px, *pt) : ftransform_1d(f, px), meta);
        } else {
            meta.kind = "field";
            write_field(out_path, pt ? denoise(f, px, *pt) : denoise(f, px), meta);
        }
        return 0;
    }

    if (*sv) {
        const ExperimentConfig cfg = solve_flags.load();
        const bool noisy = cfg.noise.has_value();
        std::cout << "r = " << format_double(cfg.courant()) << '\n';
        if (cfg.method == Method::ft) {
            const FTWaveSolution sol = run_ft(cfg, noisy);
            for (const auto& w : sol.warnings) std::cerr << "warning: " << w << '\n';
            const std::string comps = cfg.output_prefix + "ft_components.field";
            const std::string field = cfg.output_prefix + "ft_solution.field";
            write_components(comps, sol.U, solution_metadata(cfg, noisy));
            write_field(field, reconstruct(sol, coarse_x(cfg), coarse_t(cfg)), solution_metadata(cfg, noisy));
            std::cout << comps << '\n' << field << '\n';
        } else {
            const std::string field = cfg.output_prefix + "fd_solution.field";
            write_field(field, run_fd(cfg, noisy), solution_metadata(cfg, noisy));
            std::cout << field << '\n';
        }
        return 0;
    }

    if (*rn) {
        const ExperimentConfig cfg = run_flags.load();
        std::cout << "r = " << format_double(cfg.courant()) << '\n';
        const ExperimentResult res = run_experiment(cfg);
        for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';
        print_report("noisy FD vs reference", res.noisy_report);
        print_report("FT vs reference", res.ft_report);
        for (const auto& p : write_experiment(cfg, res)) std::cout << "wrote " << p << '\n';
        return 0;
    }

    if (*cv) {
        const ExperimentConfig cfg = conv_flags.load();
        const auto rows = convergence_study(cfg, levels, probe);
        std::cout << "# n_x n_t h node_error probe_error\n";
        std::vector<RefinementSample> nodes, probes;
        for (const auto& r : rows) {
            std::cout << r.n_x << ' ' << r.n_t << ' ' << format_double(r.h) << ' ' << format_double(r.node_error)
                      << ' ' << format_double(r.probe_error) << '\n';
            nodes.push_back({r.h, r.node_error});
            probes.push_back({r.h, r.probe_error});
        }
        if (rows.size() >= 3) {
            std::cout << "node_order = " << format_double(convergence_order(nodes)) << '\n'
                      << "probe_order = " << format_double(convergence_order(probes)) << '\n';
        }
        return 0;
    }

    if (*cp) {
        const FieldFile a = read_field(cmp_paths[0]);
        const FieldFile b = read_field(cmp_paths[1]);
        const std::string text = format_report(compare(a.field, b.field));
        if (cmp_out.empty())
            std::cout << text;
        else
            write_text_file(cmp_out, text);
        return 0;
    }

    if (*sl) {
        const FieldFile f = read_field(slice_in);
        const Slice s = slice(f.field, slice_axis == "t" ? SliceAxis::time : SliceAxis::space, slice_at);
        if (slice_out.empty())
            std::cout << format_slice(s);
        else
            write_slice(slice_out, s);
        return 0;
    }
    return static_cast<int>(ExitCode::failure);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ftwave::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(e.code());
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ftwave::ExitCode::config);
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ftwave::ExitCode::config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ftwave::ExitCode::failure);
    }
}
