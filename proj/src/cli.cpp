#include "qwom/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qwom/csv_io.hpp"
#include "qwom/ensemble.hpp"
#include "qwom/error.hpp"
#include "qwom/observables.hpp"
#include "qwom/presets.hpp"
#include "qwom/scenario_io.hpp"
#include "qwom/simulate.hpp"
#include "qwom/svg_plot.hpp"
#include "qwom/version.hpp"

namespace fs = std::filesystem;

namespace qwom {

namespace {

std::string default_out_dir() {
    const char* env = std::getenv("QWOM_OUT_DIR");
    return env != nullptr && *env != '\0' ? env : ".";
}

struct IntegratorFlags {
    std::string method;
    double h = -1.0, rel_tol = -1.0, abs_tol = -1.0;
    double t_end = -1.0, sample_dt = -1.0;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--method", method,
                       "RK4Fixed | RK45Adaptive | EulerMaruyama");
        cmd.add_option("--h", h, "step size");
        cmd.add_option("--rel-tol", rel_tol, "adaptive relative tolerance");
        cmd.add_option("--abs-tol", abs_tol, "adaptive absolute tolerance");
        cmd.add_option("--t-end", t_end, "end of the scaled-time window");
        cmd.add_option("--sample-dt", sample_dt, "output sampling interval");
    }

    void apply(Scenario& sc) const {
        if (!method.empty()) sc.integrator.method = method_from_string(method);
        if (h > 0.0) sc.integrator.h = h;
        if (rel_tol > 0.0) sc.integrator.rel_tol = rel_tol;
        if (abs_tol > 0.0) sc.integrator.abs_tol = abs_tol;
        if (t_end > 0.0) sc.t_end = t_end;
        if (sample_dt > 0.0) sc.sample_dt = sample_dt;
        validate(sc);
    }
};

Scenario resolve_scenario(const std::string& target) {
    return is_preset(target) ? preset(target) : load_scenario(target);
}

void execute(const Scenario& sc, const fs::path& out_dir, unsigned workers) {
    fs::create_directories(out_dir);
    if (sc.backend == Backend::Ensemble) {
        const EnsembleResult res = run_ensemble(sc, workers);
        write_csv(res.mean_series, sc, out_dir / (sc.name + ".csv"));
        write_csv(res.stderr_series, sc,
                  out_dir / (sc.name + "_stderr.csv"));
        std::cout << "wrote " << (out_dir / (sc.name + ".csv")).string()
                  << " (+sidecar, +stderr), n_traj=" << res.n_traj << "\n";
    } else {
        const TimeSeries series = run_deterministic(sc);
        write_csv(series, sc, out_dir / (sc.name + ".csv"));
        std::cout << "wrote " << (out_dir / (sc.name + ".csv")).string()
                  << " (+sidecar), " << series.size() << " samples, "
                  << series.step_count << " steps\n";
    }
}

std::string x_axis_label(const Scenario& sc) {
    return sc.params.reference_rate_label == "omega_m" ? "ω_m t"
                                                       : "γt";
}

int run_impl(const std::vector<std::string>& args) {
    CLI::App app{"Coupled exciton-cavity-mirror dynamics under periodic "
                 "modulation"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string target, out_dir = default_out_dir();
    unsigned workers = 1;
    std::uint64_t seed = 0;
    std::string backend;
    IntegratorFlags flags;

    auto* run = app.add_subcommand("run", "integrate a preset or scenario file");
    run->add_option("target", target, "preset name or scenario file")
        ->required();
    run->add_option("--out,-o", out_dir, "output directory");
    run->add_option("--workers", workers, "ensemble worker threads");
    run->add_option("--seed", seed, "root seed");
    run->add_option("--backend", backend, "MeanField | Moments | Ensemble");
    flags.add_to(*run);

    std::string sweep_target, sweep_out;
    unsigned sweep_workers = 1;
    auto* sweep = app.add_subcommand(
        "sweep", "run a sweep file or a preset's modulation-amplitude pair");
    sweep->add_option("target", sweep_target, "sweep file or preset name")
        ->required();
    sweep->add_option("--out,-o", sweep_out, "output directory");
    sweep->add_option("--workers", sweep_workers, "ensemble worker threads");

    auto* list = app.add_subcommand("list-presets", "list preset names");

    std::string plot_csv, plot_out, plot_channels = "A,B,q,p";
    auto* plot = app.add_subcommand("plot", "render a CSV as SVG line plots");
    plot->add_option("csv", plot_csv, "CSV file written by run")->required();
    plot->add_option("--out,-o", plot_out, "SVG output path");
    plot->add_option("--channels", plot_channels, "comma-separated channels");

    std::string validate_file;
    auto* val = app.add_subcommand("validate", "check a scenario file");
    val->add_option("file", validate_file, "scenario file")->required();

    auto* defaults = app.add_subcommand("defaults", "print all defaults");

    std::vector<const char*> argv;
    argv.push_back("qwom");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (run->parsed()) {
        Scenario sc = resolve_scenario(target);
        if (!backend.empty()) sc.backend = backend_from_string(backend);
        if (run->count("--seed") > 0) sc.seed = seed;
        flags.apply(sc);
        execute(sc, out_dir, workers);
        return 0;
    }

    if (sweep->parsed()) {
        SweepSpec spec;
        if (is_preset(sweep_target)) {
            spec.base = preset(sweep_target);
            spec.axes.emplace_back(preset_sweep_key(sweep_target),
                                   preset_modulation_sweep(sweep_target));
        } else {
            spec = load_sweep(sweep_target);
        }
        fs::path out = !sweep_out.empty()
                           ? fs::path(sweep_out)
                           : (!spec.output_dir.empty()
                                  ? fs::path(spec.output_dir)
                                  : fs::path(default_out_dir()));
        for (const SweepEntry& entry : expand_sweep(spec)) {
            execute(entry.scenario, out, sweep_workers);
        }
        return 0;
    }

    if (list->parsed()) {
        for (const auto& name : preset_names()) std::cout << name << "\n";
        return 0;
    }

    if (plot->parsed()) {
        const TimeSeries series = read_csv(plot_csv);
        std::string x_label = "t";
        fs::path sidecar = fs::path(plot_csv).replace_extension(".json");
        if (fs::exists(sidecar)) {
            x_label = x_axis_label(scenario_from_sidecar(sidecar));
        }
        std::vector<std::string> channels;
        std::string item;
        std::istringstream cs(plot_channels);
        while (std::getline(cs, item, ',')) channels.push_back(item);
        fs::path out = !plot_out.empty()
                           ? fs::path(plot_out)
                           : fs::path(plot_csv).replace_extension(".svg");
        write_svg_plot(series, channels, x_label, out);
        std::cout << "wrote " << out.string() << "\n";
        return 0;
    }

    if (val->parsed()) {
        load_scenario(validate_file);
        std::cout << "OK: " << validate_file << "\n";
        return 0;
    }

    if (defaults->parsed()) {
        std::cout << "# scenario defaults\n"
                  << write_scenario(Scenario{})
                  << "# output directory: " << default_out_dir()
                  << " (env QWOM_OUT_DIR)\n"
                  << "# envelope thresholds: amplified > "
                  << EnvelopeOptions{}.amplified_above << ", damped < "
                  << EnvelopeOptions{}.damped_below << "\n"
                  << "# ensemble workers: 1\n";
        return 0;
    }
    return 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
    try {
        return run_impl(args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qwom
