#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nlf/report.hpp"
#include "nlf/verify.hpp"
#include "nlf/version.hpp"

namespace {

using namespace nlf;

struct CommonOverrides {
    std::optional<int> R;
    std::optional<int> dim;
    std::optional<std::string> model;
    std::optional<double> alpha;
    std::optional<double> epsilon;
    std::optional<double> filling;
    std::optional<std::string> normalization;
    std::optional<int> L_min, L_max, L_step;
    std::optional<std::string> csv, svg;
    std::optional<bool> loglinear;
    std::optional<std::uint64_t> seed;
    std::optional<int> workers;
};

void add_common_flags(CLI::App* cmd, std::string& config_path, CommonOverrides& ov) {
    cmd->add_option("-c,--config", config_path, "JSON config file");
    cmd->add_option("--R", ov.R, "lattice extent (overrides config)");
    cmd->add_option("--dim", ov.dim, "lattice dimensionality 1 or 2");
    cmd->add_option("--model", ov.model, "model kind");
    cmd->add_option("--alpha", ov.alpha, "locality scale");
    cmd->add_option("--epsilon", ov.epsilon, "energy scale");
    cmd->add_option("--filling", ov.filling, "occupancy fraction");
    cmd->add_option("--normalization", ov.normalization, "derivative stencil: literal|half|unit");
    cmd->add_option("--L-min", ov.L_min, "sweep lower bound");
    cmd->add_option("--L-max", ov.L_max, "sweep upper bound");
    cmd->add_option("--L-step", ov.L_step, "sweep step");
    cmd->add_option("-o,--out,--csv", ov.csv, "CSV output path");
    cmd->add_option("--svg", ov.svg, "SVG plot path");
    cmd->add_flag("--loglinear", [&ov](std::int64_t) { ov.loglinear = true; },
                  "logarithmic L axis in the plot");
    cmd->add_option("--seed", ov.seed, "RNG seed");
    cmd->add_option("--workers", ov.workers, "parallel sweep workers");
}

ExperimentConfig effective_config(const std::string& config_path, const CommonOverrides& ov) {
    ExperimentConfig config;
    bool have_config = !config_path.empty();
    if (have_config) config = load_config(config_path);

    if (ov.R || ov.dim) {
        const int dim = ov.dim.value_or(have_config ? config.lattice.dim : 1);
        const int R = ov.R.value_or(config.lattice.extent[0]);
        config.lattice = dim == 1 ? LatticeSpec::chain(R) : LatticeSpec::square(R);
    }
    if (ov.model) {
        CurveSpec curve;
        curve.model.kind = model_kind_from_string(*ov.model);
        if (config.curves.size() == 1) curve.model = config.curves[0].model;
        curve.model.kind = model_kind_from_string(*ov.model);
        config.curves.assign(1, curve);
    }
    if (ov.alpha || ov.epsilon || ov.filling || ov.normalization) {
        if (config.curves.empty()) config.curves.emplace_back();
        for (auto& c : config.curves) {
            if (ov.alpha) c.model.alpha = *ov.alpha;
            if (ov.epsilon) c.model.epsilon = *ov.epsilon;
            if (ov.filling) c.model.filling = *ov.filling;
            if (ov.normalization) c.model.norm = normalization_from_string(*ov.normalization);
        }
    }
    for (auto& c : config.curves)
        if (c.label.empty()) c.label = c.model.label();
    if (ov.L_min || ov.L_max) {
        const int lo = ov.L_min.value_or(1);
        const int hi = ov.L_max.value_or(lo);
        const int step = ov.L_step.value_or(1);
        config.sweep_L.clear();
        for (int L = lo; L <= hi; L += step) config.sweep_L.push_back(L);
    }
    if (ov.csv) config.output.csv = *ov.csv;
    if (ov.svg) config.output.svg = *ov.svg;
    if (ov.loglinear) config.output.loglinear = *ov.loglinear;
    if (ov.seed) config.seed = *ov.seed;
    if (ov.workers) config.workers = *ov.workers;

    if (config.curves.empty()) throw ConfigError("no model given (config file or --model)");
    for (const auto& c : config.curves) c.model.validate(config.lattice);
    return config;
}

int cmd_spectrum(const ExperimentConfig& config) {
    if (config.output.csv.empty()) throw ConfigError("spectrum: CSV output path required");
    const auto& spec = config.curves.front().model;
    const auto disp = dispersion(spec, config.lattice);

    std::vector<std::string> columns;
    if (config.lattice.dim == 1)
        columns = {"n", "k"};
    else
        columns = {"n1", "n2", "k1", "k2"};
    if (spec.is_pairing()) {
        columns.push_back("E_plus");
        columns.push_back("E_minus");
    } else {
        columns.push_back("E");
    }
    CsvWriter csv(config.output.csv, config, columns);
    for (const auto& [w, e] : disp) {
        std::vector<double> row;
        if (config.lattice.dim == 1)
            row = {static_cast<double>(w.n[0]), w.k[0]};
        else
            row = {static_cast<double>(w.n[0]), static_cast<double>(w.n[1]), w.k[0], w.k[1]};
        row.push_back(e);
        if (spec.is_pairing()) row.push_back(-e);
        csv.row(row);
    }
    return 0;
}

int cmd_entropy_sweep(const ExperimentConfig& config) {
    if (config.sweep_L.empty()) throw ConfigError("entropy-sweep: empty sweep list");
    if (config.output.csv.empty()) throw ConfigError("entropy-sweep: CSV output path required");

    std::vector<PlotSeries> series;
    CsvWriter csv(config.output.csv, config, {"label", "L", "S"});
    std::vector<std::string> fit_lines;
    for (const auto& curve_spec : config.curves) {
        const auto curve = sweep(curve_spec.model, config.lattice, config.sweep_L, config.workers);
        PlotSeries s;
        s.label = curve_spec.label;
        for (const auto& [L, S] : curve.samples) {
            csv.row(curve_spec.label, {static_cast<double>(L), S});
            s.x.push_back(L);
            s.y.push_back(config.output.rescale_by_L ? S / L : S);
        }
        series.push_back(std::move(s));
        for (const auto& req : config.fits) {
            const auto f = fit(curve, req.form, req.window);
            std::ostringstream line;
            line << "fit: label=" << curve_spec.label << " form=" << to_string(f.form)
                 << " window=[" << f.window.lo << "," << f.window.hi << "]"
                 << " intercept=" << format_sig(f.intercept) << " slope=" << format_sig(f.slope);
            if (f.form != FitForm::Linear) line << " c_eff=" << format_sig(f.c_eff);
            line << " residual=" << format_sig(f.residual);
            fit_lines.push_back(line.str());
        }
    }
    for (const auto& line : fit_lines) csv.comment(line);
    if (!config.output.svg.empty())
        write_svg_plot(config.output.svg, series, config.output.loglinear,
                       config.output.rescale_by_L ? "S/L" : "S");
    return 0;
}

int cmd_holo(const ExperimentConfig& config) {
    if (config.sweep_L.empty()) throw ConfigError("holo: empty sweep list");
    if (config.output.csv.empty()) throw ConfigError("holo: CSV output path required");
    const auto& model = config.curves.front().model;
    const auto curve = sweep(model, config.lattice, config.sweep_L, config.workers);

    MetricParams params = config.holo.params;
    CsvWriter csv(config.output.csv, config, {"L", "S_lattice", "S_holographic", "residual"});
    if (config.holo.fit) {
        const auto fitres = fit_metric(curve);
        params = fitres.params;
        std::ostringstream line;
        line << "fitted metric: alpha_c=" << format_sig(params.alpha_c)
             << " a=" << format_sig(params.a) << " b=" << format_sig(params.b)
             << " objective=" << format_sig(fitres.objective)
             << " iterations=" << fitres.iterations
             << (fitres.degenerate ? " (degenerate: a ~ 0)" : "");
        csv.comment(line.str());
    } else {
        std::ostringstream line;
        line << "metric params from config: alpha_c=" << format_sig(params.alpha_c)
             << " a=" << format_sig(params.a) << " b=" << format_sig(params.b);
        csv.comment(line.str());
    }

    std::vector<PlotSeries> series(2);
    series[0].label = "lattice";
    series[1].label = "holographic";
    for (const auto& [L, S] : curve.samples) {
        const double Sh = holographic_entropy(params, L);
        csv.row({static_cast<double>(L), S, Sh, Sh - S});
        series[0].x.push_back(L);
        series[0].y.push_back(S);
        series[1].x.push_back(L);
        series[1].y.push_back(Sh);
    }
    if (!config.output.svg.empty())
        write_svg_plot(config.output.svg, series, config.output.loglinear, "S");
    return 0;
}

int cmd_verify(const VerifyOptions& options) {
    const auto results = run_verification(options);
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("[%s] %-32s max deviation %.3e (tolerance %.1e)  %s\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.deviation, r.tolerance,
                    r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    if (!all_pass) throw NumericalError("verification failed");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nlf: entanglement entropy of nonlocal lattice fermion models"};
    app.set_version_flag("--version", std::string("nlf ") + nlf::kVersion);
    app.require_subcommand(1);

    std::string config_path;
    CommonOverrides ov;

    auto* spectrum = app.add_subcommand("spectrum", "single-particle / quasiparticle spectrum CSV");
    add_common_flags(spectrum, config_path, ov);
    auto* sweep_cmd = app.add_subcommand("entropy-sweep", "entropy vs subregion size, fits, plots");
    add_common_flags(sweep_cmd, config_path, ov);
    auto* holo = app.add_subcommand("holo", "lattice entropy vs holographic geodesic length");
    add_common_flags(holo, config_path, ov);

    auto* verify = app.add_subcommand("verify", "run the cross-route oracle checks");
    VerifyOptions vopt;
    verify->add_option("--R", vopt.R, "ring size for deterministic checks");
    verify->add_option("--toeplitz-R", vopt.toeplitz_R, "random-Toeplitz ring size");
    verify->add_option("--trials", vopt.toeplitz_trials, "random-Toeplitz trials");
    verify->add_option("--seed", vopt.seed, "random-Toeplitz seed");
    verify->add_option("--inject-fault", vopt.inject_fault, "test hook: force the named check to fail")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
        if (spectrum->parsed()) return cmd_spectrum(effective_config(config_path, ov));
        if (sweep_cmd->parsed()) return cmd_entropy_sweep(effective_config(config_path, ov));
        if (holo->parsed()) return cmd_holo(effective_config(config_path, ov));
        if (verify->parsed()) return cmd_verify(vopt);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const nlf::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlf::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
