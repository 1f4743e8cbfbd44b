#include "nlf/scaling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace nlf {

EntropyCurve sweep(const ModelSpec& spec, const LatticeSpec& lattice,
                   const std::vector<int>& L_values, int workers) {
    if (L_values.empty()) throw ConfigError("sweep: empty L list");
    std::vector<int> Ls = L_values;
    std::sort(Ls.begin(), Ls.end());
    Ls.erase(std::unique(Ls.begin(), Ls.end()), Ls.end());
    const int max_L = lattice.dim == 1 ? lattice.extent[0]
                                       : std::min(lattice.extent[0], lattice.extent[1]);
    for (int L : Ls)
        if (L < 1 || L > max_L) throw ConfigError("sweep: L out of range for the lattice");

    const HamiltonianPair ham = build_model(spec, lattice);
    CorrelationPair corr;
    if (spec.is_pairing()) {
        corr = correlations_bdg(diagonalize_bdg(ham, lattice));
    } else {
        const auto sol = diagonalize_number_conserving(ham, lattice);
        corr = correlations_number_conserving(sol, select_occupation(sol, spec.filling));
    }

    std::vector<double> entropies(Ls.size(), 0.0);
    auto evaluate = [&](std::size_t i) {
        const auto region = lattice.dim == 1 ? Subregion::interval(lattice, Ls[i])
                                             : Subregion::square(lattice, Ls[i]);
        entropies[i] = entanglement_spectrum(restrict(corr, region)).entropy;
    };

    const int n_workers = std::max(1, std::min<int>(workers, static_cast<int>(Ls.size())));
    if (n_workers == 1) {
        for (std::size_t i = 0; i < Ls.size(); ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        for (int w = 0; w < n_workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= Ls.size()) return;
                    try {
                        evaluate(i);
                    } catch (...) {
                        std::scoped_lock lock(error_mutex);
                        if (!error) error = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    EntropyCurve curve;
    curve.model = spec;
    curve.lattice = lattice;
    curve.samples.reserve(Ls.size());
    for (std::size_t i = 0; i < Ls.size(); ++i)
        curve.samples.emplace_back(Ls[i], entropies[i]);
    return curve;
}

const char* to_string(FitForm form) {
    switch (form) {
    case FitForm::Linear: return "Linear";
    case FitForm::Log1d: return "Log1d";
    case FitForm::AreaLog2d: return "AreaLog2d";
    }
    return "?";
}

FitForm fit_form_from_string(std::string_view name) {
    for (FitForm f : {FitForm::Linear, FitForm::Log1d, FitForm::AreaLog2d})
        if (name == to_string(f)) return f;
    throw ConfigError("unknown fit form: " + std::string(name));
}

ScalingFit fit(const EntropyCurve& curve, FitForm form, FitWindow window) {
    std::vector<double> xs, ys;
    for (const auto& [L, S] : curve.samples) {
        if (L < window.lo || L > window.hi) continue;
        switch (form) {
        case FitForm::Linear:
            xs.push_back(L);
            ys.push_back(S);
            break;
        case FitForm::Log1d:
            xs.push_back(std::log(static_cast<double>(L)));
            ys.push_back(S);
            break;
        case FitForm::AreaLog2d:
            xs.push_back(std::log(static_cast<double>(L)));
            ys.push_back(S / L);
            break;
        }
    }
    const int n = static_cast<int>(xs.size());
    if (n < 3) throw ConfigError("fit: fewer than 3 samples in window");
    if (std::all_of(xs.begin(), xs.end(), [&](double x) { return x == xs.front(); }))
        throw ConfigError("fit: degenerate window (all L equal)");

    ScalingFit out;
    out.form = form;
    out.window = window;
    out.n_samples = n;
    if (form == FitForm::Linear) {
        double sxy = 0.0, sxx = 0.0;
        for (int i = 0; i < n; ++i) {
            sxy += xs[static_cast<std::size_t>(i)] * ys[static_cast<std::size_t>(i)];
            sxx += xs[static_cast<std::size_t>(i)] * xs[static_cast<std::size_t>(i)];
        }
        out.slope = sxy / sxx;
        out.intercept = 0.0;
        out.c_eff = 0.0;
        double rss = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = ys[static_cast<std::size_t>(i)] - out.slope * xs[static_cast<std::size_t>(i)];
            rss += r * r;
        }
        out.residual = std::sqrt(rss / n);
    } else {
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (int i = 0; i < n; ++i) {
            sx += xs[static_cast<std::size_t>(i)];
            sy += ys[static_cast<std::size_t>(i)];
            sxx += xs[static_cast<std::size_t>(i)] * xs[static_cast<std::size_t>(i)];
            sxy += xs[static_cast<std::size_t>(i)] * ys[static_cast<std::size_t>(i)];
        }
        const double det = n * sxx - sx * sx;
        out.slope = (n * sxy - sx * sy) / det;
        out.intercept = (sy * sxx - sx * sxy) / det;
        out.c_eff = (form == FitForm::Log1d) ? 3.0 * out.slope : 1.5 * out.slope;
        double rss = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = ys[static_cast<std::size_t>(i)] - out.intercept -
                             out.slope * xs[static_cast<std::size_t>(i)];
            rss += r * r;
        }
        out.residual = std::sqrt(rss / n);
    }
    return out;
}

double default_window_max(const LatticeSpec& lattice) {
    if (lattice.dim == 1) return lattice.extent[0] / 4.0;
    return std::min(lattice.extent[0], lattice.extent[1]) / 2.0 - 1.0;
}

CrossoverReport crossover_report(const EntropyCurve& curve, double alpha) {
    CrossoverReport report;
    report.alpha = alpha;
    const double wmax = default_window_max(curve.lattice);
    const FitForm log_form = curve.lattice.dim == 1 ? FitForm::Log1d : FitForm::AreaLog2d;

    // nextafter keeps the boundary L = alpha out of both windows
    const double lin_hi = std::nextafter(std::min(alpha, wmax), 0.0);
    try {
        auto f = fit(curve, FitForm::Linear, {1.0, lin_hi});
        report.A = f.slope;
        report.linear = std::move(f);
    } catch (const ConfigError&) {
    }
    try {
        auto f = fit(curve, log_form, {std::nextafter(alpha, alpha + 1.0), wmax});
        report.c_eff = f.c_eff;
        report.B = alpha > 0.0 ? f.c_eff / alpha : 0.0;
        report.log_part = std::move(f);
    } catch (const ConfigError&) {
    }
    report.linear_only = report.linear.has_value() && !report.log_part.has_value();
    report.log_only = report.log_part.has_value() && !report.linear.has_value();
    if (!report.linear && !report.log_part)
        throw ConfigError("crossover_report: neither window holds 3 samples");
    return report;
}

LineFit line_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const int n = static_cast<int>(x.size());
    if (n < 2 || y.size() != x.size()) throw ConfigError("line_fit: need >= 2 points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sx += x[static_cast<std::size_t>(i)];
        sy += y[static_cast<std::size_t>(i)];
        sxx += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
        sxy += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    }
    LineFit f;
    const double det = n * sxx - sx * sx;
    f.slope = (n * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / n;
    double ss_res = 0.0, ss_tot = 0.0;
    const double mean = sy / n;
    for (int i = 0; i < n; ++i) {
        const double pred = f.intercept + f.slope * x[static_cast<std::size_t>(i)];
        ss_res += (y[static_cast<std::size_t>(i)] - pred) * (y[static_cast<std::size_t>(i)] - pred);
        ss_tot += (y[static_cast<std::size_t>(i)] - mean) * (y[static_cast<std::size_t>(i)] - mean);
    }
    f.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return f;
}

} // namespace nlf
