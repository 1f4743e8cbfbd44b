#include <pybind11/pybind11.h>
#include <pybind11/eigen.h>
#include <pybind11/stl.h>

#include "nlf/config.hpp"
#include "nlf/verify.hpp"
#include "nlf/version.hpp"

namespace py = pybind11;
using namespace nlf;

namespace {

ModelSpec make_model(const std::string& kind, double alpha, double epsilon, double filling,
                     const std::string& normalization) {
    ModelSpec spec;
    spec.kind = model_kind_from_string(kind);
    spec.alpha = alpha;
    spec.epsilon = epsilon;
    spec.filling = filling;
    spec.norm = normalization_from_string(normalization);
    return spec;
}

LatticeSpec make_lattice(int dim, int R) {
    return dim == 1 ? LatticeSpec::chain(R) : LatticeSpec::square(R);
}

py::dict fit_to_dict(const ScalingFit& f) {
    py::dict d;
    d["form"] = to_string(f.form);
    d["intercept"] = f.intercept;
    d["slope"] = f.slope;
    d["c_eff"] = f.c_eff;
    d["window"] = py::make_tuple(f.window.lo, f.window.hi);
    d["residual"] = f.residual;
    d["n_samples"] = f.n_samples;
    return d;
}

EntropyCurve curve_from_arrays(const std::vector<int>& L, const std::vector<double>& S,
                               int dim, int R, double alpha) {
    if (L.size() != S.size()) throw ConfigError("L and S must have equal length");
    EntropyCurve curve;
    curve.lattice = make_lattice(dim, R);
    curve.model.kind = ModelKind::CompactCos;
    curve.model.alpha = alpha;
    for (std::size_t i = 0; i < L.size(); ++i) curve.samples.emplace_back(L[i], S[i]);
    return curve;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Entanglement entropy of translation-invariant nonlocal lattice fermions";
    m.attr("__version__") = kVersion;

    py::register_exception<ConfigError>(m, "NlfConfigError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NlfNumericalError", PyExc_RuntimeError);

    m.def(
        "dispersion",
        [](const std::string& kind, double alpha, int dim, int R, double epsilon,
           const std::string& normalization) {
            const auto lattice = make_lattice(dim, R);
            const auto disp = dispersion(make_model(kind, alpha, epsilon, 0.5, normalization), lattice);
            std::vector<std::vector<int>> n;
            std::vector<std::vector<double>> k;
            std::vector<double> E;
            for (const auto& [w, e] : disp) {
                if (dim == 1) {
                    n.push_back({w.n[0]});
                    k.push_back({w.k[0]});
                } else {
                    n.push_back({w.n[0], w.n[1]});
                    k.push_back({w.k[0], w.k[1]});
                }
                E.push_back(e);
            }
            return py::make_tuple(n, k, E);
        },
        py::arg("kind"), py::arg("alpha") = 0.0, py::arg("dim") = 1, py::arg("R") = 100,
        py::arg("epsilon") = 1.0, py::arg("normalization") = "literal",
        "Mode labels, wavenumbers and energies (positive branch for pairing kinds)");

    m.def(
        "entropy",
        [](const std::string& kind, double alpha, int dim, int R, int L, double filling,
           double epsilon, const std::string& normalization) {
            const auto lattice = make_lattice(dim, R);
            const auto region = dim == 1 ? Subregion::interval(lattice, L)
                                         : Subregion::square(lattice, L);
            return entropy_of(make_model(kind, alpha, epsilon, filling, normalization), lattice,
                              region);
        },
        py::arg("kind"), py::arg("alpha") = 0.0, py::arg("dim") = 1, py::arg("R") = 100,
        py::arg("L") = 1, py::arg("filling") = 0.5, py::arg("epsilon") = 1.0,
        py::arg("normalization") = "literal",
        "Von Neumann entanglement entropy of an interval (1-d) or square (2-d)");

    m.def(
        "entropy_sweep",
        [](const std::string& kind, double alpha, int dim, int R, const std::vector<int>& Ls,
           double filling, double epsilon, const std::string& normalization, int workers) {
            const auto curve = sweep(make_model(kind, alpha, epsilon, filling, normalization),
                                     make_lattice(dim, R), Ls, workers);
            std::vector<int> L;
            std::vector<double> S;
            for (const auto& [l, s] : curve.samples) {
                L.push_back(l);
                S.push_back(s);
            }
            return py::make_tuple(L, S);
        },
        py::arg("kind"), py::arg("alpha"), py::arg("dim"), py::arg("R"), py::arg("Ls"),
        py::arg("filling") = 0.5, py::arg("epsilon") = 1.0, py::arg("normalization") = "literal",
        py::arg("workers") = 1, "Entropy against subregion size");

    m.def(
        "fit_curve",
        [](const std::vector<int>& L, const std::vector<double>& S, const std::string& form,
           double lo, double hi, int dim, int R) {
            const auto curve = curve_from_arrays(L, S, dim, R, 0.0);
            return fit_to_dict(fit(curve, fit_form_from_string(form), {lo, hi}));
        },
        py::arg("L"), py::arg("S"), py::arg("form"), py::arg("lo"), py::arg("hi"),
        py::arg("dim") = 1, py::arg("R") = 400, "Least-squares scaling-law fit");

    m.def(
        "crossover",
        [](const std::vector<int>& L, const std::vector<double>& S, double alpha, int dim, int R) {
            const auto report = crossover_report(curve_from_arrays(L, S, dim, R, alpha), alpha);
            py::dict d;
            d["alpha"] = report.alpha;
            d["A"] = report.A;
            d["c_eff"] = report.c_eff;
            d["B"] = report.B;
            d["linear_only"] = report.linear_only;
            d["log_only"] = report.log_only;
            if (report.linear) d["linear"] = fit_to_dict(*report.linear);
            if (report.log_part) d["log"] = fit_to_dict(*report.log_part);
            return d;
        },
        py::arg("L"), py::arg("S"), py::arg("alpha"), py::arg("dim") = 1, py::arg("R") = 400,
        "Volume-law / log-law crossover fits");

    m.def(
        "entropy_from_correlations",
        [](const CMat& G, std::optional<Mat> F) {
            CorrelationPair block;
            block.lattice = LatticeSpec::chain(std::max<int>(4, static_cast<int>(G.rows())));
            block.G = G;
            block.F = F.value_or(Mat::Zero(G.rows(), G.cols()));
            block.has_pairing = F.has_value();
            return entanglement_spectrum(block).entropy;
        },
        py::arg("G"), py::arg("F") = std::nullopt,
        "Entropy of a subregion given its correlation block(s)");

    m.def("geodesic_length", &geodesic_length, py::arg("alpha_c"), py::arg("L"),
          py::arg("abs_tol") = 1e-10, "Integral of sqrt(tanh(alpha_c^2/z^2)) from 0 to L");

    m.def(
        "holographic_entropy",
        [](double alpha_c, double a, double b, double L) {
            return holographic_entropy({alpha_c, a, b}, L);
        },
        py::arg("alpha_c"), py::arg("a"), py::arg("b"), py::arg("L"),
        "a * geodesic_length(alpha_c, L) + b");

    m.def(
        "fit_metric",
        [](const std::vector<int>& L, const std::vector<double>& S, double alpha, int dim, int R) {
            const auto res = fit_metric(curve_from_arrays(L, S, dim, R, alpha));
            py::dict d;
            d["alpha_c"] = res.params.alpha_c;
            d["a"] = res.params.a;
            d["b"] = res.params.b;
            d["objective"] = res.objective;
            d["iterations"] = res.iterations;
            d["converged"] = res.converged;
            d["degenerate"] = res.degenerate;
            return d;
        },
        py::arg("L"), py::arg("S"), py::arg("alpha") = 1.0, py::arg("dim") = 1,
        py::arg("R") = 400, "Least-squares (alpha_c, a, b) against an entropy curve");

    m.def(
        "random_toeplitz",
        [](int R, int trials, std::uint64_t seed) {
            const auto stats = random_toeplitz_oracle(R, trials, seed);
            py::dict d;
            d["R"] = stats.lattice_size;
            d["trials"] = stats.trials;
            d["seed"] = stats.seed;
            d["mean_entropy"] = stats.mean_entropy;
            d["slope"] = stats.slope;
            d["offdiag_variance"] = stats.offdiag_variance;
            d["expected_variance"] = stats.expected_variance;
            return d;
        },
        py::arg("R") = 128, py::arg("trials") = 50, py::arg("seed") = 20240601,
        "Random-occupation Toeplitz entropy statistics");

    m.def(
        "verify",
        [](int R, std::uint64_t seed) {
            VerifyOptions opt;
            opt.R = R;
            opt.seed = seed;
            py::list out;
            for (const auto& r : run_verification(opt)) {
                py::dict d;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["deviation"] = r.deviation;
                d["tolerance"] = r.tolerance;
                out.append(d);
            }
            return out;
        },
        py::arg("R") = 64, py::arg("seed") = 20240601, "Run the cross-route oracle checks");
}
