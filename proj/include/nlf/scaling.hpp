#pragma once

#include <optional>

#include "nlf/entanglement.hpp"

namespace nlf {

struct EntropyCurve {
    ModelSpec model;
    LatticeSpec lattice;
    std::vector<std::pair<int, double>> samples; // (L, S), L strictly increasing
};

// One entropy per L; the diagonalization and full-lattice correlation matrix
// are computed once and shared.  Sweep points evaluate in parallel when
// workers > 1; output order is by L regardless.
EntropyCurve sweep(const ModelSpec& spec, const LatticeSpec& lattice,
                   const std::vector<int>& L_values, int workers = 1);

enum class FitForm { Linear, Log1d, AreaLog2d };

const char* to_string(FitForm form);
FitForm fit_form_from_string(std::string_view name);

struct FitWindow {
    double lo = 0.0;
    double hi = 0.0;
};

struct ScalingFit {
    FitForm form = FitForm::Linear;
    // Linear:    S   = slope * L (through origin); intercept = 0
    // Log1d:     S   = intercept + (c_eff/3) log L
    // AreaLog2d: S/L = intercept + (2/3) c_eff log L
    double intercept = 0.0;
    double c_eff = 0.0; // Linear: unused (0); slope carries the law constant
    double slope = 0.0; // raw regression slope in the linearized variables
    FitWindow window;
    double residual = 0.0; // RMS in the linearized variables
    int n_samples = 0;
};

ScalingFit fit(const EntropyCurve& curve, FitForm form, FitWindow window);

// Default saturation-aware window bound: R/4 in 1-d, extent/2 - 1 in 2-d.
double default_window_max(const LatticeSpec& lattice);

struct CrossoverReport {
    double alpha = 0.0;
    std::optional<ScalingFit> linear;   // L < min(alpha, default max)
    std::optional<ScalingFit> log_part; // alpha < L <= default max (Log1d or AreaLog2d)
    double A = 0.0;                     // volume-law slope (linear part)
    double c_eff = 0.0;                 // from the log part
    double B = 0.0;                     // c_eff / alpha
    bool linear_only = false;
    bool log_only = false;
};

CrossoverReport crossover_report(const EntropyCurve& curve, double alpha);

// Least-squares line y = a + b x plus r^2; used for c_eff-vs-alpha checks.
struct LineFit {
    double intercept = 0.0, slope = 0.0, r_squared = 0.0;
};
LineFit line_fit(const std::vector<double>& x, const std::vector<double>& y);

} // namespace nlf
