#pragma once

#include <optional>

#include "nlf/scaling.hpp"

namespace nlf {

// integral_0^L sqrt(tanh(alpha_c^2 / z^2)) dz, integrand = 1 at z = 0.
// Adaptive Gauss-Kronrod (G7/K15) with interval bisection.
double geodesic_length(double alpha_c, double L, double abs_tol = 1e-10);

// Independent fixed-step composite-Simpson evaluation (verification route);
// steps are doubled until successive values agree to abs_tol.
double geodesic_length_simpson(double alpha_c, double L, double abs_tol = 1e-8);

struct MetricParams {
    double alpha_c = 1.0; // continuum locality scale (length units)
    double a = 1.0;       // overall scale, absorbs 1/2G
    double b = 0.0;       // additive offset
};

// S(L) = a * geodesic_length(alpha_c, L) + b
double holographic_entropy(const MetricParams& params, double L);

struct MetricFitResult {
    MetricParams params;
    double objective = 0.0; // sum of squared residuals over the fit window
    int iterations = 0;     // coordinate-descent cycles
    bool converged = false;
    bool degenerate = false; // fitted a collapsed toward 0 (featureless curve)
};

// Least-squares (alpha_c, a, b) against an entropy curve by golden-section
// coordinate descent; start (alpha_c = model alpha, a = 0.6, b = 0.5),
// objective convergence threshold 1e-8, saturation-aware window as in the
// scaling module.  Throws NonConvergence after 1e4 cycles.
MetricFitResult fit_metric(const EntropyCurve& curve,
                           std::optional<MetricParams> start = std::nullopt);

} // namespace nlf
