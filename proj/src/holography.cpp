#include "nlf/holography.hpp"

#include <array>
#include <cmath>

namespace nlf {

namespace {

double integrand(double alpha_c, double z) {
    if (z <= 0.0) return 1.0; // limit value; tanh(x) -> 1 as x -> inf
    const double r = alpha_c / z;
    return std::sqrt(std::tanh(r * r));
}

// 15-point Kronrod nodes/weights with embedded 7-point Gauss rule on [-1, 1].
constexpr std::array<double, 15> kKronrodX = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};
constexpr std::array<double, 15> kKronrodW = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};
constexpr std::array<double, 7> kGaussW = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct GkEstimate {
    double value;
    double error;
};

GkEstimate gk15(double alpha_c, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    double k = 0.0, g = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double f = integrand(alpha_c, c + h * kKronrodX[static_cast<std::size_t>(i)]);
        k += f * kKronrodW[static_cast<std::size_t>(i)];
        if (i % 2 == 1) g += f * kGaussW[static_cast<std::size_t>(i / 2)];
    }
    return {k * h, std::abs((k - g) * h)};
}

double adaptive_gk(double alpha_c, double lo, double hi, double tol, int depth) {
    const GkEstimate est = gk15(alpha_c, lo, hi);
    if (est.error <= tol || depth >= 48) return est.value;
    const double mid = 0.5 * (lo + hi);
    return adaptive_gk(alpha_c, lo, mid, 0.5 * tol, depth + 1) +
           adaptive_gk(alpha_c, mid, hi, 0.5 * tol, depth + 1);
}

} // namespace

double geodesic_length(double alpha_c, double L, double abs_tol) {
    if (alpha_c <= 0.0) throw ConfigError("geodesic_length: alpha_c must be > 0");
    if (L < 0.0) throw ConfigError("geodesic_length: L must be >= 0");
    if (L == 0.0) return 0.0;
    return adaptive_gk(alpha_c, 0.0, L, abs_tol, 0);
}

double geodesic_length_simpson(double alpha_c, double L, double abs_tol) {
    if (alpha_c <= 0.0) throw ConfigError("geodesic_length_simpson: alpha_c must be > 0");
    if (L <= 0.0) return 0.0;
    auto composite = [&](int n) {
        const double h = L / n;
        double sum = integrand(alpha_c, 0.0) + integrand(alpha_c, L);
        for (int i = 1; i < n; ++i)
            sum += integrand(alpha_c, i * h) * (i % 2 == 1 ? 4.0 : 2.0);
        return sum * h / 3.0;
    };
    double prev = composite(64);
    for (int n = 128; n <= (1 << 24); n *= 2) {
        const double cur = composite(n);
        if (std::abs(cur - prev) < abs_tol) return cur;
        prev = cur;
    }
    throw NonConvergence("geodesic_length_simpson: did not reach tolerance");
}

double holographic_entropy(const MetricParams& params, double L) {
    if (params.alpha_c <= 0.0) throw ConfigError("holographic_entropy: alpha_c must be > 0");
    return params.a * geodesic_length(params.alpha_c, L) + params.b;
}

namespace {

// golden-section minimum of phi on [lo, hi]
template <typename F>
double golden_min(F&& phi, double lo, double hi, double xtol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = phi(x1), f2 = phi(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = phi(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = phi(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

MetricFitResult fit_metric(const EntropyCurve& curve, std::optional<MetricParams> start) {
    std::vector<double> Ls, Ss;
    const double wmax = default_window_max(curve.lattice);
    for (const auto& [L, S] : curve.samples) {
        if (L > wmax) continue;
        Ls.push_back(L);
        Ss.push_back(S);
    }
    if (Ls.size() < 5) throw ConfigError("fit_metric: need >= 5 samples inside the fit window");

    MetricParams p = start.value_or(MetricParams{
        curve.model.alpha > 0.0 ? curve.model.alpha : 1.0, 0.6, 0.5});

    auto objective_abc = [&](double ac, double a, double b) {
        double obj = 0.0;
        for (std::size_t i = 0; i < Ls.size(); ++i) {
            const double r = a * geodesic_length(ac, Ls[i], 1e-10) + b - Ss[i];
            obj += r * r;
        }
        return obj;
    };
    // For a given alpha_c, (a, b) is ordinary linear least squares on the
    // geodesic lengths; each descent cycle refreshes them exactly.
    auto best_ab = [&](double ac, double& a, double& b) {
        const auto n = static_cast<double>(Ls.size());
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (std::size_t i = 0; i < Ls.size(); ++i) {
            const double x = geodesic_length(ac, Ls[i], 1e-10);
            sx += x; sy += Ss[i]; sxx += x * x; sxy += x * Ss[i];
        }
        const double det = n * sxx - sx * sx;
        if (std::abs(det) < 1e-30) { a = 0.0; b = sy / n; return; }
        a = (n * sxy - sx * sy) / det;
        b = (sy - a * sx) / n;
    };

    MetricFitResult result;
    double obj = objective_abc(p.alpha_c, p.a, p.b);
    const int max_cycles = 10000;
    int cycle = 0;
    for (; cycle < max_cycles; ++cycle) {
        // coordinate 1: alpha_c by golden section, bracket around current value
        double lo = std::max(1e-3, p.alpha_c / 4.0);
        double hi = std::min(1e3, p.alpha_c * 4.0);
        auto phi = [&](double ac) {
            double a, b;
            best_ab(ac, a, b);
            return objective_abc(ac, a, b);
        };
        p.alpha_c = golden_min(phi, lo, hi, 1e-10 * std::max(1.0, p.alpha_c));
        // coordinates 2+3: exact least squares
        best_ab(p.alpha_c, p.a, p.b);
        const double new_obj = objective_abc(p.alpha_c, p.a, p.b);
        const bool done = std::abs(obj - new_obj) < 1e-8;
        obj = new_obj;
        if (done) {
            result.converged = true;
            ++cycle;
            break;
        }
    }
    if (!result.converged)
        throw NonConvergence("fit_metric: objective did not converge within 10^4 cycles");

    result.params = p;
    result.objective = obj;
    result.iterations = cycle;
    result.degenerate = std::abs(p.a) < 1e-6;
    return result;
}

} // namespace nlf
