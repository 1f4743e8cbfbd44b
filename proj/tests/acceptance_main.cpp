// Acceptance suite: one pass/fail line per reproduction criterion.
// Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nlf/verify.hpp"

using namespace nlf;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<Outcome()> run;
};

std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int L = lo; L <= hi; ++L) v.push_back(L);
    return v;
}

EntropyCurve run_sweep(ModelKind kind, double alpha, const LatticeSpec& lattice,
                       const std::vector<int>& Ls,
                       Normalization norm = Normalization::PaperLiteral) {
    ModelSpec spec;
    spec.kind = kind;
    spec.alpha = alpha;
    spec.norm = norm;
    return sweep(spec, lattice, Ls, 4);
}

bool in_band(double value, double center, double halfwidth) {
    return value >= center - halfwidth && value <= center + halfwidth;
}

char buf[512];

std::string fmt(const char* f, auto... args) {
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

Outcome criterion1() {
    const auto curve = run_sweep(ModelKind::LocalHopping, 0.0, LatticeSpec::chain(400), range(2, 100));
    const auto f = fit(curve, FitForm::Log1d, {8, 100});
    Outcome out;
    out.pass = in_band(f.c_eff, 0.978, 0.03);
    out.detail = fmt("c_eff = %.4f, required 0.978 +- 0.03", f.c_eff);
    return out;
}

Outcome criterion2() {
    const auto curve = run_sweep(ModelKind::CompactCos, 0.01, LatticeSpec::chain(400), range(2, 100));
    const auto f = fit(curve, FitForm::Log1d, {8, 100});
    Outcome out;
    out.pass = in_band(f.c_eff, 1.96, 0.06);
    out.detail = fmt("c_eff = %.4f, required 1.96 +- 0.06", f.c_eff);
    return out;
}

Outcome criterion3() {
    const auto curve =
        run_sweep(ModelKind::CompactCos, 1400.0, LatticeSpec::chain(400), range(2, 200));
    const auto f = fit(curve, FitForm::Linear, {2, 60});
    Outcome out;
    out.pass = in_band(f.slope, 0.5, 0.1);
    out.detail = fmt("d = %.4f on L in [2,60], required 0.5 +- 0.1", f.slope);
    const auto wide = fit(curve, FitForm::Linear, {2, 200});
    double s20 = 0.0;
    for (const auto& [L, S] : curve.samples)
        if (L == 20) s20 = S;
    out.notes.push_back(fmt("diagnostic: entropy density ln 2 = 0.693 at small L (S(20)/20 = %.3f); "
                            "the through-origin fit over the full range [2,200] gives d = %.4f",
                            s20 / 20.0, wide.slope));
    return out;
}

Outcome criterion4() {
    Outcome out;
    std::vector<double> alphas = {10.0, 30.0, 50.0};
    std::vector<double> ceffs;
    const auto lattice = LatticeSpec::chain(400);
    for (double a : alphas) {
        const auto curve = run_sweep(ModelKind::CompactCos, a, lattice, range(2, 100));
        const auto report = crossover_report(curve, a);
        ceffs.push_back(report.c_eff);
        const bool ok = in_band(report.B, 1.17, 0.25);
        out.pass = out.pass && ok;
        out.detail += fmt("alpha=%g: c_eff/alpha = %.3f (A = %.3f)%s  ", a, report.B, report.A,
                          ok ? "" : " [outside 1.17 +- 0.25]");
    }
    const auto lf = line_fit(alphas, ceffs);
    const bool linear_ok = lf.r_squared > 0.95;
    out.pass = out.pass && linear_ok;
    out.detail += fmt("| c_eff vs alpha: r^2 = %.4f (required > 0.95), slope = %.3f", lf.r_squared,
                      lf.slope);
    out.notes.push_back(fmt("diagnostic: measured c_eff/alpha tracks the zone-counting estimate "
                            "2/pi = 0.637; the published 1.17 corresponds to unit-weight "
                            "derivative stencils (4/pi = 1.273)"));
    const auto unit =
        run_sweep(ModelKind::CompactCos, 30.0, lattice, range(2, 100), Normalization::ForceUnit);
    const auto unit_report = crossover_report(unit, 30.0);
    out.notes.push_back(
        fmt("diagnostic: with normalization=unit, alpha=30 measures c_eff/alpha = %.3f",
            unit_report.B));
    return out;
}

Outcome criterion5() {
    const auto lattice = LatticeSpec::chain(100);
    ModelSpec spec;
    spec.kind = ModelKind::LocalPairing;
    const auto disp = dispersion(spec, lattice);
    double emax_dev = 0.0;
    for (const auto& [w, e] : disp) emax_dev = std::max(emax_dev, std::abs(e - 1.0));
    const auto curve = run_sweep(ModelKind::LocalPairing, 0.0, lattice, range(10, 50));
    double smin = 1e300, smax = -1e300;
    for (const auto& [L, S] : curve.samples) {
        smin = std::min(smin, S);
        smax = std::max(smax, S);
    }
    Outcome out;
    out.pass = (smax - smin) < 0.05 && emax_dev < 1e-10;
    out.detail = fmt("S range over L in [10,50]: %.2e (required < 0.05); max |E_n - 1| = %.2e "
                     "(required < 1e-10)",
                     smax - smin, emax_dev);
    return out;
}

Outcome criterion6() {
    const auto lattice = LatticeSpec::chain(100);
    const auto curve = run_sweep(ModelKind::NoncompactNLPairing, 30.0, lattice, {10, 30});
    const double ds = curve.samples[1].second - curve.samples[0].second;

    ModelSpec local;
    local.kind = ModelKind::LocalHopping;
    ModelSpec nl;
    nl.kind = ModelKind::NoncompactNLHopping;
    nl.alpha = 30.0;
    const auto sol_l = diagonalize_number_conserving(build_model(local, lattice), lattice);
    const auto sol_n = diagonalize_number_conserving(build_model(nl, lattice), lattice);
    const auto G_l = correlations_number_conserving(sol_l, select_occupation(sol_l, 0.5)).G;
    const auto G_n = correlations_number_conserving(sol_n, select_occupation(sol_n, 0.5)).G;
    const double dg = (G_l - G_n).cwiseAbs().maxCoeff();

    Outcome out;
    out.pass = ds < 0.2 && dg <= 1e-10;
    out.detail = fmt("S(30) - S(10) = %.4f (required < 0.2); max |G_nl - G_local| = %.2e "
                     "(required <= 1e-10)",
                     ds, dg);
    return out;
}

Outcome criterion7() {
    const auto lattice = LatticeSpec::chain(100);
    const auto curve30 = run_sweep(ModelKind::CompactNLPairing, 30.0, lattice, range(2, 25));
    const auto f = fit(curve30, FitForm::Linear, {2, 25});
    double mean_s = 0.0;
    for (const auto& [L, S] : curve30.samples) mean_s += S / curve30.samples.size();
    const double rel_resid = f.residual / mean_s;

    const auto curve5 = run_sweep(ModelKind::CompactNLPairing, 5.0, lattice, range(2, 25));
    const double s25 = curve5.samples.back().second;
    int knee = 0;
    for (const auto& [L, S] : curve5.samples)
        if (S >= 0.9 * s25) {
            knee = L;
            break;
        }

    Outcome out;
    const bool resid_ok = rel_resid < 0.10;
    const bool knee_ok = knee >= 3 && knee <= 10; // within a factor 2 of alpha = 5
    out.pass = resid_ok && knee_ok;
    out.detail = fmt("alpha=30 linear fit: residual/mean(S) = %.3f (required < 0.10), d = %.3f; "
                     "alpha=5 saturation knee at L = %d (required within [3, 10] ~ alpha)",
                     rel_resid, f.slope, knee);
    return out;
}

Outcome criterion8() {
    const auto lattice = LatticeSpec::square(61);
    Outcome out;

    const auto volume = run_sweep(ModelKind::CompactSin, 1400.0, lattice, range(2, 10));
    double worst = 0.5;
    for (const auto& [L, S] : volume.samples) {
        const double d = S / (L * L);
        if (std::abs(d - 0.5) > std::abs(worst - 0.5)) worst = d;
        if (!in_band(d, 0.5, 0.15)) out.pass = false;
    }
    out.detail = fmt("alpha=1400: S/L^2 in [%.3f, %.3f] over L <= 10, required 0.5 +- 0.15; ",
                     volume.samples.front().second / 4.0, worst);
    out.notes.push_back(fmt("diagnostic: the scrambled-limit density is ln 2 = 0.693 (same "
                            "analysis as the 1-d volume law)"));

    for (double a : {5.0, 15.0}) {
        const auto curve = run_sweep(ModelKind::CompactSin, a, lattice, range(2, 29));
        const auto f = fit(curve, FitForm::AreaLog2d,
                           {std::nextafter(a, a + 1.0), default_window_max(lattice)});
        const bool ok = in_band(f.c_eff / a, 1.26, 0.3);
        out.pass = out.pass && ok;
        out.detail += fmt("alpha=%g: c_eff/alpha = %.3f%s  ", a, f.c_eff / a,
                          ok ? "" : " [outside 1.26 +- 0.3]");
    }
    return out;
}

Outcome criterion9() {
    const auto curve =
        run_sweep(ModelKind::CompactCos, 10.0, LatticeSpec::chain(400), range(4, 100));
    const MetricParams params{9.0, 0.6, 0.7};
    double worst = 0.0;
    int worst_L = 0;
    for (const auto& [L, S] : curve.samples) {
        const double dev = std::abs(holographic_entropy(params, L) - S);
        if (dev > worst) {
            worst = dev;
            worst_L = L;
        }
    }
    Outcome out;
    out.pass = worst <= 0.5;
    out.detail = fmt("max |S_holo - S_lattice| = %.3f at L = %d over [4,100], required <= 0.5",
                     worst, worst_L);
    const auto unit = run_sweep(ModelKind::CompactCos, 10.0, LatticeSpec::chain(400),
                                range(4, 100), Normalization::ForceUnit);
    double worst_unit = 0.0;
    for (const auto& [L, S] : unit.samples)
        worst_unit = std::max(worst_unit, std::abs(holographic_entropy(params, L) - S));
    out.notes.push_back(fmt("diagnostic: with normalization=unit the same comparison gives "
                            "max deviation %.3f",
                            worst_unit));
    return out;
}

Outcome criterion10() {
    Outcome out;
    VerifyOptions options;
    const auto checks = run_verification(options);
    for (const auto& c : checks) {
        out.pass = out.pass && c.pass;
        out.detail += fmt("%s %s (%.1e)  ", c.name.c_str(), c.pass ? "ok" : "FAILED", c.deviation);
    }

    // complementarity across every model kind (the verify suite covers one)
    struct Case {
        ModelKind kind;
        double alpha;
        int R;
    };
    double worst = 0.0;
    for (const Case c : {Case{ModelKind::LocalHopping, 0.0, 100},
                         Case{ModelKind::NoncompactNLHopping, 2.0, 64},
                         Case{ModelKind::CompactCos, 30.0, 100},
                         Case{ModelKind::CompactSin, 7.0, 64},
                         Case{ModelKind::LocalPairing, 0.0, 64},
                         Case{ModelKind::CompactNLPairing, 13.0, 64},
                         Case{ModelKind::NoncompactNLPairing, 8.0, 64}}) {
        const auto lattice = LatticeSpec::chain(c.R);
        ModelSpec spec;
        spec.kind = c.kind;
        spec.alpha = c.alpha;
        const auto ham = build_model(spec, lattice);
        CorrelationPair corr;
        if (spec.is_pairing()) {
            corr = correlations_bdg(diagonalize_bdg(ham, lattice));
        } else {
            const auto sol = diagonalize_number_conserving(ham, lattice);
            corr = correlations_number_conserving(sol, select_occupation(sol, 0.5));
        }
        const int L = c.R / 4 + 1;
        const double s1 =
            entanglement_spectrum(restrict(corr, Subregion::interval(lattice, L))).entropy;
        const double s2 =
            entanglement_spectrum(restrict(corr, Subregion::interval(lattice, c.R - L))).entropy;
        worst = std::max(worst, std::abs(s1 - s2));
    }
    const bool comp_ok = worst <= 1e-8;
    out.pass = out.pass && comp_ok;
    out.detail += fmt("| complementarity across all kinds: %.1e %s", worst,
                      comp_ok ? "ok" : "FAILED");

    // projector property of G at half filling
    const auto lattice = LatticeSpec::chain(64);
    ModelSpec spec;
    spec.kind = ModelKind::CompactCos;
    spec.alpha = 17.0;
    const auto sol = diagonalize_number_conserving(build_model(spec, lattice), lattice);
    const auto corr = correlations_number_conserving(sol, select_occupation(sol, 0.5));
    const double proj = (corr.G * corr.G - corr.G).cwiseAbs().maxCoeff();
    const bool proj_ok = proj <= 1e-9;
    out.pass = out.pass && proj_ok;
    out.detail += fmt(" | G^2 = G: %.1e %s", proj, proj_ok ? "ok" : "FAILED");
    return out;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "local 1-d effective central charge", 10.0, criterion1},
        {2, "doubled-fermion limit (alpha = 0.01)", 10.0, criterion2},
        {3, "volume law at alpha = 1400", 30.0, criterion3},
        {4, "central-charge/locality proportionality", 120.0, criterion4},
        {5, "gapped superconductor saturation", 10.0, criterion5},
        {6, "noncompact nonlocality fails", 10.0, criterion6},
        {7, "compact nonlocal superconductor volume regime", 10.0, criterion7},
        {8, "2-d volume law and anomalous area law", 900.0, criterion8},
        {9, "holographic comparison", 30.0, criterion9},
        {10, "property suite", 300.0, criterion10},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = elapsed < criterion.time_limit_s;
        const bool pass = outcome.pass && in_time;
        std::printf("[%s] criterion %2d: %-44s %s  (%.1f s%s)\n", pass ? "PASS" : "FAIL",
                    criterion.id, criterion.name.c_str(), outcome.detail.c_str(), elapsed,
                    in_time ? "" : ", over budget");
        for (const auto& note : outcome.notes) std::printf("       %s\n", note.c_str());
        if (!pass) ++failures;
    }
    std::printf("%d/10 criteria pass\n", 10 - failures);
    return failures;
}
