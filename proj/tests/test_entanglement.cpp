#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nlf/scaling.hpp"

using namespace nlf;

namespace {

CorrelationPair one_by_one(double g, double f, bool pairing) {
    CorrelationPair block;
    block.lattice = LatticeSpec::chain(4);
    block.G = CMat::Constant(1, 1, g);
    block.F = Mat::Constant(1, 1, f);
    block.has_pairing = pairing;
    return block;
}

CorrelationPair model_correlations(const ModelSpec& spec, const LatticeSpec& lattice) {
    const auto ham = build_model(spec, lattice);
    if (spec.is_pairing()) return correlations_bdg(diagonalize_bdg(ham, lattice));
    const auto sol = diagonalize_number_conserving(ham, lattice);
    return correlations_number_conserving(sol, select_occupation(sol, spec.filling));
}

Subregion complement_of(const LatticeSpec& lattice, const Subregion& region) {
    std::vector<char> inside(static_cast<std::size_t>(lattice.sites()), 0);
    for (int s : region.sites) inside[static_cast<std::size_t>(s)] = 1;
    Subregion out;
    for (int s = 0; s < lattice.sites(); ++s)
        if (!inside[static_cast<std::size_t>(s)]) out.sites.push_back(s);
    return out;
}

} // namespace

TEST_CASE("restrict: whole lattice, single site, and 2-d square indexing") {
    const auto lattice = LatticeSpec::chain(10);
    ModelSpec spec;
    spec.kind = ModelKind::LocalHopping;
    const auto corr = model_correlations(spec, lattice);

    const auto whole = restrict(corr, Subregion::interval(lattice, 10));
    CHECK((whole.G - corr.G).cwiseAbs().maxCoeff() == 0.0);

    const auto site = restrict(corr, Subregion::interval(lattice, 1));
    CHECK(site.G(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(site.F(0, 0) == 0.0);

    const auto square = LatticeSpec::square(8);
    const auto region = Subregion::square(square, 3);
    CHECK(region.sites == std::vector<int>{0, 1, 2, 8, 9, 10, 16, 17, 18});
    const auto wrapped = Subregion::square(square, 3, square.site_index(7, 7));
    CHECK(wrapped.sites == std::vector<int>{63, 56, 57, 7, 0, 1, 15, 8, 9});

    Subregion bad;
    bad.sites = {0, 99};
    CHECK_THROWS_AS(restrict(corr, bad), ConfigError);
}

TEST_CASE("entanglement spectrum of 1x1 blocks") {
    // maximally mixed mode
    auto s = entanglement_spectrum(one_by_one(0.5, 0.0, false));
    CHECK(s.entropy == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(s.epsilons[0] == doctest::Approx(0.0));
    // pure occupied mode
    s = entanglement_spectrum(one_by_one(1.0, 0.0, false));
    CHECK(s.entropy == 0.0);
    CHECK(std::isinf(s.epsilons[0]));
    // pairing route on the same data
    s = pairing_spectrum(one_by_one(0.5, 0.0, true));
    CHECK(s.entropy == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    s = pairing_spectrum(one_by_one(1.0, 0.0, true));
    CHECK(s.entropy == 0.0);
}

TEST_CASE("spectra outside the valid range raise SpectrumOutOfRange") {
    CHECK_THROWS_AS(entanglement_spectrum(one_by_one(1.2, 0.0, false)), SpectrumOutOfRange);
    CHECK_THROWS_AS(pairing_spectrum(one_by_one(1.2, 0.0, true)), SpectrumOutOfRange);
}

TEST_CASE("F=0 reduction: pairing form equals the G-eigenvalue form") {
    const auto lattice = LatticeSpec::chain(64);
    ModelSpec spec;
    spec.kind = ModelKind::CompactCos;
    spec.alpha = 17.0;
    const auto corr = model_correlations(spec, lattice);
    for (int L : {3, 16, 32}) {
        const auto block = restrict(corr, Subregion::interval(lattice, L));
        const double s1 = pairing_spectrum(block).entropy;
        const double s2 = number_conserving_spectrum(block).entropy;
        CHECK(std::abs(s1 - s2) < 1e-10);
    }
}

TEST_CASE("entropy satisfies the log-2 bound and the spectrum invariant") {
    const auto lattice = LatticeSpec::chain(64);
    ModelSpec spec;
    spec.kind = ModelKind::CompactCos;
    spec.alpha = 17.0;
    const auto corr = model_correlations(spec, lattice);
    for (int L = 1; L <= 32; ++L) {
        const auto sp = entanglement_spectrum(restrict(corr, Subregion::interval(lattice, L)));
        CHECK(sp.entropy <= L * std::log(2.0) + 1e-9);
        CHECK(sp.entropy >= 0.0);
        double from_eps = 0.0;
        for (double e : sp.epsilons) {
            CHECK(e >= 0.0);
            from_eps += entropy_term(e);
        }
        CHECK(std::abs(from_eps - sp.entropy) < 1e-10);
    }
}

TEST_CASE("complementarity: S(region) = S(complement) across model kinds") {
    struct Case {
        ModelKind kind;
        double alpha;
        int R;
    };
    for (const Case c : {Case{ModelKind::LocalHopping, 0.0, 100},
                         Case{ModelKind::CompactCos, 30.0, 100},
                         Case{ModelKind::CompactSin, 7.0, 64},
                         Case{ModelKind::NoncompactNLHopping, 2.0, 64},
                         Case{ModelKind::LocalPairing, 0.0, 64},
                         Case{ModelKind::CompactNLPairing, 13.0, 64},
                         Case{ModelKind::NoncompactNLPairing, 8.0, 64}}) {
        const auto lattice = LatticeSpec::chain(c.R);
        ModelSpec spec;
        spec.kind = c.kind;
        spec.alpha = c.alpha;
        const auto corr = model_correlations(spec, lattice);
        const int L = c.R / 4 + 1;
        const double s1 = entanglement_spectrum(restrict(corr, Subregion::interval(lattice, L))).entropy;
        const double s2 =
            entanglement_spectrum(restrict(corr, Subregion::interval(lattice, c.R - L))).entropy;
        CHECK(std::abs(s1 - s2) < 1e-8);
    }

    // 2-d: complement of a square region
    const auto square = LatticeSpec::square(8);
    ModelSpec spec2;
    spec2.kind = ModelKind::CompactSin;
    spec2.alpha = 3.0;
    const auto corr2 = model_correlations(spec2, square);
    const auto region = Subregion::square(square, 3);
    const double s1 = entanglement_spectrum(restrict(corr2, region)).entropy;
    const double s2 = entanglement_spectrum(restrict(corr2, complement_of(square, region))).entropy;
    CHECK(std::abs(s1 - s2) < 1e-8);
}

TEST_CASE("anchor invariance on the periodic lattice") {
    const auto lattice = LatticeSpec::chain(64);
    ModelSpec spec;
    spec.kind = ModelKind::CompactCos;
    spec.alpha = 9.0;
    const auto corr = model_correlations(spec, lattice);
    const double s0 = entanglement_spectrum(restrict(corr, Subregion::interval(lattice, 12, 0))).entropy;
    const double s17 =
        entanglement_spectrum(restrict(corr, Subregion::interval(lattice, 12, 17))).entropy;
    CHECK(std::abs(s0 - s17) < 1e-10);

    const auto square = LatticeSpec::square(8);
    ModelSpec spec2;
    spec2.kind = ModelKind::CompactSin;
    spec2.alpha = 3.0;
    const auto corr2 = model_correlations(spec2, square);
    const double t0 = entanglement_spectrum(restrict(corr2, Subregion::square(square, 3, 0))).entropy;
    const double t1 = entanglement_spectrum(
                          restrict(corr2, Subregion::square(square, 3, square.site_index(3, 4))))
                          .entropy;
    CHECK(std::abs(t0 - t1) < 1e-10);
}

TEST_CASE("entropy_of: gapped superconductor stays O(1)") {
    const auto lattice = LatticeSpec::chain(100);
    ModelSpec spec;
    spec.kind = ModelKind::LocalPairing;
    double prev = -1.0;
    for (int L : {10, 20, 30, 40, 50}) {
        const double s = entropy_of(spec, lattice, Subregion::interval(lattice, L));
        CHECK(s < 1.5);
        if (prev >= 0.0) CHECK(s - prev < 1e-6); // non-increasing growth: already saturated
        prev = s;
    }
    CHECK(prev == doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("entropy_of: scrambled-limit density sits at ln 2 (documented deviation from d ~ 0.5)") {
    const auto lattice = LatticeSpec::chain(400);
    ModelSpec spec;
    spec.kind = ModelKind::CompactCos;
    spec.alpha = 1400.0;
    const double s20 = entropy_of(spec, lattice, Subregion::interval(lattice, 20));
    CHECK(s20 / 20.0 > 0.66);
    CHECK(s20 / 20.0 < std::log(2.0) + 1e-9);
}

TEST_CASE("alpha -> 0 limit of CompactCos matches the squared-derivative band pipeline") {
    const int R = 400;
    const auto lattice = LatticeSpec::chain(R);
    ModelSpec cc;
    cc.kind = ModelKind::CompactCos;
    cc.alpha = 0.01;
    const auto corr_cc = model_correlations(cc, lattice);

    // oracle pipeline: band cos^2 k (the S^2 operator), same filling rule
    HamiltonianPair squared{
        operator_function(build_S(lattice), [](cplx z) { return z * z; }, Parity::Even),
        std::nullopt};
    const auto sol = diagonalize_number_conserving(squared, lattice);
    const auto corr_sq = correlations_number_conserving(sol, select_occupation(sol, 0.5));

    for (int L : {10, 50}) {
        const double s1 =
            entanglement_spectrum(restrict(corr_cc, Subregion::interval(lattice, L))).entropy;
        const double s2 =
            entanglement_spectrum(restrict(corr_sq, Subregion::interval(lattice, L))).entropy;
        CHECK(std::abs(s1 - s2) < 1e-8);
    }
}

TEST_CASE("exact alpha = 0: flat band, trivial multiplet-closed filling, zero entropy") {
    const auto lattice = LatticeSpec::chain(20);
    ModelSpec spec;
    spec.kind = ModelKind::CompactCos;
    spec.alpha = 0.0;
    const auto sol = diagonalize_number_conserving(build_model(spec, lattice), lattice);
    const auto occ = select_occupation(sol, 0.5);
    CHECK(occ.modes.empty());
    CHECK(occ.realized_fraction == 0.0);
    CHECK(entropy_of(spec, lattice, Subregion::interval(lattice, 5)) == 0.0);
}
