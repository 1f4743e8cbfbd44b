#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nlf/correlations.hpp"

using namespace nlf;

TEST_CASE("A is exactly symmetric and B exactly antisymmetric for every kind") {
    const auto lattice = LatticeSpec::chain(24);
    for (ModelKind kind : {ModelKind::LocalHopping, ModelKind::LocalPairing,
                           ModelKind::NoncompactNLPairing, ModelKind::CompactNLPairing,
                           ModelKind::NoncompactNLHopping, ModelKind::CompactCos,
                           ModelKind::CompactSin}) {
        ModelSpec spec;
        spec.kind = kind;
        spec.alpha = 3.0;
        const auto ham = build_model(spec, lattice);
        const Mat A = ham.A.dense();
        CHECK((A - A.transpose()).cwiseAbs().maxCoeff() == 0.0);
        if (ham.B) {
            const Mat B = ham.B->dense();
            CHECK((B + B.transpose()).cwiseAbs().maxCoeff() == 0.0);
        }
        CHECK(ham.B.has_value() == spec.is_pairing());
    }
}

TEST_CASE("LocalPairing quasiparticle energies are identically 1") {
    ModelSpec spec;
    spec.kind = ModelKind::LocalPairing;
    const auto disp = dispersion(spec, LatticeSpec::chain(100));
    for (const auto& [w, e] : disp) CHECK(std::abs(e - 1.0) < 1e-10);
}

TEST_CASE("CompactNLPairing dispersion: E^2 = cos^2(30 cos k) + sin^2(30 sin k)") {
    const int R = 100;
    ModelSpec spec;
    spec.kind = ModelKind::CompactNLPairing;
    spec.alpha = 30.0;
    const auto disp = dispersion(spec, LatticeSpec::chain(R));
    for (const auto& [w, e] : disp) {
        const double c = std::cos(30.0 * std::cos(w.k[0]));
        const double s = std::sin(30.0 * std::sin(w.k[0]));
        CHECK(std::abs(e * e - (c * c + s * s)) < 1e-9);
    }
    // spot value quoted for n = 0: E^2 = cos^2(30) + 0
    const auto& at0 = disp[static_cast<std::size_t>(R / 2)];
    REQUIRE(at0.first.n[0] == 0);
    CHECK(at0.second * at0.second == doctest::Approx(std::cos(30.0) * std::cos(30.0)).epsilon(1e-9));
    CHECK(at0.second * at0.second == doctest::Approx(0.0238).epsilon(2e-2));
}

TEST_CASE("CompactCos with eps = 1/alpha^2 approaches the quadratic band 1/a^2 - sin^2(k)/2") {
    const double a = 0.01;
    ModelSpec spec;
    spec.kind = ModelKind::CompactCos;
    spec.alpha = a;
    spec.epsilon = 1.0 / (a * a);
    const auto disp = dispersion(spec, LatticeSpec::chain(64));
    for (const auto& [w, e] : disp) {
        const double s = std::sin(w.k[0]);
        const double quadratic = 1.0 / (a * a) - 0.5 * s * s;
        CHECK(std::abs(e - quadratic) < 1e-5); // next Taylor term is O(a^2)
    }
}

TEST_CASE("CompactCos dispersion values at special points") {
    ModelSpec spec;
    spec.kind = ModelKind::CompactCos;
    spec.alpha = std::numbers::pi / 2.0;
    spec.epsilon = 2.5;
    const int R = 8;
    const auto disp = dispersion(spec, LatticeSpec::chain(R));
    // k = 0 -> eps * cos(0) = eps
    CHECK(disp[4].first.n[0] == 0);
    CHECK(disp[4].second == doctest::Approx(2.5).epsilon(1e-14));
    // k = pi/2 -> eps * cos(alpha) with alpha = pi/2 -> ~0
    CHECK(disp[6].first.n[0] == 2);
    CHECK(std::abs(disp[6].second) < 1e-14);
}

TEST_CASE("NoncompactNLHopping preserves the -cos k energy order") {
    const int R = 100;
    const auto lattice = LatticeSpec::chain(R);
    ModelSpec nl;
    nl.kind = ModelKind::NoncompactNLHopping;
    nl.alpha = 2.0;
    ModelSpec local;
    local.kind = ModelKind::LocalHopping;
    const auto sol_nl = diagonalize_number_conserving(build_model(nl, lattice), lattice);
    const auto sol_loc = diagonalize_number_conserving(build_model(local, lattice), lattice);
    CHECK(sol_nl.modes == sol_loc.modes);
}

TEST_CASE("NoncompactNLHopping and LocalHopping share the half-filled occupation set") {
    const auto lattice = LatticeSpec::chain(100);
    for (double a : {2.0, 30.0}) {
        ModelSpec nl;
        nl.kind = ModelKind::NoncompactNLHopping;
        nl.alpha = a;
        ModelSpec local;
        local.kind = ModelKind::LocalHopping;
        const auto sol_nl = diagonalize_number_conserving(build_model(nl, lattice), lattice);
        const auto sol_loc = diagonalize_number_conserving(build_model(local, lattice), lattice);
        auto occ_nl = select_occupation(sol_nl, 0.5).modes;
        auto occ_loc = select_occupation(sol_loc, 0.5).modes;
        std::sort(occ_nl.begin(), occ_nl.end());
        std::sort(occ_loc.begin(), occ_loc.end());
        CHECK(occ_nl == occ_loc);
    }
}

TEST_CASE("kind/dim compatibility and parameter validation") {
    const auto square = LatticeSpec::square(6);
    for (ModelKind kind : {ModelKind::LocalPairing, ModelKind::NoncompactNLPairing,
                           ModelKind::CompactNLPairing, ModelKind::CompactCos,
                           ModelKind::NoncompactNLHopping}) {
        ModelSpec spec;
        spec.kind = kind;
        spec.alpha = 1.0;
        CHECK_THROWS_AS(build_model(spec, square), ConfigError);
    }
    ModelSpec ok2d;
    ok2d.kind = ModelKind::CompactSin;
    ok2d.alpha = 2.0;
    CHECK_NOTHROW(build_model(ok2d, square));
    ok2d.kind = ModelKind::LocalHopping;
    CHECK_NOTHROW(build_model(ok2d, square));

    ModelSpec bad;
    bad.kind = ModelKind::CompactCos;
    bad.alpha = -1.0;
    CHECK_THROWS_AS(build_model(bad, LatticeSpec::chain(8)), ConfigError);
}

TEST_CASE("model kind names round-trip") {
    for (ModelKind kind : {ModelKind::LocalHopping, ModelKind::LocalPairing,
                           ModelKind::NoncompactNLPairing, ModelKind::CompactNLPairing,
                           ModelKind::NoncompactNLHopping, ModelKind::CompactCos,
                           ModelKind::CompactSin})
        CHECK(model_kind_from_string(to_string(kind)) == kind);
    CHECK_THROWS_AS(model_kind_from_string("NoSuchModel"), ConfigError);
}
