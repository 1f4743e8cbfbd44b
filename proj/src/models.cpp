#include "nlf/models.hpp"

#include <cmath>
#include <sstream>

namespace nlf {

const char* to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::LocalHopping: return "LocalHopping";
    case ModelKind::LocalPairing: return "LocalPairing";
    case ModelKind::NoncompactNLPairing: return "NoncompactNLPairing";
    case ModelKind::CompactNLPairing: return "CompactNLPairing";
    case ModelKind::NoncompactNLHopping: return "NoncompactNLHopping";
    case ModelKind::CompactCos: return "CompactCos";
    case ModelKind::CompactSin: return "CompactSin";
    }
    return "?";
}

ModelKind model_kind_from_string(std::string_view name) {
    for (ModelKind k : {ModelKind::LocalHopping, ModelKind::LocalPairing,
                        ModelKind::NoncompactNLPairing, ModelKind::CompactNLPairing,
                        ModelKind::NoncompactNLHopping, ModelKind::CompactCos,
                        ModelKind::CompactSin})
        if (name == to_string(k)) return k;
    throw ConfigError("unknown model kind: " + std::string(name));
}

bool ModelSpec::is_pairing() const {
    return kind == ModelKind::LocalPairing || kind == ModelKind::NoncompactNLPairing ||
           kind == ModelKind::CompactNLPairing;
}

void ModelSpec::validate(const LatticeSpec& lattice) const {
    lattice.validate();
    if (alpha < 0.0) throw ConfigError("ModelSpec: alpha must be >= 0");
    if (!is_pairing() && (filling <= 0.0 || filling > 1.0))
        throw ConfigError("ModelSpec: filling must lie in (0, 1]");
    const bool needs_1d = is_pairing() || kind == ModelKind::CompactCos ||
                          kind == ModelKind::NoncompactNLHopping;
    if (needs_1d && lattice.dim != 1) {
        std::ostringstream msg;
        msg << to_string(kind) << " requires a 1-d lattice";
        throw ConfigError(msg.str());
    }
}

std::string ModelSpec::label() const {
    std::ostringstream out;
    out << to_string(kind);
    if (kind != ModelKind::LocalHopping && kind != ModelKind::LocalPairing)
        out << " alpha=" << alpha;
    return out.str();
}

HamiltonianPair build_model(const ModelSpec& spec, const LatticeSpec& lattice) {
    spec.validate(lattice);
    const double a = spec.alpha;
    const double eps = spec.epsilon;
    const LatticeOperator S = build_S(lattice, spec.norm);

    switch (spec.kind) {
    case ModelKind::LocalHopping:
        // Minus sign gives the conventional band -s(k), so the half-filled
        // occupation set coincides with NoncompactNLHopping's.
        return {S.scaled(-eps), std::nullopt};
    case ModelKind::LocalPairing:
        return {S.scaled(eps), build_T(lattice, spec.norm).scaled(eps)};
    case ModelKind::NoncompactNLPairing: {
        auto A = operator_function(S, [a](cplx z) { return std::cosh(a * z); }, Parity::Even);
        auto B = operator_function(build_T(lattice, spec.norm),
                                   [a](cplx z) { return std::sinh(a * z); }, Parity::Odd);
        return {A.scaled(eps), B.scaled(eps)};
    }
    case ModelKind::CompactNLPairing: {
        auto A = operator_function(S, [a](cplx z) { return std::cos(a * z); }, Parity::Even);
        auto B = operator_function(build_T(lattice, spec.norm),
                                   [a](cplx z) { return std::sinh(-a * z); }, Parity::Odd);
        return {A.scaled(eps), B.scaled(eps)};
    }
    case ModelKind::NoncompactNLHopping: {
        auto A = operator_function(S, [a](cplx z) { return std::exp(-a * a * z); }, Parity::Even);
        return {A.scaled(eps), std::nullopt};
    }
    case ModelKind::CompactCos: {
        // cos(i a T): the T symbol is i sin k, so the dispersion is cos(a sin k).
        auto A = operator_function(build_T(lattice, spec.norm),
                                   [a](cplx z) { return std::cos(cplx(0.0, a) * z); }, Parity::Even);
        return {A.scaled(eps), std::nullopt};
    }
    case ModelKind::CompactSin: {
        auto A = operator_function(S, [a](cplx z) { return std::sin(a * z); }, Parity::Even);
        return {A.scaled(eps), std::nullopt};
    }
    }
    throw ConfigError("build_model: unreachable");
}

std::vector<std::pair<Wavenumber, double>> dispersion(const ModelSpec& spec,
                                                      const LatticeSpec& lattice) {
    const HamiltonianPair ham = build_model(spec, lattice);
    const auto grid = wavenumber_grid(lattice);
    const int N = lattice.sites();
    std::vector<std::pair<Wavenumber, double>> out;
    out.reserve(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
        double e;
        if (ham.B) {
            const cplx av = ham.A.symbol()[j];
            const cplx bv = ham.B->symbol()[j];
            e = std::sqrt(std::norm(av) + std::norm(bv));
        } else {
            e = ham.A.symbol()[j].real();
        }
        out.emplace_back(grid[j], e);
    }
    return out;
}

} // namespace nlf
