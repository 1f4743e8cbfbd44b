#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nlf/lattice.hpp"

namespace nlf {

enum class ModelKind {
    LocalHopping,        // A = -S, dispersion -s(k) (conventional tight binding)
    LocalPairing,        // A = S, B = T           (1-d)
    NoncompactNLPairing, // A = cosh(aS), B = sinh(aT)   (1-d)
    CompactNLPairing,    // A = cos(aS), B = sinh(-aT)   (1-d)
    NoncompactNLHopping, // A = eps exp(-a^2 S), dispersion eps e^{-a^2 cos k} (1-d)
    CompactCos,          // A = eps cos(i a T), dispersion eps cos(a sin k)    (1-d)
    CompactSin,          // A = eps sin(a S), dispersion eps sin(a s(k))       (1-d or 2-d)
};

const char* to_string(ModelKind kind);
ModelKind model_kind_from_string(std::string_view name);

struct ModelSpec {
    ModelKind kind = ModelKind::LocalHopping;
    double alpha = 0.0;
    double epsilon = 1.0;
    double filling = 0.5; // ignored by pairing kinds
    Normalization norm = Normalization::PaperLiteral;

    bool is_pairing() const;
    void validate(const LatticeSpec& lattice) const;
    std::string label() const;
};

struct HamiltonianPair {
    LatticeOperator A;                // symmetric kinetic matrix
    std::optional<LatticeOperator> B; // antisymmetric pairing matrix
};

HamiltonianPair build_model(const ModelSpec& spec, const LatticeSpec& lattice);

// Single-particle (or quasiparticle, for pairing kinds: positive branch)
// energies in canonical mode order.
std::vector<std::pair<Wavenumber, double>> dispersion(const ModelSpec& spec,
                                                      const LatticeSpec& lattice);

} // namespace nlf
