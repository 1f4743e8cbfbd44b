#pragma once

#include "nlf/correlations.hpp"

namespace nlf {

struct Subregion {
    std::vector<int> sites; // distinct site indices, region order

    // Contiguous interval of L sites starting at `anchor` (periodic wrap).
    static Subregion interval(const LatticeSpec& lattice, int L, int anchor = 0);
    // L x L square anchored at site `anchor`, row-major within the square.
    static Subregion square(const LatticeSpec& lattice, int L, int anchor = 0);
};

// Principal G/F blocks in region site order.
CorrelationPair restrict(const CorrelationPair& corr, const Subregion& region);

struct EntanglementSpectrum {
    std::vector<double> epsilons; // single-particle entanglement energies, >= 0 (+inf allowed)
    double entropy = 0.0;
};

// Peschel spectrum of a correlation block.  Dispatches to the pairing form
// when F != 0 and to the G-eigenvalue reduction otherwise.
EntanglementSpectrum entanglement_spectrum(const CorrelationPair& block);

// Pairing form: eigenvalues mu of (G - F - 1/2)(G + F - 1/2) in [0, 1/4],
// eps = 2 artanh(2 sqrt(mu)).  Valid for any block, including F = 0.
EntanglementSpectrum pairing_spectrum(const CorrelationPair& block);

// Reduction for F = 0: occupations zeta (eigenvalues of Hermitian G) and
// binary entropy.
EntanglementSpectrum number_conserving_spectrum(const CorrelationPair& block);

// entropy contribution of one mode: log(1+e^-eps) + eps/(1+e^eps)
double entropy_term(double eps);

// Full pipeline: build -> diagonalize -> correlations -> restrict -> spectrum.
double entropy_of(const ModelSpec& spec, const LatticeSpec& lattice, const Subregion& region);

} // namespace nlf
