#pragma once

#include <cstdint>
#include <vector>

#include "nlf/spectral.hpp"

namespace nlf {

struct OccupationSet {
    std::vector<int> modes; // canonical mode ids of the filled plane waves
    double requested_fraction = 0.0;
    double realized_fraction = 0.0;
};

// Fills the round(fraction*N) lowest-energy modes.  Degenerate multiplets at
// the boundary are never split: the set extends or shrinks to the nearest
// multiplet edge, choosing the count closer to the request (ties: smaller).
// The realized fraction is reported, never silently altered.
OccupationSet select_occupation(const QuadraticSolution& sol, double fraction);

// Midpoint between the highest filled and lowest empty energy.
double fermi_energy_of(const QuadraticSolution& sol, const OccupationSet& occ);

struct CorrelationPair {
    LatticeSpec lattice;
    CMat G;            // <c+_x c_y>, Hermitian
    Mat F;             // <c+_x c+_y>, antisymmetric (zero for number-conserving)
    bool has_pairing = false;
};

// G_xy = (1/N) sum_{filled} e^{i k.(x-y)} through the Fourier kernel; F = 0.
CorrelationPair correlations_number_conserving(const QuadraticSolution& sol,
                                               const OccupationSet& occ);

// Same quantity as a dense sum of plane-wave outer products (oracle route).
CorrelationPair correlations_number_conserving_dense(const QuadraticSolution& sol,
                                                     const OccupationSet& occ);

// G = sum_n v_n v_n^T, F = sum_n v_n u_n^T over the positive-energy modes.
CorrelationPair correlations_bdg(const QuadraticSolution& sol);

struct ToeplitzOracleStats {
    int lattice_size = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<double> mean_entropy; // L = 1..R/2
    double slope = 0.0;               // through-origin fit of the mean curve
    double offdiag_variance = 0.0;    // pooled variance of Re g(D != 0)
    double expected_variance = 0.0;   // sigma_0^2 / (2R) = 1/(8R)
};

// Random half-filled occupations (counter RNG) on a 1-d ring: entropy curve
// statistics plus the off-diagonal variance of the random Toeplitz kernel.
ToeplitzOracleStats random_toeplitz_oracle(int R, int trials, std::uint64_t seed);

} // namespace nlf
