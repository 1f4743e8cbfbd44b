#pragma once

#include <vector>

#include "nlf/models.hpp"

namespace nlf {

// Two energies count as degenerate when |E_i - E_j| < 1e-10 * max(1, |E_i|).
bool degenerate_energies(double a, double b);

struct QuadraticSolution {
    enum class Kind { NumberConserving, BdG };

    Kind kind = Kind::NumberConserving;
    LatticeSpec lattice;
    // Sorted ascending; ties broken by canonical mode index.
    Vec energies;
    // NumberConserving only: canonical plane-wave mode id per sorted slot.
    std::vector<int> modes;
    // BdG only: column n holds u_n / v_n for the n-th nonnegative energy.
    Mat U, V;
};

// Plane-wave diagonalization through the circulant symbol.
QuadraticSolution diagonalize_number_conserving(const HamiltonianPair& ham,
                                                const LatticeSpec& lattice);

// Quasiparticle modes of the pairing Hamiltonian.  Solved through the SVD of
// C = A + B, whose singular values are exactly the nonnegative quasiparticle
// energies and whose singular vectors give p = u+v, m = u-v; this keeps
// G and F symmetric/antisymmetric to machine precision at any energy scale.
QuadraticSolution diagonalize_bdg(const HamiltonianPair& ham, const LatticeSpec& lattice);

// Literal 2N x 2N [[A, B], [-B, -A]] symmetric eigensolve; verification route.
QuadraticSolution diagonalize_bdg_dense_oracle(const HamiltonianPair& ham,
                                               const LatticeSpec& lattice);

// Max deviation between the solution's energies and a dense eigensolve of A
// (number-conserving cross-check).
double dense_spectrum_deviation(const HamiltonianPair& ham, const QuadraticSolution& sol);

struct FermiPointCount {
    int crossings = 0;
    double c_eff_estimate = 0.0; // half a central charge per crossing
};

// Counts sign changes of E(k) - fermi_energy around the 1-d Brillouin zone.
FermiPointCount count_fermi_points(const ModelSpec& spec, const LatticeSpec& lattice,
                                   double fermi_energy);

} // namespace nlf
