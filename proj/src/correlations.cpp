#include "nlf/correlations.hpp"

#include <algorithm>
#include <cmath>

#include "nlf/entanglement.hpp"
#include "nlf/rng.hpp"

namespace nlf {

OccupationSet select_occupation(const QuadraticSolution& sol, double fraction) {
    if (sol.kind != QuadraticSolution::Kind::NumberConserving)
        throw ConfigError("select_occupation: number-conserving solutions only");
    if (fraction < 0.0 || fraction > 1.0)
        throw ConfigError("select_occupation: fraction must lie in [0, 1]");
    const int N = static_cast<int>(sol.energies.size());
    const int M = static_cast<int>(std::llround(fraction * N));

    int count = M;
    if (M > 0 && M < N && degenerate_energies(sol.energies[M - 1], sol.energies[M])) {
        // Walk to the multiplet edges (chains of pairwise-degenerate neighbors).
        int lo = M;
        while (lo > 0 && degenerate_energies(sol.energies[lo - 1], sol.energies[lo]))
            --lo;
        int hi = M;
        while (hi < N && degenerate_energies(sol.energies[hi - 1], sol.energies[hi]))
            ++hi;
        count = (hi - M < M - lo) ? hi : lo;
    }

    OccupationSet occ;
    occ.requested_fraction = fraction;
    occ.realized_fraction = static_cast<double>(count) / N;
    occ.modes.assign(sol.modes.begin(), sol.modes.begin() + count);
    return occ;
}

double fermi_energy_of(const QuadraticSolution& sol, const OccupationSet& occ) {
    const int N = static_cast<int>(sol.energies.size());
    const int M = static_cast<int>(occ.modes.size());
    if (M == 0) return sol.energies[0] - 1.0;
    if (M == N) return sol.energies[N - 1] + 1.0;
    return 0.5 * (sol.energies[M - 1] + sol.energies[M]);
}

namespace {

std::vector<char> occupation_mask(const LatticeSpec& lattice, const OccupationSet& occ) {
    std::vector<char> mask(static_cast<std::size_t>(lattice.sites()), 0);
    for (int m : occ.modes) mask[static_cast<std::size_t>(m)] = 1;
    return mask;
}

CorrelationPair pair_from_kernel(const LatticeSpec& lattice, const CVec& g) {
    const int N = lattice.sites();
    const int R0 = lattice.extent[0];
    const int R1 = lattice.extent[1];
    CMat G(N, N);
    for (int x = 0; x < N; ++x) {
        const auto cx = lattice.site_coords(x);
        for (int y = 0; y < N; ++y) {
            const auto cy = lattice.site_coords(y);
            const int d0 = ((cx[0] - cy[0]) % R0 + R0) % R0;
            const int d1 = ((cx[1] - cy[1]) % R1 + R1) % R1;
            G(x, y) = g[d0 + R0 * d1];
        }
    }
    CorrelationPair out;
    out.lattice = lattice;
    out.G = std::move(G);
    out.F = Mat::Zero(N, N);
    out.has_pairing = false;
    return out;
}

} // namespace

CorrelationPair correlations_number_conserving(const QuadraticSolution& sol,
                                               const OccupationSet& occ) {
    if (sol.kind != QuadraticSolution::Kind::NumberConserving)
        throw ConfigError("correlations_number_conserving: wrong solution kind");
    // g(D) = (1/N) sum_{filled} e^{+ik.D}; G_xy = g(x - y)
    const CVec g = dft::occupation_kernel(sol.lattice, occupation_mask(sol.lattice, occ));
    return pair_from_kernel(sol.lattice, g);
}

CorrelationPair correlations_number_conserving_dense(const QuadraticSolution& sol,
                                                     const OccupationSet& occ) {
    if (sol.kind != QuadraticSolution::Kind::NumberConserving)
        throw ConfigError("correlations_number_conserving_dense: wrong solution kind");
    const LatticeSpec& lattice = sol.lattice;
    const int N = lattice.sites();
    const auto grid = wavenumber_grid(lattice);
    CMat G = CMat::Zero(N, N);
    for (int m : occ.modes) {
        CVec phi(N);
        const auto& w = grid[static_cast<std::size_t>(m)];
        for (int s = 0; s < N; ++s) {
            const auto c = lattice.site_coords(s);
            const double phase = w.k[0] * c[0] + w.k[1] * c[1];
            phi[s] = cplx(std::cos(phase), std::sin(phase)) / std::sqrt(static_cast<double>(N));
        }
        G += phi * phi.adjoint(); // <c+_x c_y> = phi(x) conj(phi(y)) summed over filled
    }
    CorrelationPair out;
    out.lattice = lattice;
    out.G = std::move(G);
    out.F = Mat::Zero(N, N);
    out.has_pairing = false;
    return out;
}

CorrelationPair correlations_bdg(const QuadraticSolution& sol) {
    if (sol.kind != QuadraticSolution::Kind::BdG)
        throw ConfigError("correlations_bdg: BdG solutions only");
    const int N = sol.lattice.sites();
    Mat G = sol.V * sol.V.transpose();
    Mat F = sol.V * sol.U.transpose();
    const double asym = (F + F.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10)
        throw NonAntisymmetricF("correlations_bdg: F antisymmetry violated beyond 1e-10 (eigensolver failure)");
    F = 0.5 * (F - F.transpose().eval());
    G = 0.5 * (G + G.transpose().eval());

    CorrelationPair out;
    out.lattice = sol.lattice;
    out.G = G.cast<cplx>();
    out.F = std::move(F);
    out.has_pairing = true;
    return out;
}

ToeplitzOracleStats random_toeplitz_oracle(int R, int trials, std::uint64_t seed) {
    if (R < 16) throw ConfigError("random_toeplitz_oracle: R must be >= 16");
    if (trials < 1) throw ConfigError("random_toeplitz_oracle: trials must be >= 1");
    const LatticeSpec lattice = LatticeSpec::chain(R);
    const CounterRng rng(seed);

    ToeplitzOracleStats stats;
    stats.lattice_size = R;
    stats.trials = trials;
    stats.seed = seed;
    stats.expected_variance = 1.0 / (8.0 * R);
    stats.mean_entropy.assign(static_cast<std::size_t>(R / 2), 0.0);

    double var_sum = 0.0;
    std::size_t var_count = 0;
    for (int t = 0; t < trials; ++t) {
        std::vector<char> mask(static_cast<std::size_t>(R));
        for (int j = 0; j < R; ++j)
            mask[static_cast<std::size_t>(j)] =
                rng.coin(static_cast<std::uint64_t>(t) * R + j) ? 1 : 0;
        const CVec g = dft::occupation_kernel(lattice, mask);
        for (int d = 1; d < R; ++d) {
            var_sum += g[d].real() * g[d].real();
            ++var_count;
        }
        const CorrelationPair corr = pair_from_kernel(lattice, g);
        for (int L = 1; L <= R / 2; ++L) {
            const auto region = Subregion::interval(lattice, L);
            stats.mean_entropy[static_cast<std::size_t>(L - 1)] +=
                entanglement_spectrum(restrict(corr, region)).entropy / trials;
        }
    }
    // Re g has zero mean over displacements by symmetry; second moment as variance.
    stats.offdiag_variance = var_sum / static_cast<double>(var_count);

    double num = 0.0, den = 0.0;
    for (int L = 1; L <= R / 2; ++L) {
        num += L * stats.mean_entropy[static_cast<std::size_t>(L - 1)];
        den += static_cast<double>(L) * L;
    }
    stats.slope = num / den;
    return stats;
}

} // namespace nlf
