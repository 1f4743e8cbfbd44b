#include "nlf/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nlf {

bool degenerate_energies(double a, double b) {
    return std::abs(a - b) < 1e-10 * std::max(1.0, std::abs(a));
}

namespace {

// indices sorting `e` ascending, ties by index
std::vector<int> sorted_order(const Vec& e) {
    std::vector<int> order(static_cast<std::size_t>(e.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&e](int i, int j) { return e[i] < e[j]; });
    return order;
}

} // namespace

QuadraticSolution diagonalize_number_conserving(const HamiltonianPair& ham,
                                                const LatticeSpec& lattice) {
    if (ham.B) throw ConfigError("diagonalize_number_conserving: Hamiltonian has a pairing term");
    const int N = lattice.sites();
    Vec e(N);
    for (int j = 0; j < N; ++j) e[j] = ham.A.symbol()[j].real();

    const auto order = sorted_order(e);
    QuadraticSolution sol;
    sol.kind = QuadraticSolution::Kind::NumberConserving;
    sol.lattice = lattice;
    sol.energies.resize(N);
    sol.modes.resize(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        sol.modes[static_cast<std::size_t>(i)] = order[static_cast<std::size_t>(i)];
        sol.energies[i] = e[order[static_cast<std::size_t>(i)]];
    }
    return sol;
}

QuadraticSolution diagonalize_bdg(const HamiltonianPair& ham, const LatticeSpec& lattice) {
    if (!ham.B) throw ConfigError("diagonalize_bdg: Hamiltonian has no pairing term");
    const int N = lattice.sites();
    const Mat A = ham.A.dense();
    const Mat B = ham.B->dense();
    if (!A.allFinite() || !B.allFinite())
        throw NumericalError("diagonalize_bdg: non-finite Hamiltonian entries (symbol overflow)");

    // C = A + B; C = M diag(E) P^T with E >= 0, p_n = u_n + v_n, m_n = u_n - v_n.
    Eigen::BDCSVD<Mat> svd(A + B, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vec sigma = svd.singularValues(); // descending
    if (sigma[N - 1] < 1e-12 * std::max(1.0, sigma[0]))
        throw DegenerateZeroMode("diagonalize_bdg: quasiparticle energy within 1e-12 of zero; ground state ill-defined");

    QuadraticSolution sol;
    sol.kind = QuadraticSolution::Kind::BdG;
    sol.lattice = lattice;
    sol.energies.resize(N);
    sol.U.resize(N, N);
    sol.V.resize(N, N);
    for (int i = 0; i < N; ++i) {
        const int src = N - 1 - i; // ascending
        sol.energies[i] = sigma[src];
        const Vec p = svd.matrixV().col(src);
        const Vec m = svd.matrixU().col(src);
        sol.U.col(i) = 0.5 * (p + m);
        sol.V.col(i) = 0.5 * (p - m);
    }
    return sol;
}

QuadraticSolution diagonalize_bdg_dense_oracle(const HamiltonianPair& ham,
                                               const LatticeSpec& lattice) {
    if (!ham.B) throw ConfigError("diagonalize_bdg_dense_oracle: no pairing term");
    const int N = lattice.sites();
    const Mat A = ham.A.dense();
    const Mat B = ham.B->dense();
    Mat H(2 * N, 2 * N);
    H.topLeftCorner(N, N) = A;
    H.topRightCorner(N, N) = B;
    H.bottomLeftCorner(N, N) = -B;
    H.bottomRightCorner(N, N) = -A;
    Eigen::SelfAdjointEigenSolver<Mat> es(H);
    const Vec w = es.eigenvalues(); // ascending

    QuadraticSolution sol;
    sol.kind = QuadraticSolution::Kind::BdG;
    sol.lattice = lattice;
    sol.energies.resize(N);
    sol.U.resize(N, N);
    sol.V.resize(N, N);
    int out = 0;
    for (int i = 0; i < 2 * N; ++i) {
        if (w[i] <= 0.0) continue;
        if (out >= N) throw NumericalError("diagonalize_bdg_dense_oracle: more than N positive modes");
        if (std::abs(w[i]) < 1e-12)
            throw DegenerateZeroMode("diagonalize_bdg_dense_oracle: zero quasiparticle mode");
        sol.energies[out] = w[i];
        sol.U.col(out) = es.eigenvectors().col(i).head(N);
        sol.V.col(out) = es.eigenvectors().col(i).tail(N);
        ++out;
    }
    if (out != N) throw DegenerateZeroMode("diagonalize_bdg_dense_oracle: positive branch has fewer than N modes");
    return sol;
}

double dense_spectrum_deviation(const HamiltonianPair& ham, const QuadraticSolution& sol) {
    Eigen::SelfAdjointEigenSolver<Mat> es(ham.A.dense(), Eigen::EigenvaluesOnly);
    Vec dense = es.eigenvalues();
    Vec symb = sol.energies;
    std::sort(dense.data(), dense.data() + dense.size());
    std::sort(symb.data(), symb.data() + symb.size());
    return (dense - symb).cwiseAbs().maxCoeff();
}

FermiPointCount count_fermi_points(const ModelSpec& spec, const LatticeSpec& lattice,
                                   double fermi_energy) {
    if (lattice.dim != 1)
        throw ConfigError("count_fermi_points: 1-d lattices only");
    if (spec.is_pairing())
        throw ConfigError("count_fermi_points: number-conserving models only");
    const auto disp = dispersion(spec, lattice);
    const int R = lattice.extent[0];

    std::vector<int> signs;
    signs.reserve(static_cast<std::size_t>(R));
    for (int j = 0; j < R; ++j) {
        const double v = disp[static_cast<std::size_t>(j)].second - fermi_energy;
        if (v > 0.0) signs.push_back(1);
        else if (v < 0.0) signs.push_back(-1); // exact touches are not crossings
    }
    FermiPointCount result;
    const std::size_t n = signs.size();
    for (std::size_t i = 0; i < n; ++i)
        if (signs[i] != signs[(i + 1) % n]) ++result.crossings;
    result.c_eff_estimate = 0.5 * result.crossings;
    return result;
}

} // namespace nlf
