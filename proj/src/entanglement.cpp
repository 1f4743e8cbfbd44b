#include "nlf/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nlf {

Subregion Subregion::interval(const LatticeSpec& lattice, int L, int anchor) {
    lattice.validate();
    if (lattice.dim != 1) throw ConfigError("Subregion::interval: 1-d lattices only");
    const int R = lattice.extent[0];
    if (L < 1 || L > R) throw ConfigError("Subregion::interval: L out of range");
    if (anchor < 0 || anchor >= R) throw ConfigError("Subregion::interval: anchor out of range");
    Subregion region;
    region.sites.reserve(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) region.sites.push_back((anchor + i) % R);
    return region;
}

Subregion Subregion::square(const LatticeSpec& lattice, int L, int anchor) {
    lattice.validate();
    if (lattice.dim != 2) throw ConfigError("Subregion::square: 2-d lattices only");
    const int R0 = lattice.extent[0];
    const int R1 = lattice.extent[1];
    if (L < 1 || L > std::min(R0, R1)) throw ConfigError("Subregion::square: L out of range");
    const auto a = lattice.site_coords(anchor);
    Subregion region;
    region.sites.reserve(static_cast<std::size_t>(L) * L);
    for (int dy = 0; dy < L; ++dy)
        for (int dx = 0; dx < L; ++dx)
            region.sites.push_back(lattice.site_index((a[0] + dx) % R0, (a[1] + dy) % R1));
    return region;
}

CorrelationPair restrict(const CorrelationPair& corr, const Subregion& region) {
    const int N = corr.lattice.sites();
    const int L = static_cast<int>(region.sites.size());
    for (int s : region.sites)
        if (s < 0 || s >= N) throw ConfigError("restrict: site index out of range");
    CorrelationPair block;
    block.lattice = corr.lattice;
    block.has_pairing = corr.has_pairing;
    block.G.resize(L, L);
    block.F.resize(L, L);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            block.G(i, j) = corr.G(region.sites[static_cast<std::size_t>(i)],
                                   region.sites[static_cast<std::size_t>(j)]);
            block.F(i, j) = corr.F(region.sites[static_cast<std::size_t>(i)],
                                   region.sites[static_cast<std::size_t>(j)]);
        }
    return block;
}

double entropy_term(double eps) {
    if (!(eps >= 0.0)) return 0.0;
    if (eps > 700.0 || std::isinf(eps)) return 0.0;
    return std::log1p(std::exp(-eps)) + eps / (1.0 + std::exp(eps));
}

EntanglementSpectrum pairing_spectrum(const CorrelationPair& block) {
    const int L = static_cast<int>(block.G.rows());
    if (block.G.imag().cwiseAbs().maxCoeff() > 1e-10)
        throw NumericalError("pairing_spectrum: complex G with nonzero F is not supported");
    const Mat G = block.G.real();
    const Mat& F = block.F;
    const Mat I = Mat::Identity(L, L);
    const Mat M = (G - F - 0.5 * I) * (G + F - 0.5 * I);

    // M is similar to a PSD symmetric matrix; diagonalize as general real and
    // require the spectrum to be real in [0, 1/4].
    Eigen::EigenSolver<Mat> es(M);
    EntanglementSpectrum spectrum;
    spectrum.epsilons.reserve(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) {
        const cplx mu_c = es.eigenvalues()[i];
        if (std::abs(mu_c.imag()) > 1e-8)
            throw SpectrumOutOfRange("pairing_spectrum: complex entanglement eigenvalue");
        double mu = mu_c.real();
        if (mu < -1e-8 || mu > 0.25 + 1e-8)
            throw SpectrumOutOfRange("pairing_spectrum: eigenvalue outside [0, 1/4]");
        mu = std::clamp(mu, 0.0, 0.25);
        double eps;
        if (mu >= 0.25 - 1e-14) {
            eps = std::numeric_limits<double>::infinity();
        } else {
            const double x = 2.0 * std::sqrt(mu);
            eps = std::log((1.0 + x) / (1.0 - x)); // 2 artanh(x)
        }
        spectrum.epsilons.push_back(eps);
        spectrum.entropy += entropy_term(eps);
    }
    std::sort(spectrum.epsilons.begin(), spectrum.epsilons.end());
    return spectrum;
}

EntanglementSpectrum number_conserving_spectrum(const CorrelationPair& block) {
    Eigen::SelfAdjointEigenSolver<CMat> es(block.G, Eigen::EigenvaluesOnly);
    EntanglementSpectrum spectrum;
    const int L = static_cast<int>(block.G.rows());
    spectrum.epsilons.reserve(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) {
        double z = es.eigenvalues()[i];
        if (z < -1e-8 || z > 1.0 + 1e-8)
            throw SpectrumOutOfRange("number_conserving_spectrum: occupation outside [0, 1]");
        z = std::clamp(z, 0.0, 1.0);
        double eps;
        if (z <= 0.0 || z >= 1.0) {
            eps = std::numeric_limits<double>::infinity();
        } else {
            eps = std::abs(std::log((1.0 - z) / z));
        }
        spectrum.epsilons.push_back(eps);
        spectrum.entropy += entropy_term(eps);
    }
    std::sort(spectrum.epsilons.begin(), spectrum.epsilons.end());
    return spectrum;
}

EntanglementSpectrum entanglement_spectrum(const CorrelationPair& block) {
    if (block.has_pairing) return pairing_spectrum(block);
    return number_conserving_spectrum(block);
}

double entropy_of(const ModelSpec& spec, const LatticeSpec& lattice, const Subregion& region) {
    const HamiltonianPair ham = build_model(spec, lattice);
    CorrelationPair corr;
    if (spec.is_pairing()) {
        corr = correlations_bdg(diagonalize_bdg(ham, lattice));
    } else {
        const auto sol = diagonalize_number_conserving(ham, lattice);
        corr = correlations_number_conserving(sol, select_occupation(sol, spec.filling));
    }
    return entanglement_spectrum(restrict(corr, region)).entropy;
}

} // namespace nlf
