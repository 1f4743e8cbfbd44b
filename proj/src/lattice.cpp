#include "nlf/lattice.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace nlf {

LatticeSpec LatticeSpec::chain(int R) {
    LatticeSpec lat;
    lat.dim = 1;
    lat.extent = {R, 1};
    lat.validate();
    return lat;
}

LatticeSpec LatticeSpec::square(int R) {
    LatticeSpec lat;
    lat.dim = 2;
    lat.extent = {R, R};
    lat.validate();
    return lat;
}

void LatticeSpec::validate() const {
    if (dim != 1 && dim != 2)
        throw ConfigError("LatticeSpec: dim must be 1 or 2");
    for (int a = 0; a < dim; ++a)
        if (extent[a] < 4)
            throw ConfigError("LatticeSpec: every extent must be >= 4 (periodic wraparound would double-count)");
    if (dim == 1 && extent[1] != 1)
        throw ConfigError("LatticeSpec: 1-d lattice must have extent[1] == 1");
}

std::vector<Wavenumber> wavenumber_grid(const LatticeSpec& lattice) {
    const int R0 = lattice.extent[0];
    const int R1 = lattice.extent[1];
    std::vector<Wavenumber> grid(static_cast<std::size_t>(lattice.sites()));
    for (int j1 = 0; j1 < R1; ++j1) {
        for (int j0 = 0; j0 < R0; ++j0) {
            Wavenumber w;
            w.n[0] = j0 - R0 / 2;
            w.k[0] = 2.0 * std::numbers::pi * w.n[0] / R0;
            if (lattice.dim == 2) {
                w.n[1] = j1 - R1 / 2;
                w.k[1] = 2.0 * std::numbers::pi * w.n[1] / R1;
            }
            grid[static_cast<std::size_t>(j0 + R0 * j1)] = w;
        }
    }
    return grid;
}

double neighbor_weight(const LatticeSpec& lattice, Normalization norm) {
    switch (norm) {
    case Normalization::ForceHalf: return 0.5;
    case Normalization::ForceUnit: return 1.0;
    case Normalization::PaperLiteral: return lattice.dim == 1 ? 0.5 : 1.0;
    }
    return 0.5;
}

LatticeOperator::LatticeOperator(LatticeSpec lattice, Vec kernel, CVec symbol)
    : lattice_(lattice), kernel_(std::move(kernel)), symbol_(std::move(symbol)) {
    lattice_.validate();
    if (kernel_.size() != lattice_.sites() || symbol_.size() != lattice_.sites())
        throw ConfigError("LatticeOperator: kernel/symbol size mismatch");
}

double LatticeOperator::entry(int x, int y) const {
    const int R0 = lattice_.extent[0];
    const int R1 = lattice_.extent[1];
    const auto cx = lattice_.site_coords(x);
    const auto cy = lattice_.site_coords(y);
    const int d0 = ((cy[0] - cx[0]) % R0 + R0) % R0;
    const int d1 = ((cy[1] - cx[1]) % R1 + R1) % R1;
    return kernel_[d0 + R0 * d1];
}

Mat LatticeOperator::dense() const {
    const int N = lattice_.sites();
    Mat A(N, N);
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            A(x, y) = entry(x, y);
    return A;
}

LatticeOperator LatticeOperator::scaled(double factor) const {
    return LatticeOperator(lattice_, kernel_ * factor, symbol_ * factor);
}

LatticeOperator build_S(const LatticeSpec& lattice, Normalization norm) {
    lattice.validate();
    const double w = neighbor_weight(lattice, norm);
    const int R0 = lattice.extent[0];
    const int R1 = lattice.extent[1];
    const int N = lattice.sites();
    Vec kernel = Vec::Zero(N);
    kernel[1] += w;
    kernel[R0 - 1] += w;
    if (lattice.dim == 2) {
        kernel[R0 * 1] += w;
        kernel[R0 * (R1 - 1)] += w;
    }
    CVec symbol(N);
    const auto grid = wavenumber_grid(lattice);
    for (int j = 0; j < N; ++j) {
        double s = 2.0 * w * std::cos(grid[j].k[0]);
        if (lattice.dim == 2) s += 2.0 * w * std::cos(grid[j].k[1]);
        symbol[j] = s;
    }
    return LatticeOperator(lattice, std::move(kernel), std::move(symbol));
}

LatticeOperator build_T(const LatticeSpec& lattice, Normalization norm) {
    lattice.validate();
    if (lattice.dim != 1)
        throw ConfigError("build_T: T is defined for 1-d lattices only");
    const double w = neighbor_weight(lattice, norm);
    const int R = lattice.extent[0];
    Vec kernel = Vec::Zero(R);
    kernel[1] = w;      // T_{x,x+1} = +w
    kernel[R - 1] = -w; // T_{x,x-1} = -w
    CVec symbol(R);
    const auto grid = wavenumber_grid(lattice);
    for (int j = 0; j < R; ++j)
        symbol[j] = cplx(0.0, 2.0 * w * std::sin(grid[j].k[0]));
    return LatticeOperator(lattice, std::move(kernel), std::move(symbol));
}

namespace dft {
namespace {

// W(d, j) = exp(sign * i * k_j * d) for one axis of extent R
CMat twiddle(int R, double sign) {
    CMat W(R, R);
    const double base = 2.0 * std::numbers::pi / R;
    for (int d = 0; d < R; ++d)
        for (int j = 0; j < R; ++j) {
            const double phase = sign * base * (j - R / 2) * d;
            W(d, j) = cplx(std::cos(phase), std::sin(phase));
        }
    return W;
}

// values indexed by mode j -> result indexed by displacement d
CVec modes_to_displacements(const LatticeSpec& lattice, const CVec& values, double sign) {
    const int R0 = lattice.extent[0];
    const int R1 = lattice.extent[1];
    if (lattice.dim == 1) {
        return twiddle(R0, sign) * values;
    }
    Eigen::Map<const CMat> grid(values.data(), R0, R1);
    CMat out = twiddle(R0, sign) * grid * twiddle(R1, sign).transpose();
    return CVec(Eigen::Map<const CVec>(out.data(), out.size()));
}

// values indexed by displacement d -> result indexed by mode j
CVec displacements_to_modes(const LatticeSpec& lattice, const CVec& values, double sign) {
    const int R0 = lattice.extent[0];
    const int R1 = lattice.extent[1];
    if (lattice.dim == 1) {
        return twiddle(R0, sign).transpose() * values;
    }
    Eigen::Map<const CMat> grid(values.data(), R0, R1);
    CMat out = twiddle(R0, sign).transpose() * grid * twiddle(R1, sign);
    return CVec(Eigen::Map<const CVec>(out.data(), out.size()));
}

} // namespace

CVec symbol_from_kernel(const LatticeSpec& lattice, const Vec& kernel) {
    return displacements_to_modes(lattice, kernel.cast<cplx>(), +1.0);
}

CVec kernel_from_symbol(const LatticeSpec& lattice, const CVec& symbol) {
    return modes_to_displacements(lattice, symbol, -1.0) / static_cast<double>(lattice.sites());
}

CVec occupation_kernel(const LatticeSpec& lattice, const std::vector<char>& occupied) {
    const int N = lattice.sites();
    if (static_cast<int>(occupied.size()) != N)
        throw ConfigError("occupation_kernel: mask size mismatch");
    CVec indicator(N);
    for (int j = 0; j < N; ++j) indicator[j] = occupied[j] ? 1.0 : 0.0;
    return modes_to_displacements(lattice, indicator, +1.0) / static_cast<double>(N);
}

} // namespace dft

namespace {

int negate_displacement(const LatticeSpec& lattice, int d) {
    const int R0 = lattice.extent[0];
    const int R1 = lattice.extent[1];
    const int d0 = d % R0;
    const int d1 = d / R0;
    return ((R0 - d0) % R0) + R0 * ((R1 - d1) % R1);
}

} // namespace

LatticeOperator operator_function(const LatticeOperator& op,
                                  const std::function<cplx(cplx)>& f,
                                  Parity parity) {
    const LatticeSpec& lattice = op.lattice();
    const int N = lattice.sites();
    CVec symbol(N);
    bool finite = true;
    for (int j = 0; j < N; ++j) {
        symbol[j] = f(op.symbol()[j]);
        finite = finite && std::isfinite(symbol[j].real()) && std::isfinite(symbol[j].imag());
    }
    if (!finite) {
        // Symbol overflow (e.g. exp(-a^2 S) at large a).  The spectral pipeline
        // only consumes the symbol; the dense kernel is marked unusable.
        Vec nan_kernel = Vec::Constant(N, std::numeric_limits<double>::quiet_NaN());
        return LatticeOperator(lattice, std::move(nan_kernel), std::move(symbol));
    }

    CVec raw = dft::kernel_from_symbol(lattice, symbol);
    const double scale = std::max(1.0, symbol.cwiseAbs().maxCoeff());
    if (raw.imag().cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw ParityMismatch("operator_function: reconstructed kernel has imaginary part above tolerance "
                             "(function/operator parity combination does not yield a real operator)");

    // Enforce the declared parity exactly so that symmetry/antisymmetry of the
    // dense matrix holds entrywise.
    Vec kernel(N);
    const double sign = (parity == Parity::Even) ? 1.0 : -1.0;
    for (int d = 0; d < N; ++d) {
        const int nd = negate_displacement(lattice, d);
        kernel[d] = 0.5 * (raw[d].real() + sign * raw[nd].real());
    }
    return LatticeOperator(lattice, std::move(kernel), std::move(symbol));
}

} // namespace nlf
