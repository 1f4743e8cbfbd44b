#pragma once

#include <array>
#include <functional>
#include <vector>

#include "nlf/types.hpp"

namespace nlf {

// Periodic chain (dim=1) or square lattice (dim=2), sites indexed row-major:
// site = x + extent[0]*y.
struct LatticeSpec {
    int dim = 1;
    std::array<int, 2> extent{4, 1};

    static LatticeSpec chain(int R);
    static LatticeSpec square(int R);

    int sites() const { return extent[0] * extent[1]; }
    int site_index(int x, int y = 0) const { return x + extent[0] * y; }
    std::array<int, 2> site_coords(int site) const {
        return {site % extent[0], site / extent[0]};
    }
    void validate() const;

    bool operator==(const LatticeSpec&) const = default;
};

// Plane-wave label, one integer index per axis with n in [-R/2, R/2) and
// k = 2*pi*n/R in [-pi, pi).  Canonical mode id enumerates n ascending,
// axis 0 fastest (mirrors the row-major site order).
struct Wavenumber {
    std::array<int, 2> n{0, 0};
    std::array<double, 2> k{0.0, 0.0};
};

std::vector<Wavenumber> wavenumber_grid(const LatticeSpec& lattice);

enum class Parity { Even, Odd };

// Which stencil weight the lattice derivatives carry.  PaperLiteral is the
// published convention: 1/2 per neighbor in 1-d, 1 per neighbor in 2-d.
enum class Normalization { PaperLiteral, ForceHalf, ForceUnit };

double neighbor_weight(const LatticeSpec& lattice, Normalization norm);

// Translation-invariant real operator on the lattice.  Stored as the
// displacement kernel m with entries A(x,y) = m((y-x) mod extent per axis)
// plus the circulant symbol (eigenvalue at each Wavenumber).  The dense
// N x N matrix is materialized on demand.
class LatticeOperator {
public:
    LatticeOperator(LatticeSpec lattice, Vec kernel, CVec symbol);

    const LatticeSpec& lattice() const { return lattice_; }
    const Vec& kernel() const { return kernel_; }
    const CVec& symbol() const { return symbol_; }

    double entry(int x, int y) const;
    Mat dense() const;

    LatticeOperator scaled(double factor) const;

private:
    LatticeSpec lattice_;
    Vec kernel_;  // size N, displacement index row-major
    CVec symbol_; // size N, canonical mode order
};

// Symmetric lattice derivative S: 1-d row has weight w at x+-1 (symbol
// 2w cos k); 2-d has weight w on the four nearest neighbors (symbol
// 2w (cos k1 + cos k2)).
LatticeOperator build_S(const LatticeSpec& lattice,
                        Normalization norm = Normalization::PaperLiteral);

// Antisymmetric lattice derivative T (1-d only): +w at x+1, -w at x-1,
// symbol 2iw sin k.  T^T = -T exactly.
LatticeOperator build_T(const LatticeSpec& lattice,
                        Normalization norm = Normalization::PaperLiteral);

// Applies f to the circulant symbol and rebuilds the kernel by inverse DFT.
// The parity tag states the expected symmetry of the result (even -> symmetric,
// odd -> antisymmetric); it is enforced exactly on the kernel, and a residual
// imaginary part above tolerance throws ParityMismatch.
LatticeOperator operator_function(const LatticeOperator& op,
                                  const std::function<cplx(cplx)>& f,
                                  Parity parity);

namespace dft {

// symbol_j = sum_D kernel[D] e^{+i k_j . D}
CVec symbol_from_kernel(const LatticeSpec& lattice, const Vec& kernel);

// kernel_D = (1/N) sum_j symbol[j] e^{-i k_j . D}   (complex; caller validates)
CVec kernel_from_symbol(const LatticeSpec& lattice, const CVec& symbol);

// g(D) = (1/N) sum_{j : occupied} e^{+i k_j . D}
CVec occupation_kernel(const LatticeSpec& lattice, const std::vector<char>& occupied);

} // namespace dft

} // namespace nlf
