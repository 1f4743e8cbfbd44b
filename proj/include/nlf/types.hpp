#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace nlf {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using cplx = std::complex<double>;

// Numerical failures map to CLI exit code 2.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateZeroMode : NumericalError {
    using NumericalError::NumericalError;
};
struct SpectrumOutOfRange : NumericalError {
    using NumericalError::NumericalError;
};
struct NonAntisymmetricF : NumericalError {
    using NumericalError::NumericalError;
};
struct ParityMismatch : NumericalError {
    using NumericalError::NumericalError;
};
struct NonConvergence : NumericalError {
    using NumericalError::NumericalError;
};

// Usage and configuration problems map to CLI exit code 1.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace nlf
