#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nlf/holography.hpp"

namespace nlf {

struct CheckResult {
    std::string name;
    bool pass = false;
    double deviation = 0.0; // measured worst-case deviation (or shortfall)
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyOptions {
    int R = 64;                // ring size for the deterministic checks
    int toeplitz_R = 128;      // random-Toeplitz lattice
    int toeplitz_trials = 50;
    std::uint64_t seed = 20240601;
    std::string inject_fault;  // test hook: force the named check to fail
};

// The cross-route oracle suite: dense-vs-symbol equality, BdG particle-hole
// symmetry, F=0 reduction equality, nonlocal/local correlation identity,
// complementarity, random-Toeplitz extensivity.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

} // namespace nlf
