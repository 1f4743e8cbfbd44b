#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlf/holography.hpp"

namespace nlf {

struct CurveSpec {
    std::string label;
    ModelSpec model;
};

struct FitRequest {
    FitForm form = FitForm::Log1d;
    FitWindow window;
};

struct HoloSpec {
    MetricParams params{9.0, 0.6, 0.7};
    bool fit = true;
};

struct OutputSpec {
    std::string csv;
    std::string svg;
    bool loglinear = false;
    bool rescale_by_L = false; // plot S/L instead of S
};

struct ExperimentConfig {
    LatticeSpec lattice = LatticeSpec::chain(4);
    std::vector<CurveSpec> curves;
    std::vector<int> sweep_L;
    std::vector<FitRequest> fits;
    HoloSpec holo;
    OutputSpec output;
    std::uint64_t seed = 0;
    int workers = 1;
};

// Parse the JSON config text; unknown keys are rejected.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

// Effective config serialized back to one JSON line (echoed into outputs).
std::string config_echo(const ExperimentConfig& config);

std::string normalization_name(Normalization norm);
Normalization normalization_from_string(std::string_view name);

} // namespace nlf
