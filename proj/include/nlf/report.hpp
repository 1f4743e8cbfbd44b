#pragma once

#include <string>
#include <vector>

#include "nlf/config.hpp"

namespace nlf {

// CSV with '#'-prefixed header comments (version, config echo, seed), one
// header row of column names, 12 significant digits.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const ExperimentConfig& config,
              const std::vector<std::string>& columns);
    ~CsvWriter();

    void row(const std::vector<double>& values);
    void row(const std::string& label, const std::vector<double>& values);
    void comment(const std::string& text);

private:
    struct Impl;
    Impl* impl_;
};

std::string format_sig(double value, int digits = 12);

struct PlotSeries {
    std::string label;
    std::vector<double> x, y;
};

// Static SVG: polylines with markers, labeled axes (L horizontal, S vertical),
// optional logarithmic x axis.
void write_svg_plot(const std::string& path, const std::vector<PlotSeries>& series,
                    bool log_x, const std::string& y_label = "S");

} // namespace nlf
