#include "nlf/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "nlf/version.hpp"

namespace nlf {

std::string format_sig(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

struct CsvWriter::Impl {
    std::ofstream out;
};

CsvWriter::CsvWriter(const std::string& path, const ExperimentConfig& config,
                     const std::vector<std::string>& columns)
    : impl_(new Impl) {
    impl_->out.open(path);
    if (!impl_->out) throw ConfigError("cannot open output file " + path);
    impl_->out << "# nlf " << kVersion << "\n";
    impl_->out << "# config: " << config_echo(config) << "\n";
    impl_->out << "# seed: " << config.seed << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        impl_->out << columns[i] << (i + 1 == columns.size() ? "\n" : ",");
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        impl_->out << format_sig(values[i]) << (i + 1 == values.size() ? "\n" : ",");
}

void CsvWriter::row(const std::string& label, const std::vector<double>& values) {
    impl_->out << label << (values.empty() ? "\n" : ",");
    for (std::size_t i = 0; i < values.size(); ++i)
        impl_->out << format_sig(values[i]) << (i + 1 == values.size() ? "\n" : ",");
}

void CsvWriter::comment(const std::string& text) { impl_->out << "# " << text << "\n"; }

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 520;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 160;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 60;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

} // namespace

void write_svg_plot(const std::string& path, const std::vector<PlotSeries>& series,
                    bool log_x, const std::string& y_label) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file " + path);

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double x = log_x ? std::log10(std::max(s.x[i], 1e-12)) : s.x[i];
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (xmin > xmax) { xmin = 0; xmax = 1; ymin = 0; ymax = 1; }
    if (xmax - xmin < 1e-12) xmax = xmin + 1;
    if (ymax - ymin < 1e-12) ymax = ymin + 1;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto X = [&](double x) {
        const double v = log_x ? std::log10(std::max(x, 1e-12)) : x;
        return kMarginLeft + plot_w * (v - xmin) / (xmax - xmin);
    };
    auto Y = [&](double y) { return kMarginTop + plot_h * (1.0 - (y - ymin) / (ymax - ymin)); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

    // axis ticks
    for (int t = 0; t <= 5; ++t) {
        const double fx = xmin + (xmax - xmin) * t / 5.0;
        const double val = log_x ? std::pow(10.0, fx) : fx;
        const double px = kMarginLeft + plot_w * t / 5.0;
        out << "<line x1=\"" << px << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\"" << px
            << "\" y2=\"" << kMarginTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px << "\" y=\"" << kMarginTop + plot_h + 20
            << "\" font-size=\"11\" text-anchor=\"middle\">" << format_sig(val, 3) << "</text>\n";
        const double fy = ymin + (ymax - ymin) * t / 5.0;
        const double py = kMarginTop + plot_h * (1.0 - t / 5.0);
        out << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << py << "\" x2=\"" << kMarginLeft
            << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << py + 4
            << "\" font-size=\"11\" text-anchor=\"end\">" << format_sig(fy, 3) << "</text>\n";
    }
    out << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
        << "\" font-size=\"14\" text-anchor=\"middle\">L" << (log_x ? " (log scale)" : "")
        << "</text>\n";
    out << "<text x=\"18\" y=\"" << kMarginTop + plot_h / 2
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << kMarginTop + plot_h / 2 << ")\">" << y_label << "</text>\n";

    int idx = 0;
    for (const auto& s : series) {
        const char* color = kPalette[idx % 8];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            out << X(s.x[i]) << "," << Y(s.y[i]) << " ";
        out << "\"/>\n";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            out << "<circle cx=\"" << X(s.x[i]) << "\" cy=\"" << Y(s.y[i])
                << "\" r=\"2.2\" fill=\"" << color << "\"/>\n";
        out << "<text x=\"" << kWidth - kMarginRight + 12 << "\" y=\"" << kMarginTop + 16 + 18 * idx
            << "\" font-size=\"12\" fill=\"" << color << "\">" << s.label << "</text>\n";
        ++idx;
    }
    out << "</svg>\n";
}

} // namespace nlf
