#include "emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace fermat::cli {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
constexpr int kPaletteSize = 10;

// Plot rectangle inside the 1000x1000 viewBox.
constexpr double kLeft = 90.0, kRight = 970.0, kTop = 40.0, kBottom = 930.0;

std::string fmt_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out.is_open()) {
        throw std::runtime_error("cannot write " + path);
    }
    return out;
}

}  // namespace

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path) : out_(open_or_throw(path)) {}

void CsvWriter::header(const std::string& line) {
    out_ << line << '\n';
}

void CsvWriter::row(std::span<const std::string> cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            out_ << ',';
        }
        out_ << cells[i];
    }
    out_ << '\n';
}

void CsvWriter::row(std::initializer_list<std::string> cells) {
    row(std::span<const std::string>(cells.begin(), cells.size()));
}

void emit_svg(const std::string& path, const std::vector<PlotSeries>& series,
              const PlotOptions& opts) {
    bool any_points = false;
    for (const auto& s : series) {
        any_points = any_points || !s.points.empty();
    }
    if (series.empty() || !any_points) {
        throw std::invalid_argument("emit_svg: no data series");
    }

    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -x_min;
    double y_lo = std::numeric_limits<double>::infinity();
    double y_hi = -y_lo;
    for (const auto& s : series) {
        for (auto [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) {
                continue;
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    }
    if (!(x_min < x_max)) {
        x_max = x_min + 1.0;
    }
    double y_min = opts.y_min.value_or(y_lo);
    double y_max = opts.y_max.value_or(y_hi);
    if (!(y_min < y_max)) {
        y_min -= 1.0;
        y_max += 1.0;
    }

    auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft); };
    auto sy = [&](double y) { return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop); };

    std::ofstream out = open_or_throw(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    for (const auto& note : opts.notes) {
        out << "<!-- " << note << " -->\n";
    }

    // Frame and ticks.
    out << "<rect x=\"" << fmt_coord(kLeft) << "\" y=\"" << fmt_coord(kTop) << "\" width=\""
        << fmt_coord(kRight - kLeft) << "\" height=\"" << fmt_coord(kBottom - kTop)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    constexpr int kTicks = 6;
    for (int i = 0; i < kTicks; ++i) {
        double f = static_cast<double>(i) / (kTicks - 1);
        double xv = x_min + f * (x_max - x_min);
        double yv = y_min + f * (y_max - y_min);
        double px = sx(xv);
        double py = sy(yv);
        out << "<line x1=\"" << fmt_coord(px) << "\" y1=\"" << fmt_coord(kBottom) << "\" x2=\""
            << fmt_coord(px) << "\" y2=\"" << fmt_coord(kBottom + 8) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fmt_coord(px) << "\" y=\"" << fmt_coord(kBottom + 28)
            << "\" font-size=\"18\" text-anchor=\"middle\">" << fmt_tick(xv) << "</text>\n";
        out << "<line x1=\"" << fmt_coord(kLeft - 8) << "\" y1=\"" << fmt_coord(py) << "\" x2=\""
            << fmt_coord(kLeft) << "\" y2=\"" << fmt_coord(py) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fmt_coord(kLeft - 12) << "\" y=\"" << fmt_coord(py + 6)
            << "\" font-size=\"18\" text-anchor=\"end\">" << fmt_tick(yv) << "</text>\n";
    }

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        std::size_t clipped = 0;
        std::string pts;
        for (auto [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) {
                ++clipped;
                continue;
            }
            double yc = y;
            if (yc < y_min) {
                yc = y_min;
                ++clipped;
            } else if (yc > y_max) {
                yc = y_max;
                ++clipped;
            }
            pts += fmt_coord(sx(x));
            pts += ',';
            pts += fmt_coord(sy(yc));
            pts += ' ';
        }
        if (!pts.empty()) {
            pts.pop_back();
        }
        if (clipped > 0) {
            out << "<!-- series " << s.label << ": " << clipped
                << " samples clipped at the viewport -->\n";
        }
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[si % kPaletteSize]
            << "\" stroke-width=\"2\" points=\"" << pts << "\"/>\n";
    }

    // Legend, top-right corner of the plot rectangle.
    for (std::size_t si = 0; si < series.size(); ++si) {
        double ly = kTop + 24 + 26 * static_cast<double>(si);
        out << "<line x1=\"" << fmt_coord(kRight - 150) << "\" y1=\"" << fmt_coord(ly - 6)
            << "\" x2=\"" << fmt_coord(kRight - 110) << "\" y2=\"" << fmt_coord(ly - 6)
            << "\" stroke=\"" << kPalette[si % kPaletteSize] << "\" stroke-width=\"3\"/>\n";
        out << "<text x=\"" << fmt_coord(kRight - 100) << "\" y=\"" << fmt_coord(ly)
            << "\" font-size=\"18\">" << series[si].label << "</text>\n";
    }

    out << "</svg>\n";
}

void emit_obj(const std::string& path, const std::vector<Vec3>& points) {
    if (points.size() < 2) {
        throw std::invalid_argument("emit_obj: need at least 2 points");
    }
    std::ofstream out = open_or_throw(path);
    for (const auto& p : points) {
        out << "v " << fmt_double(p.x) << ' ' << fmt_double(p.y) << ' ' << fmt_double(p.z)
            << '\n';
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        out << "l " << i << ' ' << (i + 1) << '\n';
    }
}

}  // namespace fermat::cli
