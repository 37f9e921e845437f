#pragma once

/**
 * Deterministic file emitters for the CLI: RFC-4180-style CSV (LF line
 * endings, 17 significant digits for reals), standalone SVG line plots on
 * a fixed 1000x1000 viewBox, and Wavefront OBJ polylines (v/l records
 * only). Identical inputs produce byte-identical files.
 */

#include "fermat_torus/torus.hpp"

#include <fstream>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fermat::cli {

/// %.17g rendering used for every real written to a data file.
std::string fmt_double(double v);

class CsvWriter {
public:
    /// Throws std::runtime_error when the path cannot be opened for writing.
    explicit CsvWriter(const std::string& path);

    void header(const std::string& line);
    void row(std::span<const std::string> cells);
    void row(std::initializer_list<std::string> cells);

private:
    std::ofstream out_;
};

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct PlotOptions {
    std::optional<double> y_min;  // viewport range; data outside is clipped
    std::optional<double> y_max;
    std::vector<std::string> notes;  // emitted as XML comments
};

/// Line plot: fixed viewBox 0 0 1000 1000, one polyline per series, axis
/// ticks and a legend. Samples outside the y-range are clamped to the
/// viewport edge and the clip is recorded in a comment element.
void emit_svg(const std::string& path, const std::vector<PlotSeries>& series,
              const PlotOptions& opts);

/// Polyline through >= 2 points: one `v` record per vertex then `l`
/// records joining consecutive vertices.
void emit_obj(const std::string& path, const std::vector<Vec3>& points);

}  // namespace fermat::cli
