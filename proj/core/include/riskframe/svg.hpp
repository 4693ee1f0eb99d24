#pragma once

// Deterministic SVG 1.1 line charts for study and table output.

#include <string>
#include <utility>
#include <vector>

namespace riskframe {

struct ChartSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct ChartOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    int width = 720;
    int height = 440;
    /// Explicit x ticks (position, label). Empty means automatic ticks.
    std::vector<std::pair<double, std::string>> x_ticks;
};

struct Chart {
    std::string svg;
    int dropped_points = 0;  ///< non-finite points, or x <= 0 on a log axis
};

/// A series with a single point is drawn as a marker only.
Chart line_chart(const std::vector<ChartSeries>& series, const ChartOptions& options);

}  // namespace riskframe
