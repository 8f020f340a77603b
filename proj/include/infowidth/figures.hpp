#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace infowidth {

/// One figure as a table: an x column and one column per curve. Missing cells (outside
/// the domain of a curve) are empty.
struct FigureTable {
    std::string id;
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<std::string> series;
    std::vector<double> x;
    std::vector<std::vector<std::optional<double>>> rows;  ///< rows[i][j]: series j at x[i]
};

std::vector<std::string> figure_ids();

/// Builds 1a, 1b, 2a, 2b, 3a, 3b or 4; unknown ids throw UnsupportedError.
FigureTable make_figure(std::string_view id);

/// RFC 4180 CSV with a header row, fixed-point values.
std::string to_csv(const FigureTable& table, int precision = 9);

/// Self-contained SVG line chart.
std::string to_svg(const FigureTable& table);

}  // namespace infowidth
