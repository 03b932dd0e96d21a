#pragma once

// Plot emission from sweep results: the analytic band [lower, upper] against
// n, one series per alpha, optionally with the numeric estimates overlaid.

#include "bwexp/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bwexp {

enum class PlotKind { bounds, bracket };

/// "bounds" or "bracket"; throws ParseError otherwise.
PlotKind parse_plot_kind(std::string_view text);

/// Header of the plot-ready CSV for each kind.
std::string plot_csv_header(PlotKind kind);

/// Rows grouped by alpha then n. Throws ParseError when no row is usable.
std::string plot_csv(const std::vector<BoundsReport>& rows, PlotKind kind);

/// Static SVG document. Throws ParseError when no row is usable.
std::string plot_svg(const std::vector<BoundsReport>& rows, PlotKind kind);

}  // namespace bwexp
