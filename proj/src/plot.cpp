#include "bwexp/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <utility>

namespace bwexp {

PlotKind parse_plot_kind(std::string_view text)
{
    if (text == "bounds")
        return PlotKind::bounds;
    if (text == "bracket")
        return PlotKind::bracket;
    throw ParseError("plot kind must be 'bounds' or 'bracket', got '" + std::string(text) + "'");
}

std::string plot_csv_header(PlotKind kind)
{
    if (kind == PlotKind::bounds)
        return "alpha,n,analytic_lower,analytic_upper,band_width";
    return "alpha,n,analytic_lower,analytic_upper,witness_lower,oracle_lower,lp_estimate";
}

namespace {

using Series = std::map<std::pair<double, double>, std::vector<const BoundsReport*>>;

Series group(const std::vector<BoundsReport>& rows)
{
    Series out;
    for (const auto& r : rows)
        if (r.error.empty())
            out[{r.alpha_re, r.alpha_im}].push_back(&r);
    if (out.empty())
        throw ParseError("input has no usable rows");
    for (auto& [key, list] : out)
        std::stable_sort(list.begin(), list.end(), [](const auto* a, const auto* b) { return a->n < b->n; });
    return out;
}

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// 1, 2 or 5 times a power of ten, giving roughly `target` intervals.
double nice_step(double span, int target)
{
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0})
        if (raw <= m * mag)
            return m * mag;
    return 10.0 * mag;
}

std::string alpha_label(double re, double im)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
    return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string plot_csv(const std::vector<BoundsReport>& rows, PlotKind kind)
{
    const Series series = group(rows);
    std::string out = plot_csv_header(kind) + '\n';
    for (const auto& [key, list] : series) {
        const std::string alpha = alpha_label(key.first, key.second);
        for (const BoundsReport* r : list) {
            out += alpha + ',' + std::to_string(r->n) + ',' + format_double(r->analytic_lower) + ',' +
                   format_double(r->analytic_upper);
            if (kind == PlotKind::bounds)
                out += ',' + format_double(r->analytic_upper - r->analytic_lower);
            else
                out += ',' + cell(r->witness_lower) + ',' + cell(r->oracle_lower) + ',' + cell(r->lp_estimate);
            out += '\n';
        }
    }
    return out;
}

std::string plot_svg(const std::vector<BoundsReport>& rows, PlotKind kind)
{
    const Series series = group(rows);
    constexpr double width = 760, height = 480, left = 70, right = 190, top = 40, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double n_lo = std::numeric_limits<double>::infinity(), n_hi = -n_lo;
    double y_lo = n_lo, y_hi = -n_lo;
    auto extend = [&](double y) {
        y_lo = std::min(y_lo, y);
        y_hi = std::max(y_hi, y);
    };
    for (const auto& [key, list] : series)
        for (const BoundsReport* r : list) {
            n_lo = std::min(n_lo, static_cast<double>(r->n));
            n_hi = std::max(n_hi, static_cast<double>(r->n));
            extend(r->analytic_lower);
            extend(r->analytic_upper);
            if (kind == PlotKind::bracket)
                for (const auto& v : {r->witness_lower, r->oracle_lower, r->lp_estimate})
                    if (v)
                        extend(*v);
        }
    if (n_hi == n_lo) {
        n_lo -= 0.5;
        n_hi += 0.5;
    }
    if (y_hi - y_lo < 1e-9) {
        y_lo -= 1.0;
        y_hi += 1.0;
    }
    const double y_step = nice_step(y_hi - y_lo, 6);
    y_lo = std::floor(y_lo / y_step) * y_step;
    y_hi = std::ceil(y_hi / y_step) * y_step;

    auto px = [&](double n) { return left + (n - n_lo) / (n_hi - n_lo) * plot_w; };
    auto py = [&](double y) { return top + (y_hi - y) / (y_hi - y_lo) * plot_h; };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + num(left) + "\" y=\"22\" font-size=\"15\">" +
         std::string(kind == PlotKind::bounds ? "Analytic bounds on e_n(alpha)" : "Bracket and numeric estimates") +
         "</text>\n";

    // Axes, grid and ticks.
    for (double y = y_lo; y <= y_hi + y_step * 1e-9; y += y_step) {
        s += "<line x1=\"" + num(left) + "\" x2=\"" + num(left + plot_w) + "\" y1=\"" + num(py(y)) + "\" y2=\"" +
             num(py(y)) + "\" stroke=\"#e0e0e0\"/>\n";
        s += "<text x=\"" + num(left - 6) + "\" y=\"" + num(py(y) + 4) + "\" text-anchor=\"end\">" +
             tick_label(std::abs(y) < y_step * 1e-9 ? 0.0 : y) + "</text>\n";
    }
    const double n_step = std::max(1.0, nice_step(n_hi - n_lo, 8));
    for (double n = std::ceil(n_lo / n_step) * n_step; n <= n_hi + 1e-9; n += n_step)
        s += "<text x=\"" + num(px(n)) + "\" y=\"" + num(top + plot_h + 18) + "\" text-anchor=\"middle\">" +
             tick_label(n) + "</text>\n";
    s += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(plot_w) + "\" height=\"" + num(plot_h) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(left + plot_w / 2) + "\" y=\"" + num(height - 12) + "\" text-anchor=\"middle\">n</text>\n";
    s += "<text transform=\"translate(18," + num(top + plot_h / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">log E_n(alpha)</text>\n";

    std::size_t index = 0;
    double legend_y = top + 10;
    for (const auto& [key, list] : series) {
        const std::string colour = kPalette[index++ % std::size(kPalette)];
        std::string band, upper_line, lower_line;
        for (const BoundsReport* r : list) {
            upper_line += num(px(r->n)) + "," + num(py(r->analytic_upper)) + " ";
            lower_line += num(px(r->n)) + "," + num(py(r->analytic_lower)) + " ";
        }
        band = upper_line;
        for (auto it = list.rbegin(); it != list.rend(); ++it)
            band += num(px((*it)->n)) + "," + num(py((*it)->analytic_lower)) + " ";
        s += "<polygon points=\"" + band + "\" fill=\"" + colour + "\" fill-opacity=\"0.12\" stroke=\"none\"/>\n";
        s += "<polyline points=\"" + upper_line + "\" fill=\"none\" stroke=\"" + colour + "\" stroke-width=\"1.5\"/>\n";
        s += "<polyline points=\"" + lower_line + "\" fill=\"none\" stroke=\"" + colour +
             "\" stroke-width=\"1.5\" stroke-dasharray=\"5,3\"/>\n";
        if (kind == PlotKind::bracket) {
            for (const BoundsReport* r : list) {
                const double x = px(r->n);
                if (r->witness_lower)
                    s += "<circle cx=\"" + num(x) + "\" cy=\"" + num(py(*r->witness_lower)) + "\" r=\"3.5\" fill=\"" +
                         colour + "\"/>\n";
                if (r->oracle_lower)
                    s += "<rect x=\"" + num(x - 3) + "\" y=\"" + num(py(*r->oracle_lower) - 3) +
                         "\" width=\"6\" height=\"6\" fill=\"none\" stroke=\"" + colour + "\"/>\n";
                if (r->lp_estimate)
                    s += "<path d=\"M" + num(x - 4) + "," + num(py(*r->lp_estimate) + 3) + " L" + num(x + 4) + "," +
                         num(py(*r->lp_estimate) + 3) + " L" + num(x) + "," + num(py(*r->lp_estimate) - 4) +
                         " Z\" fill=\"" + colour + "\"/>\n";
            }
        }
        s += "<line x1=\"" + num(left + plot_w + 12) + "\" x2=\"" + num(left + plot_w + 32) + "\" y1=\"" +
             num(legend_y) + "\" y2=\"" + num(legend_y) + "\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
        s += "<text x=\"" + num(left + plot_w + 38) + "\" y=\"" + num(legend_y + 4) + "\">alpha = " +
             alpha_label(key.first, key.second) + "</text>\n";
        legend_y += 18;
    }
    if (kind == PlotKind::bracket) {
        legend_y += 8;
        s += "<text x=\"" + num(left + plot_w + 12) + "\" y=\"" + num(legend_y) +
             "\">dot: witness, square: oracle</text>\n";
        s += "<text x=\"" + num(left + plot_w + 12) + "\" y=\"" + num(legend_y + 16) + "\">triangle: LP</text>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace bwexp
