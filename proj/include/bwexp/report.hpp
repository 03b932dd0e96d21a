#pragma once

// Report records shared by the command-line front end: one BoundsReport per
// (n, alpha), its JSON/CSV encodings, the flag parsers for alpha and sweep
// ranges, and the deterministic sweep driver.

#include "bwexp/solver.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bwexp {

/// Malformed flag or input file contents.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BoundsReport {
    int n = 0;
    double alpha_re = 0.0;
    double alpha_im = 0.0;
    double analytic_lower = 0.0;
    double analytic_upper = 0.0;
    // Estimates are absent when a command computes the analytic part only
    // or when a sweep row failed.
    std::optional<double> witness_lower;
    std::optional<double> oracle_lower;
    std::optional<double> lp_estimate;
    unsigned precision_bits = 256;
    LPConfig cfg;
    std::uint64_t seed = 0;
    int trials = 0;
    std::optional<double> runtime_ms;
    std::vector<std::string> violations;
    std::string error;

    friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

nlohmann::ordered_json to_json(const BoundsReport& r);
/// Throws ParseError on missing or mistyped fields.
BoundsReport report_from_json(const nlohmann::ordered_json& j);

/// Fixed CSV columns, optionally followed by "error".
std::vector<std::string> csv_columns(bool with_error);
std::string csv_header(bool with_error);
std::string csv_row(const BoundsReport& r, bool with_error);
/// Parses a whole sweep CSV (header required). Throws ParseError.
std::vector<BoundsReport> reports_from_csv(std::string_view text);
/// Accepts either a JSON array of reports or CSV.
std::vector<BoundsReport> parse_report_file(std::string_view text);

/// Shortest of %.15g..%.17g that round-trips.
std::string format_double(double x);

/// `RE+IMi` / `RE-IMi`, explicit sign, scientific notation allowed.
AlphaParam parse_alpha(std::string_view text);
std::string format_alpha(double re, double im);

/// "a..b" inclusive or a single integer.
std::vector<int> parse_n_range(std::string_view text);

/// Comma-separated axis specs: "im:0.1..0.9:5" (count equispaced values,
/// endpoints included), "re:0" or "re:-0.2;0.1;0.3". Both axes must appear.
/// Returns the cartesian product sorted by (re, im).
std::vector<AlphaParam> parse_alpha_grid(std::string_view text);

enum class SweepMode { analytic, witness, full };

struct SweepOptions {
    SweepMode mode = SweepMode::full;
    LPConfig cfg;
    int trials = 1000;
    std::uint64_t seed = 0;
    Precision precision{};
    int jobs = 1;
};

/// Analytic endpoints only; rejects theorem-invalid alpha.
BoundsReport analytic_report(int n, const AlphaParam& alpha);

/// One row; failures are caught into `error` with estimates absent.
BoundsReport compute_row(int n, const AlphaParam& alpha, const SweepOptions& opts);

/// Rows for every (n, alpha), sorted by (n, alpha_re, alpha_im) regardless
/// of how the worker pool schedules them.
std::vector<BoundsReport> run_sweep(const std::vector<int>& ns, const std::vector<AlphaParam>& alphas,
                                    const SweepOptions& opts);

std::string render_csv(const std::vector<BoundsReport>& rows);
std::string render_json(const std::vector<BoundsReport>& rows);

}  // namespace bwexp
