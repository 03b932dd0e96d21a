// bwexp: bounds, witnesses and numeric estimates for the extremal growth
// constant e_n(alpha) of polynomials on exponential curves in C^2.
//
// Exit codes: 0 success, 1 parse or I/O error, 2 invalid mathematical
// arguments, 3 solver needs a finer grid, 4 verification failure.

#include "bwexp/construct.hpp"
#include "bwexp/plot.hpp"
#include "bwexp/report.hpp"
#include "bwexp/solver.hpp"
#include "bwexp/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace bwexp;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kParse = 1, kMath = 2, kSolver = 3, kVerify = 4 };

struct MathError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CaseFlags {
    int n = 1;
    std::string alpha;
    unsigned precision = 256;
    std::string format = "json";
};

struct SolveFlags {
    int circle_points = 512;
    int polygon_sides = 64;
    int torus_points = 32;
    int phases = 16;
    int trials = 1000;
    std::uint64_t seed = 0;
    int threads = 1;
    bool allow_large = false;
    bool timing = false;
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f)
{
    cmd->add_option("--circle-points", f.circle_points, "Constraint points on |t| = 1 (M1)")->capture_default_str();
    cmd->add_option("--polygon-sides", f.polygon_sides, "Sides of the outer polygon per point (S)")
        ->capture_default_str();
    cmd->add_option("--torus-points", f.torus_points, "Torus candidates per dimension (M2)")->capture_default_str();
    cmd->add_option("--phases", f.phases, "Objective phases (Q)")->capture_default_str();
    cmd->add_option("--trials", f.trials, "Random-search samples")->capture_default_str();
    cmd->add_option("--seed", f.seed, "Random-search seed")->capture_default_str();
}

LPConfig to_config(const SolveFlags& f)
{
    return {f.circle_points, f.polygon_sides, f.torus_points, f.phases};
}

Precision checked_precision(unsigned bits)
{
    const Precision p{bits};
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw MathError(e.what());
    }
    return p;
}

void require_degree(int n)
{
    if (n < 1)
        throw MathError("n must be at least 1");
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed)
{
    for (const char* a : allowed)
        if (format == a)
            return;
    std::string list;
    for (const char* a : allowed)
        list += (list.empty() ? "" : ", ") + std::string(a);
    throw ParseError("--format must be one of: " + list);
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush())
        throw ParseError("cannot write '" + path + "'");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string emit_report(const BoundsReport& r, const std::string& format)
{
    if (format == "csv") {
        const bool with_error = !r.error.empty();
        return csv_header(with_error) + '\n' + csv_row(r, with_error) + '\n';
    }
    return to_json(r).dump(2) + '\n';
}

int cmd_bounds(const CaseFlags& f)
{
    require_format(f.format, {"json", "csv"});
    require_degree(f.n);
    const AlphaParam alpha = parse_alpha(f.alpha);
    BoundsReport r = analytic_report(f.n, alpha);
    r.precision_bits = f.precision;
    std::cout << emit_report(r, f.format);
    return kOk;
}

json norm_json(const NormEstimate& e, int digits)
{
    json j;
    j["method"] = to_string(e.method);
    j["grid_points"] = e.grid_points;
    j["grid_max"] = e.grid_max.to_double();
    j["grid_max_decimal"] = e.grid_max.to_string(digits);
    if (e.certified_upper) {
        j["certified_upper"] = e.certified_upper->to_double();
        j["certified_upper_decimal"] = e.certified_upper->to_string(digits);
    } else {
        j["certified_upper"] = nullptr;
    }
    return j;
}

int cmd_witness(const CaseFlags& f, double r, int grid)
{
    require_format(f.format, {"json", "text"});
    require_degree(f.n);
    const AlphaParam alpha = parse_alpha(f.alpha);
    alpha.require_nonreal();
    const Precision prec = checked_precision(f.precision);
    if (r != 0.0 && r < 1.0)
        throw MathError("--r must be at least 1");
    if (grid < 8)
        throw MathError("--grid must be at least 8");

    const WitnessCertificate cert = certify_witness(f.n, alpha, r, grid, prec);
    const WitnessResult& w = cert.witness;
    PrecisionScope scope(Precision{w.bits});
    const int digits = 30;

    json j;
    j["n"] = f.n;
    j["alpha"] = {{"re", alpha.re}, {"im", alpha.im}};
    j["N"] = w.big_n;
    j["r"] = w.r;
    j["precision_bits"] = f.precision;
    j["working_bits"] = w.bits;
    j["max_residual"] = w.max_residual.to_double();
    j["max_residual_decimal"] = w.max_residual.to_string(digits);
    json coeffs = json::array();
    for (const MultiIndex& m : canonical_indices(f.n)) {
        const Complex& c = w.p(m.j, m.k);
        coeffs.push_back({{"j", m.j}, {"k", m.k}, {"re", c.re.to_double()}, {"im", c.im.to_double()}});
    }
    j["coefficients"] = coeffs;
    j["norm_k"] = norm_json(cert.norm_k, digits);
    j["circle_sup"] = norm_json(cert.circle_sup, digits);
    j["witness_lower"] = cert.lower_bound;
    j["proof_floor"] = proof_lower_bound(f.n);
    if (alpha.theorem_valid) {
        const Bracket b = theorem2_bounds(f.n, alpha);
        j["analytic_lower"] = b.lower;
        j["analytic_upper"] = b.upper;
    }

    if (f.format == "json") {
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    std::cout << "n              " << f.n << "\n"
              << "alpha          " << format_alpha(alpha.re, alpha.im) << "\n"
              << "N              " << w.big_n << "\n"
              << "r              " << format_double(w.r) << "\n"
              << "working bits   " << w.bits << "\n"
              << "max residual   " << w.max_residual.to_string(digits) << "\n"
              << "||P||_K        " << cert.norm_k.grid_max.to_string(17) << " (certified <= "
              << cert.norm_k.certified_upper->to_string(17) << ")\n"
              << "sup|f|, |t|=r  " << cert.circle_sup.grid_max.to_string(17) << "\n"
              << "witness lower  " << format_double(cert.lower_bound) << "\n"
              << "proof floor    " << format_double(proof_lower_bound(f.n)) << "\n"
              << "coefficients (j, k, re, im):\n";
    for (const auto& c : coeffs)
        std::cout << "  " << c["j"] << " " << c["k"] << " " << format_double(c["re"].get<double>()) << " "
                  << format_double(c["im"].get<double>()) << "\n";
    return kOk;
}

int cmd_solve(const CaseFlags& f, const SolveFlags& s)
{
    require_format(f.format, {"json", "csv"});
    require_degree(f.n);
    const AlphaParam alpha = parse_alpha(f.alpha);
    alpha.require_theorem_valid();
    const LPConfig cfg = to_config(s);
    try {
        cfg.validate(f.n);
    } catch (const std::invalid_argument& e) {
        throw MathError(e.what());
    }
    if (s.trials < 0)
        throw MathError("--trials must be nonnegative");

    SolverOptions opts;
    opts.allow_large_degree = s.allow_large;
    opts.threads = s.threads;
    opts.precision = checked_precision(f.precision);

    const auto t0 = std::chrono::steady_clock::now();
    const EnEstimate e = en_bracket(f.n, alpha, cfg, s.trials, s.seed, opts);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    BoundsReport r;
    r.n = f.n;
    r.alpha_re = alpha.re;
    r.alpha_im = alpha.im;
    r.analytic_lower = e.analytic.lower;
    r.analytic_upper = e.analytic.upper;
    r.witness_lower = e.witness_log_value;
    r.oracle_lower = e.oracle_log_value;
    r.lp_estimate = e.lp_log_value;
    r.precision_bits = e.precision_bits;
    r.cfg = cfg;
    r.seed = s.seed;
    r.trials = s.trials;
    r.violations = e.violations;
    if (s.timing)
        r.runtime_ms = ms;
    std::cout << emit_report(r, f.format);
    for (const auto& v : e.violations)
        std::cerr << "warning: invariant violated: " << v << "\n";
    return kOk;
}

struct SweepFlags {
    std::string n_range;
    std::string alpha_grid;
    int jobs = 1;
    std::string out;
    std::string format = "csv";
    std::string mode = "full";
    unsigned precision = 256;
};

int cmd_sweep(const SweepFlags& f, const SolveFlags& s)
{
    require_format(f.format, {"json", "csv"});
    SweepOptions opts;
    if (f.mode == "analytic")
        opts.mode = SweepMode::analytic;
    else if (f.mode == "witness")
        opts.mode = SweepMode::witness;
    else if (f.mode == "full")
        opts.mode = SweepMode::full;
    else
        throw ParseError("--mode must be analytic, witness or full");
    if (f.jobs < 1)
        throw ParseError("--jobs must be at least 1");
    opts.cfg = to_config(s);
    opts.trials = s.trials;
    opts.seed = s.seed;
    opts.precision = checked_precision(f.precision);
    opts.jobs = f.jobs;

    const auto ns = parse_n_range(f.n_range);
    const auto alphas = parse_alpha_grid(f.alpha_grid);
    const auto rows = run_sweep(ns, alphas, opts);
    write_output(f.out, f.format == "csv" ? render_csv(rows) : render_json(rows));

    std::size_t failed = 0;
    for (const auto& r : rows)
        if (!r.error.empty())
            ++failed;
    if (failed > 0)
        std::cerr << failed << " of " << rows.size() << " rows failed; see the error column\n";
    return failed == rows.size() ? kMath : kOk;
}

struct VerifyFlags {
    std::string level = "quick";
    unsigned precision = 256;
    std::vector<std::string> suites;
    std::vector<std::string> constants;
    std::uint64_t seed = VerifyOptions{}.seed;
    bool list = false;
};

int cmd_verify(const VerifyFlags& f)
{
    if (f.list) {
        for (const auto& name : verify_suite_names())
            std::cout << name << "\n";
        return kOk;
    }
    VerifyOptions opts;
    if (f.level == "quick")
        opts.level = VerifyLevel::quick;
    else if (f.level == "full")
        opts.level = VerifyLevel::full;
    else
        throw ParseError("--level must be quick or full");
    opts.precision = checked_precision(f.precision);
    opts.seed = f.seed;
    for (const auto& c : f.constants) {
        try {
            set_proof_constant(opts.constants, c);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    for (const auto& s : f.suites) {
        const auto names = verify_suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end())
            throw ParseError("unknown suite '" + s + "' (see --list)");
    }

    std::printf("%-26s %-6s %8s %9s\n", "suite", "result", "cases", "seconds");
    const VerifyReport report = run_verify(opts, f.suites, [](const SuiteResult& r) {
        std::printf("%-26s %-6s %8ld %9.2f\n", r.name.c_str(), r.passed ? "pass" : "FAIL", r.cases, r.seconds);
        if (!r.passed)
            std::printf("    %s: %s\n", r.failed_check.c_str(), r.detail.c_str());
        std::fflush(stdout);
    });
    if (const SuiteResult* bad = report.first_failure()) {
        std::cerr << "verification failed: " << bad->failed_check << " (suite " << bad->name << "): " << bad->detail
                  << "\n";
        return kVerify;
    }
    std::printf("all %zu suites passed\n", report.suites.size());
    return kOk;
}

struct PlotFlags {
    std::string input;
    std::string kind = "bounds";
    std::string out;
    std::string format;
};

int cmd_plot(const PlotFlags& f)
{
    const PlotKind kind = parse_plot_kind(f.kind);
    std::string format = f.format;
    if (format.empty()) {
        const auto dot = f.out.rfind('.');
        const std::string ext = dot == std::string::npos ? "" : f.out.substr(dot + 1);
        format = ext == "csv" ? "csv" : "svg";
    }
    require_format(format, {"svg", "csv"});
    const auto rows = parse_report_file(read_file(f.input));
    write_output(f.out, format == "csv" ? plot_csv(rows, kind) : plot_svg(rows, kind));
    return kOk;
}

template <class Fn>
int guarded(Fn&& fn)
{
    try {
        return fn();
    } catch (const SolverUnbounded& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: increase --circle-points (e.g. double it) so the constraint grid resolves the curve\n";
        return kSolver;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const PrecisionTooLow& e) {
        std::cerr << "error: " << e.what() << "\nhint: raise --precision\n";
        return kMath;
    } catch (const std::invalid_argument& e) {
        // InvalidAlpha, ProblemTooLarge, DuplicateNodes and argument checks.
        std::cerr << "error: " << e.what() << "\n";
        return kMath;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMath;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bounds and numeric estimates for extremal polynomial growth on exponential curves"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "bwexp 1.0.0");

    CaseFlags case_flags;
    auto add_case = [&](CLI::App* cmd) {
        cmd->add_option("--n", case_flags.n, "Polynomial degree n >= 1")->required();
        cmd->add_option("--alpha", case_flags.alpha, "Curve parameter as RE+IMi, e.g. 0.3+0.4i")->required();
    };

    auto* bounds = app.add_subcommand("bounds", "Closed-form bracket for e_n(alpha)");
    add_case(bounds);
    bounds->add_option("--format", case_flags.format, "json or csv")->capture_default_str();

    double radius = 0.0;
    int grid = kDefaultCircleGrid;
    auto* witness = app.add_subcommand("witness", "Build and certify the lower-bound witness polynomial");
    add_case(witness);
    witness->add_option("--r", radius, "Evaluation radius (default N/n)");
    witness->add_option("--grid", grid, "Circle grid size")->capture_default_str();
    witness->add_option("--precision", case_flags.precision, "Working precision in bits")->capture_default_str();
    witness->add_option("--format", case_flags.format, "json or text")->capture_default_str();

    SolveFlags solve_flags;
    auto* solve = app.add_subcommand("solve", "LP estimate, random-search oracle and witness for one (n, alpha)");
    add_case(solve);
    add_solve_flags(solve, solve_flags);
    solve->add_option("--precision", case_flags.precision, "Working precision in bits")->capture_default_str();
    solve->add_option("--format", case_flags.format, "json or csv")->capture_default_str();
    solve->add_option("--threads", solve_flags.threads, "Worker threads for LP instances (0 = all cores)")
        ->capture_default_str();
    solve->add_flag("--allow-large", solve_flags.allow_large, "Lift the n <= 8 size guard");
    solve->add_flag("--timing", solve_flags.timing, "Include runtime_ms (makes output run-dependent)");

    SweepFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "Reports over a grid of (n, alpha)");
    sweep->add_option("--n-range", sweep_flags.n_range, "Degrees, e.g. 1..3")->required();
    sweep->add_option("--alpha-grid", sweep_flags.alpha_grid, "Axes, e.g. im:0.1..0.9:5,re:0")->required();
    sweep->add_option("--jobs", sweep_flags.jobs, "Worker threads")->capture_default_str();
    sweep->add_option("--out", sweep_flags.out, "Output file (default stdout)");
    sweep->add_option("--format", sweep_flags.format, "csv or json")->capture_default_str();
    sweep->add_option("--mode", sweep_flags.mode, "analytic, witness or full")->capture_default_str();
    sweep->add_option("--precision", sweep_flags.precision, "Working precision in bits")->capture_default_str();
    add_solve_flags(sweep, solve_flags);

    VerifyFlags verify_flags;
    auto* verify = app.add_subcommand("verify", "Run the property suites");
    verify->add_option("--level", verify_flags.level, "quick or full")->capture_default_str();
    verify->add_option("--precision", verify_flags.precision, "Working precision in bits")->capture_default_str();
    verify->add_option("--suite", verify_flags.suites, "Run only these suites (repeatable)");
    verify->add_option("--set-constant", verify_flags.constants,
                       "Override a proof constant, e.g. vieta=0.37 (mutation testing)");
    verify->add_option("--seed", verify_flags.seed, "Seed for randomized cases")->capture_default_str();
    verify->add_flag("--list", verify_flags.list, "List suite names and exit");

    PlotFlags plot_flags;
    auto* plot = app.add_subcommand("plot", "SVG or CSV plot data from a sweep file");
    plot->add_option("--input", plot_flags.input, "Sweep file (CSV or JSON)")->required();
    plot->add_option("--kind", plot_flags.kind, "bounds or bracket")->capture_default_str();
    plot->add_option("--out", plot_flags.out, "Output file; .csv selects CSV, otherwise SVG")->required();
    plot->add_option("--format", plot_flags.format, "svg or csv (overrides the extension)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    if (*bounds)
        return guarded([&] { return cmd_bounds(case_flags); });
    if (*witness)
        return guarded([&] { return cmd_witness(case_flags, radius, grid); });
    if (*solve)
        return guarded([&] { return cmd_solve(case_flags, solve_flags); });
    if (*sweep)
        return guarded([&] { return cmd_sweep(sweep_flags, solve_flags); });
    if (*verify)
        return guarded([&] { return cmd_verify(verify_flags); });
    return guarded([&] { return cmd_plot(plot_flags); });
}
