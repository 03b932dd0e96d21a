#include "bwexp/report.hpp"

#include "bwexp/construct.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <regex>
#include <sstream>
#include <thread>
#include <tuple>

namespace bwexp {

using json = nlohmann::ordered_json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    if (!j.at(key).is_number())
        throw ParseError(std::string("field '") + key + "' must be a number or null");
    return j.at(key).get<double>();
}

template <class T>
T read_required(const json& j, const char* key)
{
    if (!j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("field '") + key + "' has the wrong type");
    }
}

double parse_number(std::string_view s, const char* what)
{
    // strtod rather than from_chars: libstdc++ 11 lacks the floating overloads.
    const std::string copy(s);
    char* end = nullptr;
    const double v = std::strtod(copy.c_str(), &end);
    if (copy.empty() || end != copy.c_str() + copy.size() || !std::isfinite(v))
        throw ParseError(std::string("invalid ") + what + ": '" + copy + "'");
    return v;
}

template <class Int = long long>
Int parse_integer(std::string_view s, const char* what)
{
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c == '\n' || c == '\r' ? ' ' : c;
    }
    return out + "\"";
}

// RFC 4180 subset: quoted fields with doubled quotes, no embedded newlines.
std::vector<std::string> csv_fields(std::string_view line)
{
    std::vector<std::string> out(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                out.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                out.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.emplace_back();
        } else {
            out.back() += c;
        }
    }
    if (quoted)
        throw ParseError("unterminated quote in CSV line");
    return out;
}

std::string optional_cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

std::string format_double(double x)
{
    // Shortest %g form that reads back to the same double.
    char buf[40];
    for (int digits = 15; digits <= 17; ++digits) {
        std::snprintf(buf, sizeof buf, "%.*g", digits, x);
        if (std::strtod(buf, nullptr) == x)
            break;
    }
    return buf;
}

json to_json(const BoundsReport& r)
{
    json j;
    j["n"] = r.n;
    j["alpha"] = {{"re", r.alpha_re}, {"im", r.alpha_im}};
    j["analytic_lower"] = r.analytic_lower;
    j["analytic_upper"] = r.analytic_upper;
    j["witness_lower"] = optional_number(r.witness_lower);
    j["oracle_lower"] = optional_number(r.oracle_lower);
    j["lp_estimate"] = optional_number(r.lp_estimate);
    j["precision_bits"] = r.precision_bits;
    j["cfg"] = {{"circle_points", r.cfg.circle_points},
                {"polygon_sides", r.cfg.polygon_sides},
                {"torus_points", r.cfg.torus_points},
                {"phase_samples", r.cfg.phase_samples}};
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    if (r.runtime_ms)
        j["runtime_ms"] = *r.runtime_ms;
    j["violations"] = r.violations;
    if (!r.error.empty())
        j["error"] = r.error;
    return j;
}

BoundsReport report_from_json(const json& j)
{
    if (!j.is_object())
        throw ParseError("report must be a JSON object");
    BoundsReport r;
    r.n = read_required<int>(j, "n");
    const json alpha = read_required<json>(j, "alpha");
    r.alpha_re = read_required<double>(alpha, "re");
    r.alpha_im = read_required<double>(alpha, "im");
    r.analytic_lower = read_required<double>(j, "analytic_lower");
    r.analytic_upper = read_required<double>(j, "analytic_upper");
    r.witness_lower = read_optional(j, "witness_lower");
    r.oracle_lower = read_optional(j, "oracle_lower");
    r.lp_estimate = read_optional(j, "lp_estimate");
    r.precision_bits = read_required<unsigned>(j, "precision_bits");
    if (j.contains("cfg")) {
        const json& c = j.at("cfg");
        r.cfg.circle_points = read_required<int>(c, "circle_points");
        r.cfg.polygon_sides = read_required<int>(c, "polygon_sides");
        r.cfg.torus_points = read_required<int>(c, "torus_points");
        r.cfg.phase_samples = read_required<int>(c, "phase_samples");
    }
    r.seed = read_required<std::uint64_t>(j, "seed");
    if (j.contains("trials"))
        r.trials = read_required<int>(j, "trials");
    r.runtime_ms = read_optional(j, "runtime_ms");
    if (j.contains("violations"))
        r.violations = read_required<std::vector<std::string>>(j, "violations");
    if (j.contains("error"))
        r.error = read_required<std::string>(j, "error");
    return r;
}

std::vector<std::string> csv_columns(bool with_error)
{
    std::vector<std::string> cols{"n",           "alpha_re",     "alpha_im",       "analytic_lower",
                                  "analytic_upper", "witness_lower", "oracle_lower", "lp_estimate",
                                  "precision_bits", "seed"};
    if (with_error)
        cols.emplace_back("error");
    return cols;
}

std::string csv_header(bool with_error)
{
    std::string out;
    for (const auto& c : csv_columns(with_error))
        out += (out.empty() ? "" : ",") + c;
    return out;
}

std::string csv_row(const BoundsReport& r, bool with_error)
{
    std::string out = std::to_string(r.n) + ',' + format_double(r.alpha_re) + ',' + format_double(r.alpha_im) + ',' +
                      format_double(r.analytic_lower) + ',' + format_double(r.analytic_upper) + ',' +
                      optional_cell(r.witness_lower) + ',' + optional_cell(r.oracle_lower) + ',' +
                      optional_cell(r.lp_estimate) + ',' + std::to_string(r.precision_bits) + ',' +
                      std::to_string(r.seed);
    if (with_error)
        out += ',' + csv_escape(r.error);
    return out;
}

std::vector<BoundsReport> reports_from_csv(std::string_view text)
{
    std::vector<std::string_view> lines;
    for (std::string_view line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!trim(line).empty())
            lines.push_back(line);
    }
    if (lines.empty())
        throw ParseError("empty CSV input");
    const auto header = csv_fields(lines.front());
    const bool with_error = header == csv_columns(true);
    if (!with_error && header != csv_columns(false))
        throw ParseError("unexpected CSV header: " + std::string(lines.front()));

    std::vector<BoundsReport> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = csv_fields(lines[i]);
        if (f.size() != header.size())
            throw ParseError("CSV line " + std::to_string(i + 1) + " has " + std::to_string(f.size()) +
                             " fields, expected " + std::to_string(header.size()));
        auto opt = [](const std::string& s, const char* what) {
            return s.empty() ? std::optional<double>{} : std::optional<double>{parse_number(s, what)};
        };
        BoundsReport r;
        r.n = static_cast<int>(parse_integer(f[0], "n"));
        r.alpha_re = parse_number(f[1], "alpha_re");
        r.alpha_im = parse_number(f[2], "alpha_im");
        r.analytic_lower = parse_number(f[3], "analytic_lower");
        r.analytic_upper = parse_number(f[4], "analytic_upper");
        r.witness_lower = opt(f[5], "witness_lower");
        r.oracle_lower = opt(f[6], "oracle_lower");
        r.lp_estimate = opt(f[7], "lp_estimate");
        r.precision_bits = static_cast<unsigned>(parse_integer(f[8], "precision_bits"));
        r.seed = parse_integer<std::uint64_t>(f[9], "seed");
        if (with_error)
            r.error = f[10];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<BoundsReport> parse_report_file(std::string_view text)
{
    const std::string_view body = trim(text);
    if (body.empty())
        throw ParseError("input is empty");
    if (body.front() != '[' && body.front() != '{')
        return reports_from_csv(body);
    json j;
    try {
        j = json::parse(body);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    std::vector<BoundsReport> rows;
    if (j.is_object()) {
        rows.push_back(report_from_json(j));
    } else {
        for (const json& item : j)
            rows.push_back(report_from_json(item));
    }
    return rows;
}

AlphaParam parse_alpha(std::string_view text)
{
    static const std::regex pattern(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)([+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i\s*$)");
    const std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, pattern))
        throw ParseError("alpha must look like RE+IMi or RE-IMi (e.g. 0.3+0.4i), got '" + s + "'");
    return make_alpha(parse_number(m[1].str(), "alpha real part"), parse_number(m[2].str(), "alpha imaginary part"));
}

std::string format_alpha(double re, double im)
{
    std::string out = format_double(re);
    out += std::signbit(im) ? "" : "+";
    return out + format_double(im) + "i";
}

std::vector<int> parse_n_range(std::string_view text)
{
    const std::string_view s = trim(text);
    const std::size_t dots = s.find("..");
    long long lo = 0, hi = 0;
    if (dots == std::string_view::npos) {
        lo = hi = parse_integer(s, "n");
    } else {
        lo = parse_integer(trim(s.substr(0, dots)), "n-range start");
        hi = parse_integer(trim(s.substr(dots + 2)), "n-range end");
    }
    if (lo > hi)
        throw ParseError("n-range is empty: " + std::string(s));
    if (lo < 1)
        throw ParseError("n-range must start at 1 or above: " + std::string(s));
    if (hi - lo > 100000)
        throw ParseError("n-range too long: " + std::string(s));
    std::vector<int> out;
    for (long long n = lo; n <= hi; ++n)
        out.push_back(static_cast<int>(n));
    return out;
}

namespace {

std::vector<double> parse_axis_values(std::string_view spec)
{
    const auto parts = split(spec, ':');
    if (parts.size() == 2) {
        const std::size_t dots = parts[0].find("..");
        if (dots == std::string_view::npos)
            throw ParseError("axis range must look like a..b:count, got '" + std::string(spec) + "'");
        const double a = parse_number(trim(parts[0].substr(0, dots)), "axis start");
        const double b = parse_number(trim(parts[0].substr(dots + 2)), "axis end");
        const long long count = parse_integer(trim(parts[1]), "axis count");
        if (count < 1 || count > 100000)
            throw ParseError("axis count must be in [1, 100000]");
        if (count == 1) {
            if (a != b)
                throw ParseError("a single-point axis range needs equal endpoints");
            return {a};
        }
        std::vector<double> out;
        for (long long i = 0; i < count; ++i) {
            // Rounded to 15 digits so 0.1..0.9:5 yields 0.3, not 0.30000000000000004.
            const double v = i + 1 == count ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.15g", v);
            out.push_back(std::strtod(buf, nullptr));
        }
        return out;
    }
    if (parts.size() != 1)
        throw ParseError("bad axis spec '" + std::string(spec) + "'");
    std::vector<double> out;
    for (std::string_view v : split(parts[0], ';'))
        out.push_back(parse_number(trim(v), "axis value"));
    return out;
}

}  // namespace

std::vector<AlphaParam> parse_alpha_grid(std::string_view text)
{
    std::optional<std::vector<double>> re, im;
    for (std::string_view item : split(text, ',')) {
        item = trim(item);
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("alpha-grid entry needs an axis prefix (re: or im:), got '" + std::string(item) + "'");
        const std::string_view axis = item.substr(0, colon);
        auto values = parse_axis_values(item.substr(colon + 1));
        if (axis == "re" && !re)
            re = std::move(values);
        else if (axis == "im" && !im)
            im = std::move(values);
        else
            throw ParseError("alpha-grid axis must be 're' or 'im' and appear once, got '" + std::string(axis) + "'");
    }
    if (!re || !im)
        throw ParseError("alpha-grid needs both an 're' and an 'im' axis");
    std::sort(re->begin(), re->end());
    std::sort(im->begin(), im->end());
    re->erase(std::unique(re->begin(), re->end()), re->end());
    im->erase(std::unique(im->begin(), im->end()), im->end());
    std::vector<AlphaParam> out;
    for (double r : *re)
        for (double i : *im)
            out.push_back(make_alpha(r, i));
    return out;
}

BoundsReport analytic_report(int n, const AlphaParam& alpha)
{
    alpha.require_theorem_valid();
    BoundsReport r;
    r.n = n;
    r.alpha_re = alpha.re;
    r.alpha_im = alpha.im;
    const Bracket b = theorem2_bounds(n, alpha);
    r.analytic_lower = b.lower;
    r.analytic_upper = b.upper;
    return r;
}

BoundsReport compute_row(int n, const AlphaParam& alpha, const SweepOptions& opts)
{
    BoundsReport r;
    r.n = n;
    r.alpha_re = alpha.re;
    r.alpha_im = alpha.im;
    r.precision_bits = opts.precision.bits;
    r.cfg = opts.cfg;
    r.seed = opts.seed;
    r.trials = opts.trials;
    try {
        const BoundsReport base = analytic_report(n, alpha);
        r.analytic_lower = base.analytic_lower;
        r.analytic_upper = base.analytic_upper;
        if (opts.mode == SweepMode::witness) {
            r.witness_lower = certify_witness(n, alpha, 0.0, kDefaultCircleGrid, opts.precision).lower_bound;
        } else if (opts.mode == SweepMode::full) {
            SolverOptions so;
            so.threads = 1;
            so.precision = opts.precision;
            const EnEstimate e = en_bracket(n, alpha, opts.cfg, opts.trials, opts.seed, so);
            r.witness_lower = e.witness_log_value;
            r.oracle_lower = e.oracle_log_value;
            r.lp_estimate = e.lp_log_value;
            r.violations = e.violations;
        }
    } catch (const std::exception& e) {
        r.witness_lower.reset();
        r.oracle_lower.reset();
        r.lp_estimate.reset();
        r.error = e.what();
        if (r.error.empty())
            r.error = "unknown error";
    }
    return r;
}

std::vector<BoundsReport> run_sweep(const std::vector<int>& ns, const std::vector<AlphaParam>& alphas,
                                    const SweepOptions& opts)
{
    std::vector<std::pair<int, AlphaParam>> tasks;
    for (int n : ns)
        for (const AlphaParam& a : alphas)
            tasks.emplace_back(n, a);
    if (tasks.empty())
        throw ParseError("sweep has no (n, alpha) pairs");

    std::vector<BoundsReport> rows(tasks.size());
    const int workers = std::clamp(opts.jobs, 1, static_cast<int>(tasks.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            rows[i] = compute_row(tasks[i].first, tasks[i].second, opts);
    };
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < workers; ++t)
            pool.emplace_back(work);
        work();
    }
    std::stable_sort(rows.begin(), rows.end(), [](const BoundsReport& a, const BoundsReport& b) {
        return std::tie(a.n, a.alpha_re, a.alpha_im) < std::tie(b.n, b.alpha_re, b.alpha_im);
    });
    return rows;
}

std::string render_csv(const std::vector<BoundsReport>& rows)
{
    const bool with_error = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return !r.error.empty(); });
    std::string out = csv_header(with_error) + '\n';
    for (const auto& r : rows)
        out += csv_row(r, with_error) + '\n';
    return out;
}

std::string render_json(const std::vector<BoundsReport>& rows)
{
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(to_json(r));
    return arr.dump(2) + '\n';
}

}  // namespace bwexp
