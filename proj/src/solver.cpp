#include "bwexp/solver.hpp"

#include "bwexp/construct.hpp"
#include "bwexp/norms.hpp"
#include "bwexp/simplex.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <thread>

namespace bwexp {

using cd = std::complex<double>;

void LPConfig::validate(int n) const
{
    const int big_n = exponent_count(n);
    if (circle_points < 4 * big_n)
        throw std::invalid_argument("circle_points must be at least 4N = " + std::to_string(4 * big_n));
    if (polygon_sides < 8)
        throw std::invalid_argument("polygon_sides must be at least 8");
    if (torus_points < 8)
        throw std::invalid_argument("torus_points must be at least 8");
    if (phase_samples < 4)
        throw std::invalid_argument("phase_samples must be at least 4");
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kCutTolerance = 1e-9;

void require_size(int n, const SolverOptions& opts)
{
    if (n < 1)
        throw std::invalid_argument("degree n must be at least 1");
    if (n > opts.max_degree && !opts.allow_large_degree)
        throw ProblemTooLarge("n = " + std::to_string(n) + " exceeds the solver guard n <= " +
                              std::to_string(opts.max_degree) + "; pass the override to run anyway");
}

std::vector<cd> nodes_double(int n, const AlphaParam& alpha)
{
    std::vector<cd> out;
    const cd a(alpha.re, alpha.im);
    for (const MultiIndex& m : canonical_indices(n))
        out.push_back(static_cast<double>(m.j) + static_cast<double>(m.k) * a);
    return out;
}

cd unit(double angle) { return std::polar(1.0, angle); }

// Row-major table of e^{a_c t_i} for t_i on the unit circle.
struct CurveSamples {
    int points = 0;
    int width = 0;
    std::vector<cd> values;

    CurveSamples(const std::vector<cd>& nodes, int m) : points(m), width(static_cast<int>(nodes.size()))
    {
        values.reserve(static_cast<std::size_t>(m) * nodes.size());
        for (int i = 0; i < m; ++i) {
            const cd t = unit(kTwoPi * i / m);
            for (const cd& a : nodes)
                values.push_back(std::exp(a * t));
        }
    }

    cd eval(int i, const std::vector<cd>& c) const
    {
        const cd* row = &values[static_cast<std::size_t>(i) * static_cast<std::size_t>(width)];
        cd s = 0.0;
        for (int k = 0; k < width; ++k)
            s += row[k] * c[static_cast<std::size_t>(k)];
        return s;
    }
};

std::vector<cd> to_complex(const std::vector<double>& x)
{
    std::vector<cd> c(x.size() / 2);
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = {x[2 * k], x[2 * k + 1]};
    return c;
}

// Real row for Re(u . c) with c split into (Re, Im) pairs.
void real_row(const cd* u, int width, std::vector<double>& row)
{
    for (int k = 0; k < width; ++k) {
        row[2 * static_cast<std::size_t>(k)] = u[k].real();
        row[2 * static_cast<std::size_t>(k) + 1] = -u[k].imag();
    }
}

struct InstanceResult {
    double value = 0.0;
    int rows = 0;
};

class CuttingPlaneLp {
public:
    CuttingPlaneLp(const CurveSamples& curve, int sides) : curve_(curve), sides_(sides)
    {
        for (int s = 0; s < sides; ++s)
            rotations_.push_back(unit(kTwoPi * s / sides));
    }

    // maximize Re(g . c) s.t. Re(e^{i phi_s} f(t_i)) <= 1 for all i, s.
    InstanceResult solve(const std::vector<cd>& g) const
    {
        const int width = curve_.width;
        std::vector<double> objective(2 * static_cast<std::size_t>(width));
        real_row(g.data(), width, objective);
        DenseSimplex lp(std::move(objective));

        std::vector<char> used(static_cast<std::size_t>(curve_.points) * static_cast<std::size_t>(sides_), 0);
        std::vector<double> row(2 * static_cast<std::size_t>(width));
        std::vector<cd> rotated(static_cast<std::size_t>(width));
        auto add = [&](int i, int s) {
            char& flag = used[static_cast<std::size_t>(i) * static_cast<std::size_t>(sides_) + static_cast<std::size_t>(s)];
            if (flag)
                return false;
            flag = 1;
            const cd* h = &curve_.values[static_cast<std::size_t>(i) * static_cast<std::size_t>(width)];
            for (int k = 0; k < width; ++k)
                rotated[static_cast<std::size_t>(k)] = rotations_[static_cast<std::size_t>(s)] * h[k];
            real_row(rotated.data(), width, row);
            lp.add_constraint(row, 1.0);
            return true;
        };

        // Seed with 2(N+1) spread points and four near-orthogonal phases so the
        // first program is already bounded.
        const int seed_points = std::min(curve_.points, 2 * width);
        for (int q = 0; q < seed_points; ++q) {
            const int i = static_cast<int>(std::lround(static_cast<double>(q) * curve_.points / seed_points)) % curve_.points;
            for (int p = 0; p < 4; ++p)
                add(i, static_cast<int>(std::lround(static_cast<double>(p) * sides_ / 4.0)) % sides_);
        }

        const int batch = std::max(8, width);
        std::vector<std::pair<double, int>> violations;
        std::vector<int> phase_of(static_cast<std::size_t>(curve_.points));
        for (int round = 0; round < 1000; ++round) {
            const LpStatus status = lp.solve();
            if (status == LpStatus::unbounded)
                throw SolverUnbounded("discretized program is unbounded; raise circle_points");
            if (status != LpStatus::optimal)
                throw std::runtime_error(std::string("LP solver stopped: ") + to_string(status));

            const std::vector<cd> c = to_complex(lp.solution());
            violations.clear();
            for (int i = 0; i < curve_.points; ++i) {
                const cd f = curve_.eval(i, c);
                // The polygon face closest to the direction of f is the binding one.
                long s = std::lround(-std::arg(f) / kTwoPi * sides_);
                s = ((s % sides_) + sides_) % sides_;
                const double v = (rotations_[static_cast<std::size_t>(s)] * f).real();
                if (v > 1.0 + kCutTolerance) {
                    violations.emplace_back(v, i);
                    phase_of[static_cast<std::size_t>(i)] = static_cast<int>(s);
                }
            }
            if (violations.empty())
                return {lp.objective_value(), static_cast<int>(lp.num_constraints())};
            std::sort(violations.begin(), violations.end(), [](const auto& a, const auto& b) {
                return a.first > b.first || (a.first == b.first && a.second < b.second);
            });
            int added = 0;
            for (const auto& [v, i] : violations) {
                if (added >= batch)
                    break;
                if (add(i, phase_of[static_cast<std::size_t>(i)]))
                    ++added;
            }
            if (added == 0)  // only already-present rows are violated: solver tolerance floor
                return {lp.objective_value(), static_cast<int>(lp.num_constraints())};
        }
        throw std::runtime_error("cutting-plane loop did not converge");
    }

private:
    const CurveSamples& curve_;
    int sides_;
    std::vector<cd> rotations_;
};

template <class Fn>
void parallel_for(int count, int threads, Fn&& fn)
{
    if (threads <= 0)
        threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (int i = next++; i < count; i = next++)
                        fn(i);
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                    next = count;
                }
            });
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

}  // namespace

LpDetails en_lp_details(int n, const AlphaParam& alpha, const LPConfig& cfg, const SolverOptions& opts)
{
    require_size(n, opts);
    cfg.validate(n);

    const auto nodes = nodes_double(n, alpha);
    const CurveSamples curve(nodes, cfg.circle_points);
    const CuttingPlaneLp program(curve, cfg.polygon_sides);
    const auto indices = canonical_indices(n);

    // Rotating all coefficients by 2 pi / S permutes the polygon constraints,
    // so phases that are multiples of 2 pi / S give the same optimum.
    const int phases = cfg.polygon_sides % cfg.phase_samples == 0 ? 1 : cfg.phase_samples;
    const int m2 = cfg.torus_points;
    const int count = m2 * m2 * phases;

    std::vector<InstanceResult> results(static_cast<std::size_t>(count));
    parallel_for(count, opts.threads, [&](int task) {
        const int q = task % phases;
        const int cell = task / phases;
        const cd z0 = unit(kTwoPi * (cell / m2) / m2);
        const cd w0 = unit(kTwoPi * (cell % m2) / m2);
        const cd rot = unit(kTwoPi * q / cfg.phase_samples);
        std::vector<cd> g;
        g.reserve(indices.size());
        for (const MultiIndex& m : indices)
            g.push_back(rot * std::pow(z0, m.j) * std::pow(w0, m.k));
        results[static_cast<std::size_t>(task)] = program.solve(g);
    });

    LpDetails out;
    out.programs = count;
    double best = -1.0;
    for (int task = 0; task < count; ++task) {
        const auto& r = results[static_cast<std::size_t>(task)];
        out.max_rows = std::max(out.max_rows, r.rows);
        if (r.value > best) {
            best = r.value;
            out.best_torus_z = (task / phases) / m2;
            out.best_torus_w = (task / phases) % m2;
        }
    }
    out.log_value = std::log(best);
    return out;
}

double en_lp_estimate(int n, const AlphaParam& alpha, const LPConfig& cfg, const SolverOptions& opts)
{
    return en_lp_details(n, alpha, cfg, opts).log_value;
}

namespace {

double seeded_ratio(const Poly2& p, const AlphaParam& alpha, const RandomSearchOptions& opts)
{
    PrecisionScope scope(opts.precision);
    const NormEstimate k = norm_on_K(p, alpha, opts.circle_points, opts.precision);
    const NormEstimate b = norm_on_bidisk(p, opts.torus_points, opts.precision);
    return (log(b.grid_max) - log(*k.certified_upper)).to_double();
}

}  // namespace

RandomSearchResult en_random_search_details(int n, const AlphaParam& alpha, int trials, std::uint64_t seed,
                                            const RandomSearchOptions& opts)
{
    if (n < 1)
        throw std::invalid_argument("degree n must be at least 1");
    if (trials < 0)
        throw std::invalid_argument("trials must be nonnegative");
    if (opts.circle_points < 8 || opts.torus_points < 8)
        throw std::invalid_argument("grid sizes must be at least 8");

    RandomSearchResult best{-std::numeric_limits<double>::infinity(), ""};
    auto consider = [&](double value, std::string label) {
        if (value > best.log_value)
            best = {value, std::move(label)};
    };

    if (opts.seeded_candidates) {
        PrecisionScope scope(opts.precision);
        Poly2 z(n), w(n);
        z(1, 0) = Complex(1);
        w(0, 1) = Complex(1);
        consider(seeded_ratio(z, alpha, opts), "z");
        consider(seeded_ratio(w, alpha, opts), "w");
        if (alpha.im != 0.0)
            consider(seeded_ratio(build_witness(n, alpha, opts.precision).p, alpha, opts), "witness");
    }
    if (trials == 0)
        return best;

    const auto nodes = nodes_double(n, alpha);
    const int width = static_cast<int>(nodes.size());
    const CurveSamples curve(nodes, opts.circle_points);
    const int m2 = opts.torus_points;
    std::vector<cd> torus(static_cast<std::size_t>(m2));
    for (int i = 0; i < m2; ++i)
        torus[static_cast<std::size_t>(i)] = unit(kTwoPi * i / m2);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<cd> c(static_cast<std::size_t>(width));
    std::vector<cd> inner(static_cast<std::size_t>(m2) * static_cast<std::size_t>(n + 1));
    for (int trial = 0; trial < trials; ++trial) {
        double norm2 = 0.0;
        for (auto& v : c) {
            const double re = normal(rng);
            const double im = normal(rng);
            v = {re, im};
            norm2 += re * re + im * im;
        }
        const double scale = 1.0 / std::sqrt(norm2);
        for (auto& v : c)
            v *= scale;

        // Certified K-norm: grid max + (pi/M) * sum |c||a| e^{|a|}.
        double grid_k = 0.0;
        for (int i = 0; i < curve.points; ++i)
            grid_k = std::max(grid_k, std::abs(curve.eval(i, c)));
        double deriv = 0.0;
        for (int k = 0; k < width; ++k) {
            const double a = std::abs(nodes[static_cast<std::size_t>(k)]);
            deriv += std::abs(c[static_cast<std::size_t>(k)]) * a * std::exp(a);
        }
        const double cert_k = grid_k + std::numbers::pi / curve.points * deriv;

        // Torus grid max with P(z, w) = sum_j z^j inner_j(w).
        for (int iw = 0; iw < m2; ++iw) {
            for (int j = 0; j <= n; ++j) {
                cd acc = 0.0;
                for (int k = n - j; k >= 0; --k)
                    acc = acc * torus[static_cast<std::size_t>(iw)] + c[canonical_position({j, k})];
                inner[static_cast<std::size_t>(iw) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(j)] = acc;
            }
        }
        double grid_b = 0.0;
        for (int iz = 0; iz < m2; ++iz) {
            const cd z = torus[static_cast<std::size_t>(iz)];
            for (int iw = 0; iw < m2; ++iw) {
                const cd* row = &inner[static_cast<std::size_t>(iw) * static_cast<std::size_t>(n + 1)];
                cd acc = 0.0;
                for (int j = n; j >= 0; --j)
                    acc = acc * z + row[j];
                grid_b = std::max(grid_b, std::abs(acc));
            }
        }
        consider(std::log(grid_b) - std::log(cert_k), "random:" + std::to_string(trial));
    }
    return best;
}

double en_random_search(int n, const AlphaParam& alpha, int trials, std::uint64_t seed,
                        const RandomSearchOptions& opts)
{
    return en_random_search_details(n, alpha, trials, seed, opts).log_value;
}

EnEstimate en_bracket(int n, const AlphaParam& alpha, const LPConfig& cfg, int trials, std::uint64_t seed,
                      const SolverOptions& opts)
{
    EnEstimate est;
    est.n = n;
    est.alpha = alpha;
    est.config = cfg;
    est.seed = seed;
    est.trials = trials;
    est.precision_bits = opts.precision.bits;
    est.analytic = theorem2_bounds(n, alpha);
    // Fail fast, before the witness and oracle run.
    require_size(n, opts);
    cfg.validate(n);
    if (trials < 0)
        throw std::invalid_argument("trials must be nonnegative");

    const WitnessCertificate cert = certify_witness(n, alpha, 0.0, kDefaultCircleGrid, opts.precision);
    est.witness_log_value = cert.lower_bound;

    RandomSearchOptions ropts;
    ropts.precision = opts.precision;
    est.oracle_log_value = en_random_search(n, alpha, trials, seed, ropts);
    est.lp_log_value = en_lp_estimate(n, alpha, cfg, opts);

    if (est.witness_log_value > est.analytic.upper + 1e-6)
        est.violations.push_back("witness_above_analytic_upper");
    if (est.oracle_log_value > est.analytic.upper + 1e-6)
        est.violations.push_back("oracle_above_analytic_upper");
    if (est.oracle_log_value > est.lp_log_value + kCrossEstimatorSlack)
        est.violations.push_back("oracle_above_lp_estimate");
    return est;
}

}  // namespace bwexp
