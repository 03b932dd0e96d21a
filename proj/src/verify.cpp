#include "bwexp/verify.hpp"

#include "bwexp/construct.hpp"
#include "bwexp/norms.hpp"
#include "bwexp/solver.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bwexp {

bool VerifyReport::ok() const { return first_failure() == nullptr; }

const SuiteResult* VerifyReport::first_failure() const
{
    for (const auto& s : suites)
        if (!s.passed)
            return &s;
    return nullptr;
}

void set_proof_constant(ProofConstants& k, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("constant override must look like name=value, got '" + assignment + "'");
    const std::string name = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v))
        throw std::invalid_argument("constant value is not a number: '" + text + "'");
    static const std::map<std::string, double ProofConstants::*> fields{
        {"vieta", &ProofConstants::vieta_slack}, {"coeff", &ProofConstants::coeff_slack},
        {"beta", &ProofConstants::beta_slack},   {"theorem", &ProofConstants::theorem_slack},
        {"kk", &ProofConstants::kk_slack},
    };
    const auto it = fields.find(name);
    if (it == fields.end())
        throw std::invalid_argument("unknown constant '" + name + "' (expected vieta, coeff, beta, theorem or kk)");
    k.*(it->second) = v;
}

namespace {

using Rng = std::mt19937_64;
using cd = std::complex<double>;

struct Context {
    const VerifyOptions& opts;
    Rng rng;
    bool full() const { return opts.level == VerifyLevel::full; }
    template <class T>
    T pick(T quick, T full_value) const { return full() ? full_value : quick; }
};

// Records the first failure only; later cases still count.
struct Checker {
    SuiteResult& out;

    void fail(const std::string& detail, const std::string& check = {})
    {
        if (!out.passed)
            return;
        out.passed = false;
        out.failed_check = check.empty() ? out.name : check;
        out.detail = detail;
    }
    void expect(bool ok, const std::function<std::string()>& detail)
    {
        ++out.cases;
        if (!ok)
            fail(detail());
    }
};

std::string fmt(double x)
{
    std::ostringstream s;
    s.precision(10);
    s << x;
    return s.str();
}

std::string alpha_str(const AlphaParam& a) { return "alpha=" + fmt(a.re) + (a.im < 0 ? "" : "+") + fmt(a.im) + "i"; }

const std::vector<AlphaParam>& fixed_alphas()
{
    static const std::vector<AlphaParam> set{make_alpha(0.0, 0.5), make_alpha(0.3, 0.4), make_alpha(-0.2, 0.6),
                                             make_alpha(0.1, 0.1)};
    return set;
}

// Theorem-valid alpha with |alpha_2| >= 0.01.
AlphaParam random_alpha(Rng& rng)
{
    std::uniform_real_distribution<double> radius(0.05, 0.95);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (;;) {
        const double r = radius(rng);
        const double t = angle(rng);
        const AlphaParam a = make_alpha(r * std::cos(t), r * std::sin(t));
        if (std::abs(a.im) >= 0.01 && a.theorem_valid)
            return a;
    }
}

Poly2 random_poly(int n, Rng& rng)
{
    std::normal_distribution<double> normal;
    Poly2 p(n);
    for (auto& c : p.coeffs())
        c = Complex(normal(rng), normal(rng));
    return p;
}

std::vector<AlphaParam> alpha_set(Context& ctx, int extra)
{
    auto out = fixed_alphas();
    for (int i = 0; i < extra; ++i)
        out.push_back(random_alpha(ctx.rng));
    return out;
}

void node_distinctness(Context& ctx, Checker& c)
{
    PrecisionScope scope(ctx.opts.precision);
    const int n_max = ctx.pick(6, 12);
    for (const AlphaParam& a : alpha_set(ctx, ctx.pick(4, 40))) {
        for (int n = 1; n <= n_max; ++n) {
            const auto nodes = monomial_nodes(n, a);
            Real best = Real(-1);
            for (std::size_t i = 0; i < nodes.size(); ++i)
                for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                    const Real d = abs(nodes[i].value - nodes[j].value);
                    if (best.sign() < 0 || d < best)
                        best = d;
                }
            c.expect(best.sign() > 0 && nodes.size() == static_cast<std::size_t>(monomial_count(n)),
                     [&] { return "coincident nodes at n=" + std::to_string(n) + ", " + alpha_str(a); });
        }
    }
}

void composition_consistency(Context& ctx, Checker& c)
{
    PrecisionScope scope(ctx.opts.precision);
    const double tol = ctx.opts.precision.half_tolerance();
    std::uniform_int_distribution<int> degree(1, ctx.pick(3, 6));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const int n = degree(ctx.rng);
        const AlphaParam a = random_alpha(ctx.rng);
        const Poly2 p = random_poly(n, ctx.rng);
        Complex t(2.0 * unit(ctx.rng), 2.0 * unit(ctx.rng));
        if (abs(t) > Real(2))
            t = t / Real(2);
        const Complex lhs = eval_expsum(compose_to_expsum(p, a), t);
        const Complex rhs = eval_poly(p, exp(t), exp(a.value() * t));
        const Real err = abs(lhs - rhs);
        c.expect(err <= Real(tol) * (Real(1) + abs(rhs)), [&] {
            return "composition mismatch " + fmt(err.to_double()) + " at n=" + std::to_string(n) + ", " + alpha_str(a);
        });
    }
}

void precision_monotonicity(Context& ctx, Checker& c)
{
    const Precision lo = ctx.opts.precision;
    const Precision hi{lo.bits * 2};
    const double tol = lo.half_tolerance();
    for (int i = 0; i < ctx.pick(20, 200); ++i) {
        const int n = 1 + i % 4;
        const AlphaParam a = random_alpha(ctx.rng);
        const Poly2 seed_poly = random_poly(n, ctx.rng);
        auto evaluate = [&](Precision prec) {
            PrecisionScope scope(prec);
            Poly2 p(n);
            for (std::size_t k = 0; k < p.size(); ++k)
                p.coeffs()[k] = Complex(seed_poly.at(k).re.to_double(), seed_poly.at(k).im.to_double());
            const Complex t(0.7, -0.4);
            return eval_expsum(compose_to_expsum(p, a), t);
        };
        const Complex x = evaluate(lo);
        const Complex y = evaluate(hi);
        PrecisionScope scope(hi);
        const Real rel = abs(x - y) / (Real(1) + abs(y));
        c.expect(rel <= Real(tol), [&] { return "result moved by " + fmt(rel.to_double()) + " at 2x bits"; });
    }
}

void theorem_ordering(Context& ctx, Checker& c)
{
    const int n_max = ctx.pick(200, 10000);
    for (const AlphaParam& a : alpha_set(ctx, ctx.pick(4, 20)))
        for (int n = 1; n <= n_max; ++n) {
            const Bracket b = theorem2_bounds(n, a, ctx.opts.constants);
            c.expect(b.lower < b.upper, [&] { return "lower >= upper at n=" + std::to_string(n) + ", " + alpha_str(a); });
        }
}

void lemma_products(Context& ctx, Checker& c)
{
    PrecisionScope scope(ctx.opts.precision);
    const double tol = ctx.opts.precision.half_tolerance();
    std::uniform_int_distribution<long> kdist(1, 20);
    std::uniform_int_distribution<long> xdist(-10, 10);
    for (int i = 0; i < ctx.pick(100, 10000); ++i) {
        const long k = kdist(ctx.rng);
        long x = xdist(ctx.rng);
        long y = xdist(ctx.rng);
        if (x > y)
            std::swap(x, y);
        const AlphaParam a = random_alpha(ctx.rng);
        const Real exact = lemma_product_exact(x, y, k, a, ctx.opts.precision);
        const Real lower = lemma_product_lower(x, y, k, a, ctx.opts.precision);
        const Real scale = lower > Real(1) ? lower : Real(1);
        c.expect(exact >= lower - Real(tol) * scale, [&] {
            return "product " + fmt(exact.to_double()) + " < bound " + fmt(lower.to_double()) + " at k=" +
                   std::to_string(k) + ", [" + std::to_string(x) + "," + std::to_string(y) + "], " + alpha_str(a);
        });
    }
}

void stirling_bounds(Context& ctx, Checker& c)
{
    PrecisionScope scope(ctx.opts.precision);
    const Real lo = exp(Real(7) / Real(8));
    const Real hi = euler_e();
    const Real slack(ctx.opts.precision.half_tolerance());
    for (unsigned long m = 1; m <= static_cast<unsigned long>(ctx.pick(200, 1000)); ++m) {
        const Real s = stirling_ratio(m, ctx.opts.precision);
        c.expect(s >= lo && s <= hi + slack,
                 [&] { return "ratio " + s.to_string(20) + " outside [e^(7/8), e] at m=" + std::to_string(m); });
    }
}

void half_integer_identity(Context& ctx, Checker& c)
{
    PrecisionScope scope(ctx.opts.precision);
    const double tol = ctx.opts.precision.half_tolerance();
    for (unsigned long m = 1; m <= static_cast<unsigned long>(ctx.pick(100, 500)); ++m) {
        const Real prod = half_integer_product(m, ctx.opts.precision);
        const Real closed = factorial(2 * m) / (pow(Real(4), static_cast<long>(m)) * factorial(m));
        const Real floor_value = pow(Real(static_cast<long>(m)) / euler_e(), static_cast<long>(m));
        c.expect(abs(prod - closed) <= Real(tol) * closed && prod >= floor_value,
                 [&] { return "identity or (m/e)^m bound fails at m=" + std::to_string(m); });
    }
}

void annihilator_identity(Context& ctx, Checker& c)
{
    PrecisionScope scope(ctx.opts.precision);
    const double tol = ctx.opts.precision.half_tolerance();
    const int n_max = ctx.pick(3, 5);
    const int polys = ctx.pick(3, 20);
    for (const AlphaParam& a : fixed_alphas()) {
        for (int n = 1; n <= n_max; ++n) {
            std::vector<Poly2> ps;
            for (int i = 0; i < polys; ++i)
                ps.push_back(random_poly(n, ctx.rng));
            for (const MultiIndex& t : canonical_indices(n)) {
                const AnnihilatorData r = annihilator(t.j, t.k, n, a, ctx.opts.precision);
                for (const Poly2& p : ps) {
                    const Complex expected = p(t.j, t.k) * r.beta;
                    const Complex got = apply_annihilator(r, compose_to_expsum(p, a));
                    const Real err = abs(got - expected);
                    c.expect(err <= Real(tol) * abs(expected), [&] {
                        return "D_R f(0) off by " + fmt(err.to_double()) + " at n=" + std::to_string(n) + ", target (" +
                               std::to_string(t.j) + "," + std::to_string(t.k) + "), " + alpha_str(a);
                    });
                }
            }
        }
    }
}

void beta_chain(Context& ctx, Checker& c)
{
    PrecisionScope scope(ctx.opts.precision);
    const double tol = ctx.opts.precision.half_tolerance();
    const int n_max = ctx.pick(4, 6);
    for (const AlphaParam& a : alpha_set(ctx, ctx.pick(0, 8))) {
        for (int n = 1; n <= n_max; ++n) {
            for (const MultiIndex& t : canonical_indices(n)) {
                const AnnihilatorData r = annihilator(t.j, t.k, n, a, ctx.opts.precision);
                const Real mod = abs(r.beta);
                const double lower = beta_log_lower(t.j, t.k, n, a, ctx.opts.constants);
                const auto [a1, a2] = a1_a2_products(t.j, t.k, n, a, ctx.opts.precision);
                const std::string where = "n=" + std::to_string(n) + ", target (" + std::to_string(t.j) + "," +
                                          std::to_string(t.k) + "), " + alpha_str(a);
                ++c.out.cases;
                if (log(mod).to_double() < lower)
                    c.fail("ln|beta| = " + fmt(log(mod).to_double()) + " < " + fmt(lower) + " at " + where,
                           "beta_log_lower");
                else if (mod < a1 * a2 - Real(tol) * mod)
                    c.fail("|beta| < A1*A2 at " + where, "beta_a1_a2");
            }
        }
    }
}

void vieta_majorant_suite(Context& ctx, Checker& c)
{
    PrecisionScope scope(ctx.opts.precision);
    for (const AlphaParam& a : alpha_set(ctx, ctx.pick(2, 10))) {
        for (int n = 1; n <= ctx.pick(3, 4); ++n) {
            const Real bound = vieta_majorant(n, ctx.opts.precision);
            for (const MultiIndex& t : canonical_indices(n)) {
                const Real sum = annihilator(t.j, t.k, n, a, ctx.opts.precision).majorant_sum();
                c.expect(sum <= bound, [&] {
                    return "sum |a_t| N^t = " + sum.to_string(12) + " exceeds (N+n)^N at n=" + std::to_string(n) +
                           ", " + alpha_str(a);
                });
            }
        }
    }
}

void coefficient_bound(Context& ctx, Checker& c)
{
    PrecisionScope scope(ctx.opts.precision);
    for (const AlphaParam& a : alpha_set(ctx, ctx.pick(0, 4))) {
        for (int n = 1; n <= ctx.pick(2, 4); ++n) {
            const double bound = coeff_log_upper(n, a, ctx.opts.constants) + 0.1;
            for (int i = 0; i < ctx.pick(2, 10); ++i) {
                Poly2 p = random_poly(n, ctx.rng);
                const NormEstimate k = norm_on_K(p, a, 256, ctx.opts.precision);
                p = p.scaled(Complex(Real(1) / *k.certified_upper));
                const double largest = log(p.max_abs_coeff()).to_double();
                c.expect(largest <= bound, [&] {
                    return "ln|c| = " + fmt(largest) + " > " + fmt(bound) + " at n=" + std::to_string(n) + ", " +
                           alpha_str(a);
                });
            }
        }
    }
}

void closed_form_inequalities(Context& ctx, Checker& c)
{
    const InequalityReport r = numeric_inequality_suite(ctx.pick(1000, 10000), ctx.opts.constants);
    c.out.cases += r.checks;
    if (const auto& v = r.first_violation)
        c.fail(v->name + " fails at n=" + std::to_string(v->n) + ": " + fmt(v->lhs) + " > " + fmt(v->rhs), v->name);
}

void witness_annihilation(Context& ctx, Checker& c)
{
    const Precision prec{std::max(ctx.opts.precision.bits, 512u)};
    for (const AlphaParam& a : fixed_alphas()) {
        for (int n = 1; n <= ctx.pick(4, 8); ++n) {
            const WitnessResult w = build_witness(n, a, prec);
            PrecisionScope scope(Precision{w.bits});
            const double residual = w.max_residual.to_double();
            c.expect(residual <= 1e-30 && !w.leading_power_sum.is_zero() && !w.p.is_zero(), [&] {
                return "residual " + fmt(residual) + " at n=" + std::to_string(n) + ", " + alpha_str(a);
            });
        }
    }
}

void witness_growth_law(Context& ctx, Checker& c)
{
    const Precision prec{std::max(ctx.opts.precision.bits, 512u)};
    for (const AlphaParam& a : fixed_alphas()) {
        for (int n = 1; n <= ctx.pick(3, 8); ++n) {
            const WitnessResult w = build_witness(n, a, prec);
            for (double r : {1.5, 2.0, static_cast<double>(w.big_n) / n}) {
                const double gap = growth_law_gap(w, a, r);
                c.expect(gap >= -1e-6, [&] {
                    return "growth deficit " + fmt(gap) + " at r=" + fmt(r) + ", n=" + std::to_string(n) + ", " +
                           alpha_str(a);
                });
            }
        }
    }
}

void witness_certificate(Context& ctx, Checker& c)
{
    for (const AlphaParam& a : alpha_set(ctx, ctx.pick(0, 4))) {
        for (int n = 1; n <= ctx.pick(3, 5); ++n) {
            const WitnessCertificate cert = certify_witness(n, a, 0.0, kDefaultCircleGrid, ctx.opts.precision);
            const Bracket b = theorem2_bounds(n, a, ctx.opts.constants);
            const double floor_value = proof_lower_bound(n);
            const double v = cert.lower_bound;
            c.expect(v <= b.upper + 1e-6 && v >= b.lower - 0.7 && v >= floor_value - 1e-6, [&] {
                return "witness bound " + fmt(v) + " outside [max(" + fmt(b.lower - 0.7) + ", " + fmt(floor_value) +
                       "), " + fmt(b.upper) + "] at n=" + std::to_string(n) + ", " + alpha_str(a);
            });
        }
    }
}

void witness_scale_invariance(Context& ctx, Checker& c)
{
    for (const AlphaParam& a : fixed_alphas()) {
        for (int n = 1; n <= ctx.pick(2, 4); ++n) {
            WitnessResult w = build_witness(n, a, ctx.opts.precision);
            const Precision work{w.bits};
            PrecisionScope scope(work);
            auto bound_for = [&](const WitnessResult& x) {
                const NormEstimate k = norm_on_K(x.p, a, 256, work);
                const NormEstimate s = norm_on_circle(compose_to_expsum(x.p, a), Real(x.r), 256, work);
                return witness_lower_bound(x, a, x.r, k, s);
            };
            const double base = bound_for(w);
            w.p = w.p.scaled(Complex(Real(-3.25), Real(1.5)));
            const double scaled = bound_for(w);
            c.expect(std::abs(base - scaled) <= 1e-9 * (1.0 + std::abs(base)),
                     [&] { return "bound changed under scaling at n=" + std::to_string(n) + ", " + alpha_str(a); });
        }
    }
}

void norm_one_sidedness(Context& ctx, Checker& c)
{
    PrecisionScope scope(ctx.opts.precision);
    const Real tol(ctx.opts.precision.half_tolerance());
    for (int i = 0; i < ctx.pick(10, 50); ++i) {
        const int n = 1 + i % 3;
        const AlphaParam a = random_alpha(ctx.rng);
        const Poly2 p = random_poly(n, ctx.rng);
        const NormEstimate coarse = norm_on_K(p, a, 64, ctx.opts.precision);
        const NormEstimate fine = norm_on_K(p, a, 128, ctx.opts.precision);
        const NormEstimate bidisk = norm_on_bidisk(p, 32, ctx.opts.precision);
        const NormEstimate circle = norm_on_circle(compose_to_expsum(p, a), Real(2), 128, ctx.opts.precision);
        const bool one_sided = coarse.grid_max <= *coarse.certified_upper && fine.grid_max <= *fine.certified_upper &&
                               bidisk.grid_max <= *bidisk.certified_upper &&
                               circle.grid_max <= *circle.certified_upper;
        const bool refined = fine.grid_max >= coarse.grid_max * (Real(1) - tol) &&
                             *fine.certified_upper <= *coarse.certified_upper * (Real(1) + tol);
        c.expect(one_sided && refined, [&] { return "grid/certified ordering broken at n=" + std::to_string(n); });
    }
}

void norm_known_values(Context& ctx, Checker& c)
{
    PrecisionScope scope(ctx.opts.precision);
    const AlphaParam a = make_alpha(0.0, 0.5);
    Poly2 z(1), w(1), one(1);
    z(1, 0) = Complex(1);
    w(0, 1) = Complex(1);
    one(0, 0) = Complex(1);
    Poly2 zw(2), corners(2);
    zw(1, 1) = Complex(1);
    for (auto [j, k] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}})
        corners(j, k) = Complex(1);
    const struct {
        const char* label;
        Real got;
        Real expected;
    } cases[] = {
        {"||z||_K", norm_on_K(z, a, 1024, ctx.opts.precision).grid_max, euler_e()},
        {"||w||_K", norm_on_K(w, a, 1024, ctx.opts.precision).grid_max, exp(Real(0.5))},
        {"||1||_K", norm_on_K(one, a, 1024, ctx.opts.precision).grid_max, Real(1)},
        {"||1||_K certified", *norm_on_K(one, a, 1024, ctx.opts.precision).certified_upper, Real(1)},
        {"||zw||_bidisk", norm_on_bidisk(zw, 64, ctx.opts.precision).grid_max, Real(1)},
        {"||1+z+w+zw||_bidisk", norm_on_bidisk(corners, 64, ctx.opts.precision).grid_max, Real(4)},
    };
    for (const auto& k : cases) {
        const Real rel = abs(k.got - k.expected) / k.expected;
        c.expect(rel <= Real(1e-6), [&] { return std::string(k.label) + " = " + k.got.to_string(15); });
    }
}

void envelope_check(Context& ctx, Checker& c)
{
    PrecisionScope scope(ctx.opts.precision);
    std::uniform_real_distribution<double> radius(0.0, 3.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const int polys = ctx.pick(100, 1000);
    const int points = ctx.pick(100, 1000);
    for (const AlphaParam& a : fixed_alphas()) {
        for (int n = 1; n <= 3; ++n) {
            const double en_log = theorem2_bounds(n, a, ctx.opts.constants).upper;
            for (int i = 0; i < polys / static_cast<int>(fixed_alphas().size()); ++i) {
                Poly2 p = random_poly(n, ctx.rng);
                const Real kn = *norm_on_K(p, a, 64, ctx.opts.precision).certified_upper;
                // |P| <= ||P||_K E_n e^{n log+ max} <=> ln|P/||P||_K| <= ln E_n + n log+ max.
                std::vector<cd> coeffs;
                for (const Complex& x : p.coeffs())
                    coeffs.push_back((x / kn).to_std());
                for (int s = 0; s < points; ++s) {
                    const cd z = std::polar(radius(ctx.rng), angle(ctx.rng));
                    const cd wv = std::polar(radius(ctx.rng), angle(ctx.rng));
                    cd value = 0.0;
                    for (const MultiIndex& m : canonical_indices(n))
                        value += coeffs[canonical_position(m)] * std::pow(z, m.j) * std::pow(wv, m.k);
                    const double growth = n * std::max(0.0, std::log(std::max(std::abs(z), std::abs(wv))));
                    const double lhs = std::log(std::abs(value));
                    c.expect(!(lhs > en_log + growth), [&] {
                        return "|P| exceeds the envelope at n=" + std::to_string(n) + ", " + alpha_str(a);
                    });
                }
            }
        }
    }
}

void oracle_soundness(Context& ctx, Checker& c)
{
    RandomSearchOptions ro;
    ro.precision = ctx.opts.precision;
    ro.torus_points = ctx.pick(64, 256);
    for (const AlphaParam& a : fixed_alphas()) {
        for (int n = 1; n <= ctx.pick(2, 5); ++n) {
            const double v = en_random_search(n, a, ctx.pick(50, 1000), ctx.rng(), ro);
            const double upper = theorem2_bounds(n, a, ctx.opts.constants).upper;
            c.expect(v <= upper + 1e-6, [&] {
                return "oracle " + fmt(v) + " above upper " + fmt(upper) + " at n=" + std::to_string(n) + ", " +
                       alpha_str(a);
            });
        }
    }
}

void solver_coherence(Context& ctx, Checker& c)
{
    const AlphaParam a = make_alpha(0.0, 0.5);
    SolverOptions so;
    so.precision = ctx.opts.precision;
    for (int n = 1; n <= ctx.pick(2, 3); ++n) {
        const LPConfig cfg;
        LPConfig doubled = cfg;
        doubled.circle_points *= 2;
        RandomSearchOptions ro;
        ro.precision = ctx.opts.precision;
        const double oracle = en_random_search(n, a, 1000, 0, ro);
        const double lp = en_lp_estimate(n, a, cfg, so);
        const double lp2 = en_lp_estimate(n, a, doubled, so);
        ++c.out.cases;
        if (oracle > lp + kCrossEstimatorSlack)
            c.fail("oracle " + fmt(oracle) + " > lp " + fmt(lp) + " + slack at n=" + std::to_string(n),
                   "oracle_below_lp");
        else if (lp2 > lp + 1e-6)
            c.fail("doubling circle_points raised lp from " + fmt(lp) + " to " + fmt(lp2) + " at n=" + std::to_string(n),
                   "lp_monotone_relaxation");
    }
}

struct Suite {
    const char* name;
    void (*run)(Context&, Checker&);
};

const std::vector<Suite>& suites()
{
    static const std::vector<Suite> all{
        {"node_distinctness", node_distinctness},
        {"composition_consistency", composition_consistency},
        {"precision_monotonicity", precision_monotonicity},
        {"theorem_ordering", theorem_ordering},
        {"lemma_products", lemma_products},
        {"stirling_bounds", stirling_bounds},
        {"half_integer_identity", half_integer_identity},
        {"annihilator_identity", annihilator_identity},
        {"beta_chain", beta_chain},
        {"vieta_majorant", vieta_majorant_suite},
        {"coefficient_bound", coefficient_bound},
        {"closed_form_inequalities", closed_form_inequalities},
        {"witness_annihilation", witness_annihilation},
        {"witness_growth_law", witness_growth_law},
        {"witness_certificate", witness_certificate},
        {"witness_scale_invariance", witness_scale_invariance},
        {"norm_one_sidedness", norm_one_sidedness},
        {"norm_known_values", norm_known_values},
        {"envelope", envelope_check},
        {"oracle_soundness", oracle_soundness},
        {"solver_coherence", solver_coherence},
    };
    return all;
}

}  // namespace

std::vector<std::string> verify_suite_names()
{
    std::vector<std::string> out;
    for (const auto& s : suites())
        out.emplace_back(s.name);
    return out;
}

VerifyReport run_verify(const VerifyOptions& opts, const std::vector<std::string>& only,
                        const std::function<void(const SuiteResult&)>& progress)
{
    opts.precision.validate();
    for (const auto& name : only) {
        const auto names = verify_suite_names();
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw std::invalid_argument("unknown suite '" + name + "'");
    }
    VerifyReport report;
    for (std::size_t i = 0; i < suites().size(); ++i) {
        const Suite& s = suites()[i];
        if (!only.empty() && std::find(only.begin(), only.end(), s.name) == only.end())
            continue;
        // Each suite gets its own stream so selecting a subset reproduces it.
        Context ctx{opts, Rng(opts.seed + 0x9e3779b97f4a7c15ULL * (i + 1))};
        SuiteResult result;
        result.name = s.name;
        Checker checker{result};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            s.run(ctx, checker);
        } catch (const std::exception& e) {
            checker.fail(std::string("exception: ") + e.what());
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (progress)
            progress(result);
        report.suites.push_back(std::move(result));
    }
    return report;
}

}  // namespace bwexp
