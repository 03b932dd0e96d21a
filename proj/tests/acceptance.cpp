// Acceptance run: one PASS/FAIL line per criterion, with timing and the first
// offending case on failure. Exits nonzero if any criterion fails.

#include "bwexp/analytic_bounds.hpp"
#include "bwexp/construct.hpp"
#include "bwexp/norms.hpp"
#include "bwexp/report.hpp"
#include "bwexp/solver.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

#include <mpfr.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace bwexp;

namespace {

struct Outcome {
    bool pass = true;
    long cases = 0;
    std::string detail;

    void check(bool ok, const std::function<std::string()>& why)
    {
        ++cases;
        if (!ok && pass) {
            pass = false;
            detail = why();
        }
    }
};

std::string num(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string where(int n, const AlphaParam& a) { return "n=" + std::to_string(n) + ", alpha=" + format_alpha(a.re, a.im); }

const std::vector<AlphaParam>& criterion_alphas()
{
    static const std::vector<AlphaParam> set{make_alpha(0.0, 0.5), make_alpha(0.3, 0.4), make_alpha(-0.2, 0.6),
                                             make_alpha(0.1, 0.1)};
    return set;
}

bool same_digits(double got, double expected, double rel)
{
    return std::abs(got - expected) <= rel * std::max(std::abs(expected), 1e-300);
}

// Closed-form endpoints with raw MPFR at 200 bits, sharing no code with the
// library's closed forms.
std::pair<double, double> mpfr_bracket(int n, double alpha_im)
{
    mpfr_t nn, ln_n, half, lower, upper, tmp;
    for (mpfr_ptr v : {nn, ln_n, half, lower, upper, tmp})
        mpfr_init2(v, 200);
    mpfr_set_si(nn, n, MPFR_RNDN);
    mpfr_log(ln_n, nn, MPFR_RNDN);
    mpfr_mul_si(half, ln_n, static_cast<long>(n) * n, MPFR_RNDN);
    mpfr_div_ui(half, half, 2, MPFR_RNDN);
    mpfr_sub_si(lower, half, static_cast<long>(n) * n, MPFR_RNDN);
    mpfr_add_si(upper, half, 8L * n * n, MPFR_RNDN);
    mpfr_set_d(tmp, std::abs(alpha_im), MPFR_RNDN);
    mpfr_log(tmp, tmp, MPFR_RNDN);
    mpfr_mul_si(tmp, tmp, n, MPFR_RNDN);
    mpfr_sub(upper, upper, tmp, MPFR_RNDN);
    const std::pair<double, double> out{mpfr_get_d(lower, MPFR_RNDN), mpfr_get_d(upper, MPFR_RNDN)};
    for (mpfr_ptr v : {nn, ln_n, half, lower, upper, tmp})
        mpfr_clear(v);
    return out;
}

Outcome endpoints()
{
    Outcome o;
    for (int n = 1; n <= 5; ++n)
        for (const AlphaParam& a : criterion_alphas()) {
            const Bracket b = theorem2_bounds(n, a);
            const auto [lo, up] = mpfr_bracket(n, a.im);
            o.check(same_digits(b.lower, lo, 1e-12) && same_digits(b.upper, up, 1e-12), [&] {
                return "bracket (" + num(b.lower) + ", " + num(b.upper) + ") vs (" + num(lo) + ", " + num(up) +
                       ") at " + where(n, a);
            });
        }
    for (const oracle::BracketRow& row : oracle::kTheoremBrackets) {
        const Bracket b = theorem2_bounds(row.n, make_alpha(row.re, row.im));
        o.check(same_digits(b.lower, row.lower, 1e-12) && same_digits(b.upper, row.upper, 1e-12), [&] {
            return "bracket (" + num(b.lower) + ", " + num(b.upper) + ") vs reference (" + num(row.lower) + ", " +
                   num(row.upper) + ") at " + where(row.n, make_alpha(row.re, row.im));
        });
    }
    return o;
}

Outcome bracket_consistency()
{
    Outcome o;
    for (int n = 1; n <= 5; ++n)
        for (const AlphaParam& a : criterion_alphas()) {
            const WitnessCertificate cert = certify_witness(n, a, 0.0, 512, Precision{256});
            const Bracket b = theorem2_bounds(n, a);
            const double big_n = exponent_count(n);
            const double floor_value = big_n * std::log(big_n / n) - big_n;
            const double v = cert.lower_bound;
            o.check(v >= b.lower - 0.7 && v <= b.upper + 1e-6 && v >= floor_value - 1e-6, [&] {
                return "witness_lower " + num(v) + " vs analytic [" + num(b.lower) + ", " + num(b.upper) +
                       "], floor " + num(floor_value) + " at " + where(n, a);
            });
        }
    return o;
}

Outcome lemma_cases()
{
    const Precision prec{};
    PrecisionScope scope(prec);
    std::mt19937_64 rng(1001);
    std::uniform_int_distribution<long> kdist(1, 20);
    std::uniform_int_distribution<long> xdist(-10, 10);
    Outcome o;
    long violations = 0, single_factor = 0;
    for (int i = 0; i < 10000; ++i) {
        const long k = kdist(rng);
        long x = xdist(rng), y = xdist(rng);
        if (x > y)
            std::swap(x, y);
        const AlphaParam a = test_support::random_alpha(rng);
        const Real exact = lemma_product_exact(x, y, k, a, prec);
        const Real bound = lemma_product_lower(x, y, k, a, prec);
        const bool ok = exact >= bound;
        if (!ok) {
            ++violations;
            single_factor += x == y ? 1 : 0;
        }
        o.check(ok, [&] {
            return "product " + num(exact.to_double()) + " < " + num(bound.to_double()) + " at k=" + std::to_string(k) +
                   ", [" + std::to_string(x) + ", " + std::to_string(y) + "], alpha=" + format_alpha(a.re, a.im);
        });
    }
    if (violations > 0)
        o.detail += "; " + std::to_string(violations) + " violations, " + std::to_string(single_factor) +
                    " with x = y where the bound is 0^0 = 1";
    return o;
}

Outcome stirling_and_half_integers()
{
    const Precision prec{};
    PrecisionScope scope(prec);
    Outcome o;
    const Real lo = exp(Real(7) / Real(8));
    const Real hi = exp(Real(1));
    for (unsigned long m = 1; m <= 1000; ++m) {
        const Real s = stirling_ratio(m, prec);
        // Recompute from the definition as a cross-check.
        const Real mm(static_cast<long>(m));
        const Real direct = factorial(m) / (pow(mm / hi, static_cast<long>(m)) * sqrt(mm));
        o.check(s >= lo && s <= hi && abs(s - direct) <= Real(1e-60) * direct,
                [&] { return "ratio " + s.to_string(20) + " at m=" + std::to_string(m); });
    }
    for (unsigned long m = 1; m <= 500; ++m) {
        const Real prod = half_integer_product(m, prec);
        const Real closed = factorial(2 * m) / (pow(Real(2), static_cast<long>(2 * m)) * factorial(m));
        const Real floor_value = pow(Real(static_cast<long>(m)) / hi, static_cast<long>(m));
        o.check(abs(prod - closed) <= Real(1e-60) * closed && prod >= floor_value,
                [&] { return "half-integer product fails at m=" + std::to_string(m); });
    }
    return o;
}

Outcome annihilators()
{
    const Precision prec{256};
    PrecisionScope scope(prec);
    const Real tol = ldexp(Real(1), -128);
    std::mt19937_64 rng(2002);
    Outcome o;
    for (const AlphaParam& a : criterion_alphas())
        for (int n = 1; n <= 5; ++n) {
            std::vector<Poly2> ps;
            for (int i = 0; i < 20; ++i)
                ps.push_back(test_support::random_poly(n, rng));
            for (const MultiIndex& t : canonical_indices(n)) {
                const AnnihilatorData r = annihilator(t.j, t.k, n, a, prec);
                const double beta_floor = beta_log_lower(t.j, t.k, n, a);
                const double beta_log = log(abs(r.beta)).to_double();
                o.check(beta_log >= beta_floor, [&] {
                    return "ln|beta| " + num(beta_log) + " < " + num(beta_floor) + " at " + where(n, a) +
                           ", target (" + std::to_string(t.j) + "," + std::to_string(t.k) + ")";
                });
                for (const Poly2& p : ps) {
                    const Complex expected = p(t.j, t.k) * r.beta;
                    const Real err = abs(apply_annihilator(r, compose_to_expsum(p, a)) - expected);
                    o.check(err <= tol * abs(expected), [&] {
                        return "annihilator error " + num(err.to_double()) + " at " + where(n, a) + ", target (" +
                               std::to_string(t.j) + "," + std::to_string(t.k) + ")";
                    });
                }
            }
        }
    return o;
}

Outcome inequalities()
{
    Outcome o;
    const InequalityReport lib = numeric_inequality_suite(10000);
    o.check(lib.ok(), [&] {
        return "library scan: " + lib.first_violation->name + " at n=" + std::to_string(lib.first_violation->n);
    });
    // Independent scan in long double.
    long double kk = 0.0L;
    for (int n = 1; n <= 10000; ++n) {
        const long double nd = n;
        const long double big_n = (nd * nd + 3 * nd) / 2;
        const long double ln_n = std::log(nd);
        kk += nd * ln_n;
        const long double tol = 1e-9L * (1 + nd * nd * (1 + ln_n));
        o.check(big_n * std::log(big_n + nd) <= nd * nd * ln_n + 3.7L * nd * nd + tol,
                [&] { return "vieta inequality at n=" + std::to_string(n); });
        o.check(std::log(big_n + 1) <= 2 * nd * nd, [&] { return "dimension inequality at n=" + std::to_string(n); });
        o.check(big_n * std::log(big_n / nd) - big_n >= nd * nd * ln_n / 2 - nd * nd - tol,
                [&] { return "floor inequality at n=" + std::to_string(n); });
        o.check(kk >= nd * nd * ln_n / 2 - nd * nd / 4 - tol, [&] {
            return "k ln k sum " + num(static_cast<double>(kk)) + " below " +
                   num(static_cast<double>(nd * nd * ln_n / 2 - nd * nd / 4)) + " at n=" + std::to_string(n);
        });
    }
    return o;
}

Outcome witness_order()
{
    Outcome o;
    for (const AlphaParam& a : criterion_alphas())
        for (int n = 1; n <= 8; ++n) {
            const WitnessResult w = build_witness(n, a, Precision{512});
            const double res = w.max_residual.to_double();
            o.check(w.bits >= 512 && res <= 1e-30,
                    [&] { return "residual " + num(res) + " at " + where(n, a); });
            for (double r : {1.5, 2.0, static_cast<double>(w.big_n) / n}) {
                const double gap = growth_law_gap(w, a, r);
                o.check(gap >= -1e-6,
                        [&] { return "growth deficit " + num(gap) + " at r=" + num(r) + ", " + where(n, a); });
            }
        }
    return o;
}

Outcome solver_coherence()
{
    Outcome o;
    const AlphaParam a = make_alpha(0.0, 0.5);
    SweepOptions opts;
    opts.mode = SweepMode::full;
    opts.trials = 1000;
    opts.seed = 0;
    const auto rows = run_sweep({1, 2, 3}, {a}, opts);
    for (const BoundsReport& r : rows) {
        o.check(r.error.empty() && r.oracle_lower && r.lp_estimate, [&] { return "row failed: " + r.error; });
        if (!o.pass)
            return o;
        o.check(*r.oracle_lower <= *r.lp_estimate + kCrossEstimatorSlack, [&] {
            return "oracle " + num(*r.oracle_lower) + " above lp " + num(*r.lp_estimate) + " at " + where(r.n, a);
        });
        LPConfig doubled = opts.cfg;
        doubled.circle_points *= 2;
        const double lp2 = en_lp_estimate(r.n, a, doubled);
        o.check(lp2 <= *r.lp_estimate + 1e-6, [&] {
            return "doubling circle_points raised lp from " + num(*r.lp_estimate) + " to " + num(lp2) + " at " +
                   where(r.n, a);
        });
    }
    SweepOptions wide = opts;
    wide.jobs = 8;
    const std::string one = render_csv(rows);
    const std::string eight = render_csv(run_sweep({1, 2, 3}, {a}, wide));
    o.check(one == eight, [] { return std::string("sweep output differs between 1 and 8 jobs"); });
    return o;
}

Outcome envelope()
{
    using cd = std::complex<double>;
    const Precision prec{};
    PrecisionScope scope(prec);
    std::mt19937_64 rng(3003);
    std::uniform_real_distribution<double> radius(0.0, 3.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    Outcome o;
    const auto& alphas = criterion_alphas();
    for (int n = 1; n <= 3; ++n) {
        const auto indices = canonical_indices(n);
        for (int i = 0; i < 1000; ++i) {
            const AlphaParam& a = alphas[static_cast<std::size_t>(i) % alphas.size()];
            const double en_log = theorem2_bounds(n, a).upper;
            const Poly2 p = test_support::random_poly(n, rng);
            const Real kn = *norm_on_K(p, a, 64, prec).certified_upper;
            std::vector<cd> c;
            for (const Complex& x : p.coeffs())
                c.push_back((x / kn).to_std());
            for (int s = 0; s < 1000; ++s) {
                const cd z = std::polar(radius(rng), angle(rng));
                const cd w = std::polar(radius(rng), angle(rng));
                cd value = 0.0;
                for (const MultiIndex& m : indices)
                    value += c[canonical_position(m)] * std::pow(z, m.j) * std::pow(w, m.k);
                const double growth = n * std::max(0.0, std::log(std::max(std::abs(z), std::abs(w))));
                const double lhs = std::log(std::abs(value));
                o.check(!(lhs > en_log + growth), [&] {
                    return "ln|P/||P||_K| = " + num(lhs) + " exceeds " + num(en_log + growth) + " at " + where(n, a);
                });
            }
        }
    }
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "closed-form endpoints to 12 digits", endpoints},
        {2, "witness bound inside the bracket", bracket_consistency},
        {3, "product lemma, 10^4 random cases", lemma_cases},
        {4, "Stirling ratio and half-integer products", stirling_and_half_integers},
        {5, "annihilator identity and beta lower bound", annihilators},
        {6, "closed-form inequalities for n <= 10^4", inequalities},
        {7, "witness vanishing order and growth law", witness_order},
        {8, "solver coherence and sweep determinism", solver_coherence},
        {9, "growth envelope off K", envelope},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s  %-44s %7ld cases  %8.2f s%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title,
                    o.cases, secs, o.pass ? "" : "  -- ", o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
