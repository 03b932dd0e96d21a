// Randomized invariants. Each property draws its cases from a fixed seed so
// failures reproduce; the case index is reported through doctest's INFO.

#include "bwexp/analytic_bounds.hpp"
#include "bwexp/construct.hpp"
#include "bwexp/norms.hpp"
#include "bwexp/report.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bwexp;
using test_support::random_alpha;
using test_support::random_poly;

namespace {

Complex random_point(std::mt19937_64& rng, double radius)
{
    std::uniform_real_distribution<double> u(-radius, radius);
    return Complex(u(rng), u(rng));
}

Poly2 add(const Poly2& a, const Poly2& b)
{
    Poly2 out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        out.coeffs()[i] += b.coeffs()[i];
    return out;
}

}  // namespace

TEST_CASE("composition agrees with direct evaluation")
{
    PrecisionScope scope(Precision{});
    std::mt19937_64 rng(101);
    for (int c = 0; c < 60; ++c) {
        INFO("case " << c);
        const int n = 1 + c % 5;
        const AlphaParam a = random_alpha(rng);
        const Poly2 p = random_poly(n, rng);
        const Complex t = random_point(rng, 1.0);
        const Complex alpha(a.re, a.im);
        const Complex direct = eval_poly(p, exp(t), exp(alpha * t));
        CHECK(approx_equal(eval_expsum(compose_to_expsum(p, a), t), direct, 1e-60));
    }
}

TEST_CASE("composition is linear")
{
    PrecisionScope scope(Precision{});
    std::mt19937_64 rng(202);
    for (int c = 0; c < 40; ++c) {
        INFO("case " << c);
        const int n = 1 + c % 4;
        const AlphaParam a = random_alpha(rng);
        const Poly2 p = random_poly(n, rng), q = random_poly(n, rng);
        const Complex t = random_point(rng, 1.0);
        const Complex lhs = eval_expsum(compose_to_expsum(add(p, q), a), t);
        const Complex rhs = eval_expsum(compose_to_expsum(p, a), t) + eval_expsum(compose_to_expsum(q, a), t);
        CHECK(approx_equal(lhs, rhs, 1e-60));
    }
}

TEST_CASE("analytic bracket is ordered and monotone")
{
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<int> deg(1, 5000);
    for (int c = 0; c < 500; ++c) {
        INFO("case " << c);
        const int n = deg(rng);
        const AlphaParam a = random_alpha(rng);
        const Bracket b = theorem2_bounds(n, a);
        CHECK(b.lower < b.upper);
        CHECK(theorem2_bounds(n + 1, a).lower > b.lower);
        // Shrinking |alpha_2| can only raise the upper bound.
        const AlphaParam flatter = make_alpha(a.re, a.im / 2);
        CHECK(theorem2_bounds(n, flatter).upper > b.upper);
    }
}

TEST_CASE("grid sup is a seminorm")
{
    const Precision p{};
    PrecisionScope scope(p);
    std::mt19937_64 rng(404);
    const Real slack(p.half_tolerance());
    for (int c = 0; c < 20; ++c) {
        INFO("case " << c);
        const int n = 1 + c % 3;
        const AlphaParam a = random_alpha(rng);
        const Poly2 f = random_poly(n, rng), g = random_poly(n, rng);
        const Real nf = norm_on_K(f, a, 64, p).grid_max;
        const Real ng = norm_on_K(g, a, 64, p).grid_max;
        const Real nfg = norm_on_K(add(f, g), a, 64, p).grid_max;
        CHECK(nfg <= (nf + ng) * (Real(1) + slack));
        const Real bf = norm_on_bidisk(f, 16, p).grid_max;
        CHECK(bf <= *norm_on_bidisk(f, 16, p).certified_upper);
        CHECK(bf <= f.l1_norm() * (Real(1) + slack));
    }
}

TEST_CASE("witness annihilates its nodes for random alpha")
{
    std::mt19937_64 rng(505);
    for (int c = 0; c < 12; ++c) {
        INFO("case " << c);
        const int n = 1 + c % 3;
        const AlphaParam a = random_alpha(rng);
        const WitnessResult w = build_witness(n, a);
        PrecisionScope scope(Precision{w.bits});
        const ExpSum f = compose_to_expsum(w.p, a);
        for (int m = 0; m < w.big_n; ++m)
            CHECK(abs(derivative_at_zero(f, static_cast<unsigned>(m))) <= Real(1e-40));
        CHECK_FALSE(derivative_at_zero(f, static_cast<unsigned>(w.big_n)).is_zero());
    }
}

TEST_CASE("report serialization round trips")
{
    std::mt19937_64 rng(606);
    std::normal_distribution<double> normal(0.0, 10.0);
    std::bernoulli_distribution coin(0.5);
    for (int c = 0; c < 200; ++c) {
        INFO("case " << c);
        BoundsReport r;
        r.n = 1 + c % 7;
        r.alpha_re = normal(rng);
        r.alpha_im = normal(rng);
        r.analytic_lower = normal(rng);
        r.analytic_upper = normal(rng);
        if (coin(rng))
            r.witness_lower = normal(rng);
        if (coin(rng))
            r.oracle_lower = normal(rng);
        if (coin(rng))
            r.lp_estimate = normal(rng);
        r.seed = rng();
        r.trials = c;
        CHECK(report_from_json(to_json(r)) == r);

        const auto back = reports_from_csv(csv_header(false) + "\n" + csv_row(r, false) + "\n");
        REQUIRE(back.size() == 1);
        CHECK(back[0].alpha_re == r.alpha_re);
        CHECK(back[0].analytic_upper == r.analytic_upper);
        CHECK(back[0].witness_lower == r.witness_lower);
        CHECK(back[0].oracle_lower == r.oracle_lower);
        CHECK(back[0].lp_estimate == r.lp_estimate);
        CHECK(back[0].seed == r.seed);
    }
}
