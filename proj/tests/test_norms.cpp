#include "bwexp/analytic_bounds.hpp"
#include "bwexp/norms.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bwexp;
using doctest::Approx;

namespace {

Poly2 monomial(int n, int j, int k)
{
    Poly2 p(n);
    p(j, k) = Complex(1);
    return p;
}

}  // namespace

TEST_CASE("norm_on_K known values")
{
    const Precision p{};
    PrecisionScope scope(p);
    const AlphaParam a = make_alpha(0.0, 0.5);

    const NormEstimate z = norm_on_K(monomial(1, 1, 0), make_alpha(0.3, 0.4), 512, p);
    CHECK(std::abs(z.grid_max.to_double() - std::exp(1.0)) <= 1e-3);
    CHECK(z.method == NormMethod::curve_k);
    CHECK(z.grid_points == 512);

    const NormEstimate w = norm_on_K(monomial(1, 0, 1), a, 1024, p);
    CHECK(w.grid_max.to_double() == Approx(oracle::kNormW_a05).epsilon(1e-6));
    CHECK(*w.certified_upper >= w.grid_max);

    const NormEstimate one = norm_on_K(monomial(1, 0, 0), a, 1024, p);
    CHECK(one.grid_max.to_double() == 1.0);
    CHECK(one.certified_upper->to_double() == 1.0);
}

TEST_CASE("norm_on_circle")
{
    const Precision p{};
    PrecisionScope scope(p);
    ExpSum e;
    e.add_term(Complex(1), Complex(1));
    const NormEstimate s = norm_on_circle(e, Real(2), 512, p);
    CHECK(s.grid_max.to_double() == Approx(std::exp(2.0)).epsilon(1e-12));
    CHECK(*s.certified_upper >= s.grid_max);

    ExpSum c;
    c.add_term(Complex(1), Complex(0));
    CHECK(norm_on_circle(c, Real(5), 64, p).grid_max.to_double() == 1.0);
    CHECK_THROWS_AS(norm_on_circle(e, Real(-1), 64, p), std::invalid_argument);
    CHECK_THROWS_AS(norm_on_circle(e, Real(1), 4, p), std::invalid_argument);
}

TEST_CASE("norm_on_bidisk")
{
    const Precision p{};
    PrecisionScope scope(p);
    Poly2 sum(1);
    sum(1, 0) = Complex(1);
    sum(0, 1) = Complex(1);
    const NormEstimate s = norm_on_bidisk(sum, 256, p);
    CHECK(s.grid_max.to_double() == Approx(2.0).epsilon(1e-14));
    CHECK(s.certified_upper->to_double() == Approx(2.0).epsilon(1e-14));

    CHECK(norm_on_bidisk(monomial(2, 1, 1), 64, p).grid_max.to_double() == Approx(1.0).epsilon(1e-14));

    Poly2 corners(2);
    corners(0, 0) = corners(1, 0) = corners(0, 1) = corners(1, 1) = Complex(1);
    const NormEstimate c = norm_on_bidisk(corners, 64, p);
    CHECK(c.grid_max.to_double() == Approx(4.0).epsilon(1e-14));
    CHECK(c.certified_upper->to_double() == Approx(4.0).epsilon(1e-14));
}

TEST_CASE("one-sidedness, refinement and homogeneity")
{
    const Precision p{};
    PrecisionScope scope(p);
    std::mt19937_64 rng(11);
    const Real tol(p.half_tolerance());
    for (int i = 0; i < 12; ++i) {
        const int n = 1 + i % 4;
        const AlphaParam a = test_support::random_alpha(rng);
        const Poly2 poly = test_support::random_poly(n, rng);

        NormEstimate prev = norm_on_K(poly, a, 32, p);
        for (int m = 64; m <= 512; m *= 2) {
            const NormEstimate cur = norm_on_K(poly, a, m, p);
            CHECK(cur.grid_max <= *cur.certified_upper);
            CHECK(cur.grid_max >= prev.grid_max * (Real(1) - tol));
            CHECK(*cur.certified_upper <= *prev.certified_upper * (Real(1) + tol));
            prev = cur;
        }

        const Complex s(Real(-2.5), Real(0.75));
        const Real factor = abs(s);
        const NormEstimate base = norm_on_K(poly, a, 128, p);
        const NormEstimate scaled = norm_on_K(poly.scaled(s), a, 128, p);
        CHECK(abs(scaled.grid_max - factor * base.grid_max) <= tol * factor * base.grid_max * Real(16));

        const NormEstimate bd = norm_on_bidisk(poly, 32, p);
        CHECK(bd.grid_max <= *bd.certified_upper);
    }
}

TEST_CASE("derivative bound dominates sampled derivatives")
{
    const Precision p{};
    PrecisionScope scope(p);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 6; ++i) {
        const AlphaParam a = test_support::random_alpha(rng);
        const ExpSum f = compose_to_expsum(test_support::random_poly(2, rng), a);
        const Real bound = derivative_bound(f, Real(1));
        for (int s = 0; s < 64; ++s) {
            const Complex t = polar(Real(1), Real(2 * 3.14159265358979 * s / 64));
            Complex d;
            for (const auto& term : f.terms())
                d += term.coeff * term.exponent * exp(term.exponent * t);
            CHECK(abs(d) <= bound);
        }
    }
}

TEST_CASE("Bernstein-Walsh envelope")
{
    const Precision p{};
    PrecisionScope scope(p);
    CHECK(bw_envelope(Complex(0.5), Complex(0.0, 0.9), Real(2), Real(3), 4).to_double() ==
          Approx(6.0).epsilon(1e-15));
    const double e = std::exp(1.0);
    CHECK(bw_envelope(Complex(e), Complex(0.0, 1.0), Real(2), Real(3), 1).to_double() ==
          Approx(6.0 * e).epsilon(1e-14));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coord(-2.1, 2.1);
    const AlphaParam a = make_alpha(0.3, 0.4);
    for (int n = 1; n <= 3; ++n) {
        const Real en = exp(Real(theorem2_bounds(n, a).upper));
        for (int i = 0; i < 5; ++i) {
            const Poly2 poly = test_support::random_poly(n, rng);
            const Real kn = *norm_on_K(poly, a, 128, p).certified_upper;
            for (int s = 0; s < 50; ++s) {
                const Complex z(coord(rng), coord(rng));
                const Complex w(coord(rng), coord(rng));
                CHECK(abs(eval_poly(poly, z, w)) <= bw_envelope(z, w, kn, en, n));
            }
        }
    }
}
