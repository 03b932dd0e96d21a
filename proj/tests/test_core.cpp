#include "bwexp/core.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace bwexp;
using test_support::near;

TEST_CASE("precision contract")
{
    CHECK_THROWS_AS(Precision{32}.validate(), std::invalid_argument);
    CHECK_NOTHROW(Precision{64}.validate());
    CHECK(Precision{256}.half_tolerance() == doctest::Approx(std::ldexp(1.0, -128)));
    CHECK(Precision{256}.quarter_tolerance() == doctest::Approx(std::ldexp(1.0, -64)));

    {
        PrecisionScope outer(Precision{128});
        CHECK(current_bits() == 128);
        {
            PrecisionScope inner(Precision{512});
            CHECK(current_bits() == 512);
            CHECK(Real(1).precision() == 512);
        }
        CHECK(current_bits() == 128);
    }
}

TEST_CASE("precision scopes are per thread")
{
    PrecisionScope scope(Precision{320});
    unsigned seen = 0;
    std::thread t([&] {
        PrecisionScope mine(Precision{96});
        seen = current_bits();
    });
    t.join();
    CHECK(seen == 96);
    CHECK(current_bits() == 320);
}

TEST_CASE("make_alpha flags hypotheses without rejecting")
{
    CHECK(make_alpha(0.0, 0.5).theorem_valid);
    CHECK_FALSE(make_alpha(0.3, 0.0).theorem_valid);
    CHECK_FALSE(make_alpha(0.8, 0.7).theorem_valid);  // |alpha|^2 = 1.13

    CHECK_THROWS_WITH_AS(make_alpha(0.3, 0.0).require_theorem_valid(), "alpha_2 must be nonzero", InvalidAlpha);
    CHECK_THROWS_WITH_AS(make_alpha(0.8, 0.7).require_theorem_valid(), "|alpha| must be less than 1", InvalidAlpha);
    CHECK_NOTHROW(make_alpha(2.0, 3.0).require_nonreal());
}

TEST_CASE("dimension counts and canonical order")
{
    CHECK(exponent_count(1) == 2);
    CHECK(exponent_count(2) == 5);
    CHECK(monomial_count(2) == 6);
    CHECK(exponent_count(12) == 90);

    const auto idx = canonical_indices(2);
    REQUIRE(idx.size() == 6);
    const std::vector<MultiIndex> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    CHECK(idx == expected);
    for (std::size_t i = 0; i < idx.size(); ++i)
        CHECK(canonical_position(idx[i]) == i);
}

TEST_CASE("monomial nodes")
{
    PrecisionScope scope(Precision{});
    SUBCASE("n = 1, alpha = 0.5i")
    {
        const auto nodes = monomial_nodes(1, make_alpha(0.0, 0.5));
        REQUIRE(nodes.size() == 3);
        CHECK(nodes[0].index == MultiIndex{0, 0});
        CHECK(nodes[1].index == MultiIndex{1, 0});
        CHECK(nodes[2].index == MultiIndex{0, 1});
        CHECK(near(nodes[0].value, 0.0, 0.0));
        CHECK(near(nodes[1].value, 1.0, 0.0));
        CHECK(near(nodes[2].value, 0.0, 0.5));
    }
    SUBCASE("n = 2 has N + 1 = 6 nodes")
    {
        CHECK(monomial_nodes(2, make_alpha(0.0, 0.5)).size() == 6);
    }
    SUBCASE("n = 1, alpha = 0.3+0.4i")
    {
        const auto nodes = monomial_nodes(1, make_alpha(0.3, 0.4));
        CHECK(near(nodes[2].value, 0.3, 0.4));
        CHECK_FALSE(approx_equal(nodes[0].value, nodes[2].value, 1e-12));
        CHECK_FALSE(approx_equal(nodes[1].value, nodes[2].value, 1e-12));
    }
    SUBCASE("node value is j + alpha k")
    {
        const AlphaParam a = make_alpha(-0.2, 0.6);
        for (const auto& node : monomial_nodes(4, a))
            CHECK(near(node.value, node.index.j + a.re * node.index.k, a.im * node.index.k));
    }
    CHECK_THROWS_AS(monomial_nodes(0, make_alpha(0.0, 0.5)), std::invalid_argument);
}

TEST_CASE("Poly2 storage")
{
    PrecisionScope scope(Precision{});
    Poly2 p(2);
    CHECK(p.size() == 6);
    CHECK(p.is_zero());
    p(2, 0) = Complex(3.0);
    p(0, 1) = Complex(0.0, -4.0);
    CHECK(p.at(3).re.to_double() == 3.0);
    CHECK(p.max_abs_coeff().to_double() == 4.0);
    CHECK(p.l1_norm().to_double() == 7.0);
    CHECK_THROWS_AS(p(2, 1), std::out_of_range);
    CHECK_THROWS_AS(Poly2(2, std::vector<Complex>(5)), std::invalid_argument);
}

TEST_CASE("compose_to_expsum")
{
    PrecisionScope scope(Precision{});
    SUBCASE("z + w")
    {
        Poly2 p(1);
        p(1, 0) = Complex(1);
        p(0, 1) = Complex(1);
        const ExpSum f = compose_to_expsum(p, make_alpha(0.0, 0.5));
        REQUIRE(f.size() == 2);
        CHECK(near(f.terms()[0].exponent, 1.0, 0.0));
        CHECK(near(f.terms()[1].exponent, 0.0, 0.5));
        CHECK(near(f.terms()[1].coeff, 1.0, 0.0));
    }
    SUBCASE("constant")
    {
        Poly2 p(1);
        p(0, 0) = Complex(1);
        const ExpSum f = compose_to_expsum(p, make_alpha(0.0, 0.5));
        REQUIRE(f.size() == 1);
        CHECK(f.terms()[0].exponent.is_zero());
    }
    SUBCASE("z w at alpha = 0.3+0.4i")
    {
        Poly2 p(2);
        p(1, 1) = Complex(1);
        const ExpSum f = compose_to_expsum(p, make_alpha(0.3, 0.4));
        REQUIRE(f.size() == 1);
        CHECK(near(f.terms()[0].exponent, 1.3, 0.4));
    }
    SUBCASE("real alpha merges equal exponents")
    {
        Poly2 p(2);
        p(2, 0) = Complex(1);  // exponent 2
        p(0, 1) = Complex(2);  // exponent 2 when alpha = 2
        p(0, 0) = Complex(5);
        const ExpSum f = compose_to_expsum(p, make_alpha(2.0, 0.0));
        REQUIRE(f.size() == 2);
        CHECK(near(f.terms()[1].coeff, 3.0, 0.0));
    }
}

TEST_CASE("eval_poly")
{
    PrecisionScope scope(Precision{});
    Poly2 sum(1);
    sum(1, 0) = Complex(1);
    sum(0, 1) = Complex(1);
    CHECK(near(eval_poly(sum, Complex(1), Complex(0.0, 1.0)), 1.0, 1.0));

    Poly2 p(3);
    p(2, 1) = Complex(1);
    CHECK(near(eval_poly(p, Complex(2), Complex(3)), 12.0, 0.0));

    std::mt19937_64 rng(7);
    const Poly2 r = test_support::random_poly(3, rng);
    const Complex at0 = eval_poly(r, Complex(0), Complex(0));
    CHECK(near(at0, r.at(0).re.to_double(), r.at(0).im.to_double()));
}

TEST_CASE("eval_expsum")
{
    PrecisionScope scope(Precision{});
    ExpSum one;
    one.add_term(Complex(1), Complex(0));
    CHECK(near(eval_expsum(one, Complex(0.3, -2.0)), 1.0, 0.0));

    ExpSum e;
    e.add_term(Complex(1), Complex(1));
    CHECK(near(eval_expsum(e, Complex(1)), 2.718281828459045, 0.0));

    Poly2 p(1);
    p(1, 0) = Complex(1);
    p(0, 1) = Complex(1);
    const AlphaParam a = make_alpha(0.0, 0.5);
    CHECK(near(eval_expsum(compose_to_expsum(p, a), Complex(0)), 2.0, 0.0));
    CHECK(near(eval_poly(p, Complex(1), Complex(1)), 2.0, 0.0));
}

TEST_CASE("derivative_at_zero")
{
    PrecisionScope scope(Precision{});
    ExpSum e;
    e.add_term(Complex(1), Complex(1));
    CHECK(near(derivative_at_zero(e, 3), 1.0, 0.0));

    ExpSum w;
    w.add_term(Complex(1), Complex(0.0, 0.5));
    CHECK(near(derivative_at_zero(w, 2), -0.25, 0.0));

    ExpSum cancel;
    cancel.add_term(Complex(1), Complex(0));
    cancel.add_term(Complex(-1), Complex(0));
    for (unsigned m = 0; m < 5; ++m)
        CHECK(derivative_at_zero(cancel, m).is_zero());
}

TEST_CASE("approx_equal is relative")
{
    PrecisionScope scope(Precision{});
    CHECK(approx_equal(Complex(1e6), Complex(1e6 + 1e-4), 1e-9));
    CHECK_FALSE(approx_equal(Complex(1.0), Complex(1.001), 1e-9));
    CHECK(approx_equal(Complex(0.0), Complex(1e-12), 1e-9));
}
