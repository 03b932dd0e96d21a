#pragma once

#include "bwexp/real.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bwexp {

/// Raised when an operation needs the curve parameter to satisfy a hypothesis
/// it does not satisfy (alpha_2 = 0, |alpha| >= 1).
class InvalidAlpha : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Curve parameter alpha = re + i*im of K = {(e^z, e^{alpha z}) : |z| <= 1}.
struct AlphaParam {
    double re = 0.0;
    double im = 0.0;
    /// |alpha| < 1 and im != 0.
    bool theorem_valid = false;

    Complex value() const { return {Real(re), Real(im)}; }

    /// Throws InvalidAlpha naming the first violated hypothesis.
    void require_theorem_valid() const;
    /// Throws InvalidAlpha when im == 0.
    void require_nonreal() const;
};

/// Never rejects; validity is reported through the flag.
AlphaParam make_alpha(double re, double im);

/// Exponents of the monomial z^j w^k.
struct MultiIndex {
    int j = 0;
    int k = 0;

    constexpr int degree() const { return j + k; }
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// N = (n^2 + 3n)/2; the space of bivariate polynomials of degree <= n has
/// dimension N + 1.
constexpr int exponent_count(int n) { return (n * n + 3 * n) / 2; }
constexpr int monomial_count(int n) { return exponent_count(n) + 1; }

/// Position of z^j w^k in the canonical order: total degree ascending, then
/// j descending. For n = 1 the order is 1, z, w.
constexpr std::size_t canonical_position(MultiIndex m)
{
    const int d = m.degree();
    return static_cast<std::size_t>(d * (d + 1) / 2 + m.k);
}

/// All multi-indices with j + k <= n in canonical order.
std::vector<MultiIndex> canonical_indices(int n);

/// Bivariate polynomial of total degree <= n, dense in canonical order.
class Poly2 {
public:
    explicit Poly2(int degree);
    Poly2(int degree, std::vector<Complex> coeffs);

    int degree() const { return degree_; }
    std::size_t size() const { return coeffs_.size(); }

    const Complex& operator()(int j, int k) const;
    Complex& operator()(int j, int k);
    const Complex& at(std::size_t canonical) const { return coeffs_.at(canonical); }

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    std::vector<Complex>& coeffs() { return coeffs_; }

    bool is_zero() const;
    Real max_abs_coeff() const;
    /// Sum of coefficient moduli.
    Real l1_norm() const;
    Poly2 scaled(const Complex& s) const;

private:
    std::size_t position_checked(int j, int k) const;

    int degree_;
    std::vector<Complex> coeffs_;
};

/// Exponent j + alpha*k attached to z^j w^k under composition with the curve.
struct ExponentNode {
    MultiIndex index;
    Complex value;
};

/// Exactly N + 1 nodes in canonical order. Requires n >= 1.
std::vector<ExponentNode> monomial_nodes(int n, const AlphaParam& alpha);

/// Finite exponential sum f(t) = sum c * e^{a t}.
class ExpSum {
public:
    struct Term {
        Complex coeff;
        Complex exponent;
    };

    ExpSum() = default;

    /// Adds c * e^{a t}; merges into an existing term whose exponent agrees
    /// within relative tolerance 2^(-bits/2).
    void add_term(Complex coeff, Complex exponent);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// max |a| over the terms (0 when empty).
    Real max_abs_exponent() const;

private:
    std::vector<Term> terms_;
};

/// f(t) = P(e^t, e^{alpha t}); one term per nonzero coefficient.
ExpSum compose_to_expsum(const Poly2& p, const AlphaParam& alpha);

Complex eval_poly(const Poly2& p, const Complex& z, const Complex& w);

Complex eval_expsum(const ExpSum& f, const Complex& t);

/// f^{(m)}(0) = sum c * a^m.
Complex derivative_at_zero(const ExpSum& f, unsigned m);

/// Relative closeness |a - b| <= tol * max(1, |a|, |b|).
bool approx_equal(const Complex& a, const Complex& b, double tol);

}  // namespace bwexp
