#include "bwexp/core.hpp"

#include <cmath>

namespace bwexp {

void AlphaParam::require_nonreal() const
{
    if (im == 0.0)
        throw InvalidAlpha("alpha_2 must be nonzero");
}

void AlphaParam::require_theorem_valid() const
{
    require_nonreal();
    if (!(re * re + im * im < 1.0))
        throw InvalidAlpha("|alpha| must be less than 1");
}

AlphaParam make_alpha(double re, double im)
{
    AlphaParam a;
    a.re = re;
    a.im = im;
    a.theorem_valid = im != 0.0 && re * re + im * im < 1.0;
    return a;
}

std::vector<MultiIndex> canonical_indices(int n)
{
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(monomial_count(n)));
    for (int d = 0; d <= n; ++d)
        for (int j = d; j >= 0; --j)
            out.push_back({j, d - j});
    return out;
}

Poly2::Poly2(int degree) : degree_(degree)
{
    if (degree < 0)
        throw std::invalid_argument("polynomial degree must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(monomial_count(degree)));
}

Poly2::Poly2(int degree, std::vector<Complex> coeffs) : degree_(degree), coeffs_(std::move(coeffs))
{
    if (degree < 0)
        throw std::invalid_argument("polynomial degree must be nonnegative");
    if (coeffs_.size() != static_cast<std::size_t>(monomial_count(degree)))
        throw std::invalid_argument("coefficient count must equal N + 1 = " + std::to_string(monomial_count(degree)));
}

std::size_t Poly2::position_checked(int j, int k) const
{
    if (j < 0 || k < 0 || j + k > degree_)
        throw std::out_of_range("monomial z^" + std::to_string(j) + " w^" + std::to_string(k) +
                                " exceeds degree " + std::to_string(degree_));
    return canonical_position({j, k});
}

const Complex& Poly2::operator()(int j, int k) const { return coeffs_[position_checked(j, k)]; }

Complex& Poly2::operator()(int j, int k) { return coeffs_[position_checked(j, k)]; }

bool Poly2::is_zero() const
{
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

Real Poly2::max_abs_coeff() const
{
    Real best(0);
    for (const auto& c : coeffs_) {
        Real a = abs(c);
        if (a > best)
            best = std::move(a);
    }
    return best;
}

Real Poly2::l1_norm() const
{
    Real s(0);
    for (const auto& c : coeffs_)
        s += abs(c);
    return s;
}

Poly2 Poly2::scaled(const Complex& s) const
{
    Poly2 out(degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i] * s;
    return out;
}

std::vector<ExponentNode> monomial_nodes(int n, const AlphaParam& alpha)
{
    if (n < 1)
        throw std::invalid_argument("degree n must be at least 1");
    const Complex a = alpha.value();
    std::vector<ExponentNode> nodes;
    nodes.reserve(static_cast<std::size_t>(monomial_count(n)));
    for (const MultiIndex& m : canonical_indices(n))
        nodes.push_back({m, Complex(Real(m.j)) + Real(m.k) * a});
    return nodes;
}

bool approx_equal(const Complex& a, const Complex& b, double tol)
{
    Real scale = abs(a);
    Real bb = abs(b);
    if (bb > scale)
        scale = bb;
    if (scale < Real(1))
        scale = Real(1);
    return abs(a - b) <= Real(tol) * scale;
}

void ExpSum::add_term(Complex coeff, Complex exponent)
{
    const double tol = Precision{current_bits()}.half_tolerance();
    for (auto& t : terms_) {
        if (approx_equal(t.exponent, exponent, tol)) {
            t.coeff += coeff;
            return;
        }
    }
    terms_.push_back({std::move(coeff), std::move(exponent)});
}

Real ExpSum::max_abs_exponent() const
{
    Real best(0);
    for (const auto& t : terms_) {
        Real a = abs(t.exponent);
        if (a > best)
            best = std::move(a);
    }
    return best;
}

ExpSum compose_to_expsum(const Poly2& p, const AlphaParam& alpha)
{
    const Complex a = alpha.value();
    ExpSum f;
    const auto indices = canonical_indices(p.degree());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const Complex& c = p.at(i);
        if (c.is_zero())
            continue;
        f.add_term(c, Complex(Real(indices[i].j)) + Real(indices[i].k) * a);
    }
    return f;
}

Complex eval_poly(const Poly2& p, const Complex& z, const Complex& w)
{
    const int n = p.degree();
    std::vector<Complex> zp(static_cast<std::size_t>(n) + 1), wp(static_cast<std::size_t>(n) + 1);
    zp[0] = Complex(1);
    wp[0] = Complex(1);
    for (int i = 1; i <= n; ++i) {
        zp[i] = zp[i - 1] * z;
        wp[i] = wp[i - 1] * w;
    }
    Complex sum;
    for (const MultiIndex& m : canonical_indices(n)) {
        const Complex& c = p.at(canonical_position(m));
        if (!c.is_zero())
            sum += c * (zp[m.j] * wp[m.k]);
    }
    return sum;
}

Complex eval_expsum(const ExpSum& f, const Complex& t)
{
    Complex sum;
    for (const auto& term : f.terms())
        sum += term.coeff * exp(term.exponent * t);
    return sum;
}

Complex derivative_at_zero(const ExpSum& f, unsigned m)
{
    Complex sum;
    for (const auto& term : f.terms())
        sum += term.coeff * pow(term.exponent, m);
    return sum;
}

}  // namespace bwexp
