#include "bwexp/construct.hpp"

#include <algorithm>
#include <cmath>

namespace bwexp {

std::vector<Complex> divided_difference_weights(std::span<const Complex> nodes, Precision prec)
{
    if (nodes.size() < 2)
        throw std::invalid_argument("divided difference needs at least two nodes");
    PrecisionScope scope(prec);

    Real scale(1);
    for (const auto& a : nodes) {
        Real m = abs(a);
        if (m > scale)
            scale = std::move(m);
    }
    const Real min_gap = Real(prec.half_tolerance()) * scale;

    std::vector<Complex> weights;
    weights.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Complex denom(1);
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i)
                continue;
            Complex diff = nodes[i] - nodes[j];
            if (abs(diff) <= min_gap)
                throw DuplicateNodes("exponent nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                     " coincide (alpha_2 = 0 or degenerate input)");
            denom *= diff;
        }
        weights.push_back(Complex(1) / denom);
    }
    return weights;
}

unsigned witness_min_bits(int n)
{
    const double big_n = exponent_count(n);
    return 64u + static_cast<unsigned>(std::ceil(big_n * std::log2(static_cast<double>(n) + 2.0)));
}

WitnessResult build_witness(int n, const AlphaParam& alpha, Precision prec)
{
    if (n < 1)
        throw std::invalid_argument("degree n must be at least 1");
    alpha.require_nonreal();
    prec.validate();
    const Precision work{std::max(prec.bits, witness_min_bits(n))};
    PrecisionScope scope(work);

    const auto nodes = monomial_nodes(n, alpha);
    std::vector<Complex> values;
    values.reserve(nodes.size());
    for (const auto& node : nodes)
        values.push_back(node.value);

    std::vector<Complex> weights = divided_difference_weights(values, work);

    Poly2 p(n, weights);
    const Real max_c = p.max_abs_coeff();
    Real max_a(1);
    for (const auto& a : values)
        if (abs(a) > max_a)
            max_a = abs(a);

    // Residuals of the power-sum system, measured before normalization.
    const int big_n = exponent_count(n);
    Real worst(0);
    std::vector<Complex> powers(values.size(), Complex(1));
    Real scale_power(1);
    for (int m = 0; m < big_n; ++m) {
        Complex s;
        for (std::size_t i = 0; i < values.size(); ++i)
            s += weights[i] * powers[i];
        Real rel = abs(s) / (max_c * scale_power);
        if (rel > worst)
            worst = std::move(rel);
        for (std::size_t i = 0; i < values.size(); ++i)
            powers[i] *= values[i];
        scale_power *= max_a;
    }
    Complex leading;
    for (std::size_t i = 0; i < values.size(); ++i)
        leading += weights[i] * powers[i];

    if (worst > Real(work.quarter_tolerance()))
        throw PrecisionTooLow("witness residual " + worst.to_string(6) + " exceeds 2^(-bits/4) at " +
                              std::to_string(work.bits) + " bits");

    const Real inv = Real(1) / max_c;
    WitnessResult out{p.scaled(Complex(inv)), n, big_n, std::move(worst),
                      static_cast<double>(big_n) / static_cast<double>(n), work.bits, inv * leading};
    return out;
}

double witness_lower_bound(const WitnessResult& w, const AlphaParam&, double r, const NormEstimate& norm_k,
                           const NormEstimate& circle_sup)
{
    if (!(r >= 1.0))
        throw std::invalid_argument("witness radius r must be at least 1");
    if (!norm_k.certified_upper)
        throw std::invalid_argument("witness bound needs a certified upper bound on the K-norm");
    PrecisionScope scope(Precision{w.bits});
    const Real value = log(circle_sup.grid_max) - log(*norm_k.certified_upper) - Real(w.n) * Real(r);
    return value.to_double();
}

double proof_lower_bound(int n)
{
    if (n < 1)
        throw std::invalid_argument("degree n must be at least 1");
    const double big_n = exponent_count(n);
    return big_n * std::log(big_n / static_cast<double>(n)) - big_n;
}

double growth_law_gap(const WitnessResult& w, const AlphaParam& alpha, double r, int grid)
{
    if (!(r > 0.0))
        throw std::invalid_argument("growth law radius must be positive");
    const Precision work{w.bits};
    PrecisionScope scope(work);
    const ExpSum f = compose_to_expsum(w.p, alpha);
    const NormEstimate outer = norm_on_circle(f, Real(r), grid, work);
    const NormEstimate inner = norm_on_circle(f, Real(1), grid, work);
    const Real gap = log(outer.grid_max) - log(*inner.certified_upper) - Real(w.big_n) * log(Real(r));
    return gap.to_double();
}

WitnessCertificate certify_witness(int n, const AlphaParam& alpha, double r, int grid, Precision prec)
{
    WitnessResult w = build_witness(n, alpha, prec);
    if (r > 0.0)
        w.r = r;
    const Precision work{w.bits};
    PrecisionScope scope(work);
    NormEstimate k = norm_on_K(w.p, alpha, grid, work);
    NormEstimate c = norm_on_circle(compose_to_expsum(w.p, alpha), Real(w.r), grid, work);
    const double bound = witness_lower_bound(w, alpha, w.r, k, c);
    return {std::move(w), std::move(k), std::move(c), bound};
}

}  // namespace bwexp
