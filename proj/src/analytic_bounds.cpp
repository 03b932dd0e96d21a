#include "bwexp/analytic_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace bwexp {

namespace {

void require_degree(int n)
{
    if (n < 1)
        throw std::invalid_argument("degree n must be at least 1");
}

void require_target(int l, int m, int n)
{
    require_degree(n);
    if (l < 0 || m < 0 || l + m > n)
        throw std::out_of_range("target (" + std::to_string(l) + "," + std::to_string(m) +
                                ") is not a monomial of degree <= " + std::to_string(n));
}

double half_n2_log_n(int n)
{
    const double nn = static_cast<double>(n);
    return 0.5 * nn * nn * std::log(nn);
}

}  // namespace

Bracket theorem2_bounds(int n, const AlphaParam& alpha, const ProofConstants& k)
{
    require_degree(n);
    alpha.require_theorem_valid();
    const double nn = static_cast<double>(n);
    const double head = half_n2_log_n(n);
    return {head - nn * nn, head + k.theorem_slack * nn * nn - nn * std::log(std::abs(alpha.im))};
}

long nearest_integer(double x) { return static_cast<long>(std::floor(x + 0.5)); }

LemmaCase classify_lemma_case(long x, long y, long k, const AlphaParam& alpha)
{
    if (x > y)
        throw std::invalid_argument("lemma range requires x <= y");
    if (k < 1)
        throw std::invalid_argument("lemma requires k >= 1");
    const long j0 = nearest_integer(static_cast<double>(k) * alpha.re);
    return {k, x, y, alpha, j0, (j0 < x || j0 > y) ? LemmaSide::outside : LemmaSide::inside};
}

Real lemma_product_exact(long x, long y, long k, const AlphaParam& alpha, Precision prec)
{
    if (x > y)
        throw std::invalid_argument("lemma range requires x <= y");
    PrecisionScope scope(prec);
    const Complex ka = Real(k) * alpha.value();
    Real prod(1);
    for (long j = x; j <= y; ++j)
        prod *= abs(Complex(Real(j)) - ka);
    return prod;
}

Real lemma_product_lower(long x, long y, long k, const AlphaParam& alpha, Precision prec)
{
    const LemmaCase c = classify_lemma_case(x, y, k, alpha);
    alpha.require_nonreal();
    PrecisionScope scope(prec);
    const long d = y - x;
    Real bound(1);
    if (d > 0)
        bound = pow(Real(d) / (Real(2) * euler_e()), d);
    if (c.side == LemmaSide::inside)
        bound *= abs(Real(k) * Real(alpha.im));
    return bound;
}

Real stirling_ratio(unsigned long m, Precision prec)
{
    if (m < 1)
        throw std::invalid_argument("stirling_ratio requires m >= 1");
    PrecisionScope scope(prec);
    const Real mm(m);
    return factorial(m) / (pow(mm / euler_e(), static_cast<long>(m)) * sqrt(mm));
}

Real half_integer_product(unsigned long m, Precision prec)
{
    if (m < 1)
        throw std::invalid_argument("half_integer_product requires m >= 1");
    PrecisionScope scope(prec);
    Real prod(1);
    const Real half(0.5);
    for (unsigned long j = 1; j <= m; ++j)
        prod *= Real(j) - half;
    return prod;
}

Complex AnnihilatorData::evaluate(const Complex& lambda) const
{
    Complex acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * lambda + *it;
    return acc;
}

Real AnnihilatorData::majorant_sum() const
{
    const Real big_n(static_cast<long>(coeffs.size()) - 1);
    Real power(1);
    Real sum(0);
    for (const auto& a : coeffs) {
        sum += abs(a) * power;
        power *= big_n;
    }
    return sum;
}

AnnihilatorData annihilator(int l, int m, int n, const AlphaParam& alpha, Precision prec)
{
    require_target(l, m, n);
    alpha.require_nonreal();
    PrecisionScope scope(prec);

    AnnihilatorData out;
    out.target = {l, m};
    out.degree = exponent_count(n);
    out.coeffs.reserve(static_cast<std::size_t>(out.degree) + 1);
    out.coeffs.emplace_back(1);
    out.beta = Complex(1);

    const auto nodes = monomial_nodes(n, alpha);
    const Complex& target = nodes[canonical_position(out.target)].value;
    for (const auto& node : nodes) {
        if (node.index == out.target)
            continue;
        // Multiply the running polynomial by (lambda - node).
        std::vector<Complex> next(out.coeffs.size() + 1);
        for (std::size_t t = 0; t < out.coeffs.size(); ++t) {
            next[t + 1] += out.coeffs[t];
            next[t] -= node.value * out.coeffs[t];
        }
        out.coeffs = std::move(next);
        out.beta *= target - node.value;
    }
    return out;
}

Complex apply_annihilator(const AnnihilatorData& r, const ExpSum& f)
{
    // f^{(t)}(0) for t = 0..N, accumulated with running powers of each exponent.
    std::vector<Complex> derivs(r.coeffs.size());
    for (const auto& term : f.terms()) {
        Complex power(1);
        for (std::size_t t = 0; t < derivs.size(); ++t) {
            derivs[t] += term.coeff * power;
            power *= term.exponent;
        }
    }
    Complex sum;
    for (std::size_t t = 0; t < derivs.size(); ++t)
        sum += r.coeffs[t] * derivs[t];
    return sum;
}

double beta_log_lower(int l, int m, int n, const AlphaParam& alpha, const ProofConstants& k)
{
    require_target(l, m, n);
    alpha.require_theorem_valid();
    const double nn = static_cast<double>(n);
    return half_n2_log_n(n) - k.beta_slack * nn * nn + nn * std::log(std::abs(alpha.im));
}

std::pair<Real, Real> a1_a2_products(int l, int m, int n, const AlphaParam& alpha, Precision prec)
{
    require_target(l, m, n);
    PrecisionScope scope(prec);
    const Complex a = alpha.value();
    Real a1(1), a2(1);
    for (long k = 1; k <= m; ++k) {
        const Complex ka = Real(k) * a;
        for (long j = -l; j <= n - l - m + k; ++j)
            a1 *= abs(Complex(Real(j)) - ka);
    }
    for (long k = 1; k <= n - m; ++k) {
        const Complex ka = Real(k) * a;
        for (long j = l + m + k - n; j <= l; ++j)
            a2 *= abs(Complex(Real(j)) - ka);
    }
    return {std::move(a1), std::move(a2)};
}

Real vieta_majorant(int n, Precision prec)
{
    require_degree(n);
    PrecisionScope scope(prec);
    const long big_n = exponent_count(n);
    return pow(Real(big_n + n), big_n);
}

double coeff_log_upper(int n, const AlphaParam& alpha, const ProofConstants& k)
{
    require_degree(n);
    alpha.require_theorem_valid();
    const double nn = static_cast<double>(n);
    return half_n2_log_n(n) + k.coeff_slack * nn * nn - nn * std::log(std::abs(alpha.im));
}

InequalityReport numeric_inequality_suite(int n_max, const ProofConstants& k)
{
    if (n_max < 1)
        throw std::invalid_argument("n_max must be at least 1");
    InequalityReport report;
    report.n_max = n_max;
    long double kk_sum = 0.0L;

    auto check = [&](const char* name, int n, double lhs, double rhs) {
        ++report.checks;
        if (!(lhs <= rhs) && !report.first_violation)
            report.first_violation = InequalityViolation{name, n, lhs, rhs};
    };

    for (int n = 1; n <= n_max; ++n) {
        const double nn = static_cast<double>(n);
        const double big_n = static_cast<double>(exponent_count(n));
        const double log_n = std::log(nn);

        check("vieta_log_bound", n, big_n * std::log(big_n + nn), nn * nn * log_n + k.vieta_slack * nn * nn);
        check("dimension_log", n, std::log(big_n + 1.0), big_n);
        check("dimension_log", n, std::log(big_n + 1.0), 2.0 * nn * nn);
        // Written as rhs <= lhs so every check reads "lhs <= rhs".
        check("proof_floor", n, 0.5 * nn * nn * log_n - nn * nn, big_n * std::log(big_n / nn) - big_n);

        kk_sum += static_cast<long double>(nn) * std::log(static_cast<long double>(nn));
        check("kk_log_sum", n, 0.5 * nn * nn * log_n - k.kk_slack * nn * nn, static_cast<double>(kk_sum));

        if (report.first_violation)
            break;
    }
    return report;
}

}  // namespace bwexp
