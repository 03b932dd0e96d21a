#include "bwexp/norms.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace bwexp {

std::string to_string(NormMethod m)
{
    switch (m) {
    case NormMethod::curve_k:
        return "curve_k";
    case NormMethod::circle:
        return "circle";
    case NormMethod::bidisk_torus:
        return "bidisk_torus";
    }
    return "unknown";
}

namespace {

void require_grid(int grid)
{
    if (grid < 8)
        throw std::invalid_argument("grid size must be at least 8");
}

Real max_of(const Real& a, const Real& b) { return a < b ? b : a; }

// Rounding allowance for evaluating f at one point at the current precision.
Real evaluation_slack(const ExpSum& f, const Real& radius)
{
    // Constant sums are evaluated exactly.
    if (f.max_abs_exponent().is_zero())
        return Real(0);
    Real mass(0);
    for (const auto& t : f.terms())
        mass += abs(t.coeff) * exp(abs(t.exponent) * radius);
    const long bits = static_cast<long>(current_bits());
    return ldexp(mass * Real(static_cast<long>(f.size()) + 8), -(bits - 6));
}

// Grid maximum plus the best certified bound over the dyadic sub-grids of the
// sample (every grid, grid/2, grid/4, ... points down to 8). Taking the minimum
// over sub-grids makes certified_upper nonincreasing under grid doubling.
NormEstimate certify_circle(const std::vector<Real>& moduli, const Real& radius, const Real& deriv,
                            const Real& slack, NormMethod method)
{
    const int grid = static_cast<int>(moduli.size());
    NormEstimate est;
    est.method = method;
    est.grid_points = grid;
    for (const auto& m : moduli)
        if (m > est.grid_max)
            est.grid_max = m;

    const Real half_arc = pi() * radius;
    std::optional<Real> best;
    for (int stride = 1; grid % stride == 0 && grid / stride >= 8; stride *= 2) {
        Real sub(0);
        for (int i = 0; i < grid; i += stride)
            if (moduli[static_cast<std::size_t>(i)] > sub)
                sub = moduli[static_cast<std::size_t>(i)];
        Real bound = sub + half_arc / Real(grid / stride) * deriv + slack;
        if (!best || bound < *best)
            best = std::move(bound);
    }
    // Never report an upper bound below the observed maximum.
    est.certified_upper = max_of(*best, est.grid_max);
    return est;
}

std::vector<Complex> circle_points(const Real& r, int grid)
{
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(grid));
    const Real step = Real(2) * pi() / Real(grid);
    for (int i = 0; i < grid; ++i)
        pts.push_back(polar(r, step * Real(i)));
    return pts;
}

}  // namespace

Real derivative_bound(const ExpSum& f, const Real& radius)
{
    if (f.empty())
        return Real(0);

    Real naive(0);
    Real mass_a(0);  // sum |c| |a|
    for (const auto& t : f.terms()) {
        const Real a = abs(t.exponent);
        naive += abs(t.coeff) * a * exp(a * radius);
        mass_a += abs(t.coeff) * a;
    }
    if (naive.is_zero())
        return naive;

    // Taylor majorant: |f'(t)| <= sum_{m>=1} |s_m| r^{m-1}/(m-1)!, s_m = f^{(m)}(0).
    // Head terms are computed exactly (plus a rounding allowance), the tail is
    // bounded by sum |c||a| (A r)^M / M! / (1 - A r/(M+1)).
    const Real big_a = f.max_abs_exponent();
    const Real ar = big_a * radius;
    const long bits = static_cast<long>(current_bits());
    const Real ulp_factor = ldexp(Real(static_cast<long>(f.size()) + 8), -(bits - 6));

    std::vector<Complex> powers;
    std::vector<Real> abs_coeff, abs_exp;
    for (const auto& t : f.terms()) {
        powers.push_back(t.coeff);  // c * a^0
        abs_coeff.push_back(abs(t.coeff));
        abs_exp.push_back(abs(t.exponent));
    }
    std::vector<Real> abs_powers = abs_coeff;

    Real head(0);
    Real weight(1);      // r^{m-1}/(m-1)!
    Real tail_term = mass_a;  // sum |c||a| (A r)^{m-1}/(m-1)! at m
    const long cap = 4000;
    for (long m = 1; m <= cap; ++m) {
        Complex s;
        Real mass(0);
        for (std::size_t i = 0; i < powers.size(); ++i) {
            powers[i] *= f.terms()[i].exponent;
            abs_powers[i] *= abs_exp[i];
            s += powers[i];
            mass += abs_powers[i];
        }
        head += (abs(s) + ulp_factor * mass) * weight;
        weight *= radius / Real(m);
        tail_term *= ar / Real(m);
        // Remaining terms m+1, m+2, ... are bounded by tail_term / (1 - A r/(m+1)).
        const Real ratio = ar / Real(m + 1);
        if (ratio < Real(0.5)) {
            const Real tail = tail_term / (Real(1) - ratio);
            if (tail <= ldexp(head, -40) || m == cap)
                return head + tail < naive ? head + tail : naive;
        }
    }
    return naive;
}

NormEstimate norm_on_K(const Poly2& p, const AlphaParam& alpha, int grid, Precision prec)
{
    require_grid(grid);
    PrecisionScope scope(prec);
    const ExpSum f = compose_to_expsum(p, alpha);
    const Real one(1);
    const Complex a = alpha.value();

    std::vector<Real> moduli;
    moduli.reserve(static_cast<std::size_t>(grid));
    for (const Complex& t : circle_points(one, grid))
        moduli.push_back(abs(eval_poly(p, exp(t), exp(a * t))));
    return certify_circle(moduli, one, derivative_bound(f, one), evaluation_slack(f, one), NormMethod::curve_k);
}

NormEstimate norm_on_circle(const ExpSum& f, const Real& r, int grid, Precision prec)
{
    require_grid(grid);
    if (!(r > Real(0)))
        throw std::invalid_argument("circle radius must be positive");
    PrecisionScope scope(prec);
    std::vector<Real> moduli;
    moduli.reserve(static_cast<std::size_t>(grid));
    for (const Complex& t : circle_points(r, grid))
        moduli.push_back(abs(eval_expsum(f, t)));
    return certify_circle(moduli, r, derivative_bound(f, r), evaluation_slack(f, r), NormMethod::circle);
}

NormEstimate norm_on_bidisk(const Poly2& p, int grid, Precision prec)
{
    require_grid(grid);
    PrecisionScope scope(prec);
    const int n = p.degree();
    const auto pts = circle_points(Real(1), grid);

    // inner[w][j] = sum_k c_jk w^k, so P(z, w) = sum_j z^j inner[w][j].
    std::vector<std::vector<Complex>> inner(static_cast<std::size_t>(grid),
                                            std::vector<Complex>(static_cast<std::size_t>(n) + 1));
    for (int iw = 0; iw < grid; ++iw) {
        auto& row = inner[static_cast<std::size_t>(iw)];
        for (int j = 0; j <= n; ++j) {
            Complex acc;
            for (int k = n - j; k >= 0; --k)
                acc = acc * pts[static_cast<std::size_t>(iw)] + p(j, k);
            row[static_cast<std::size_t>(j)] = std::move(acc);
        }
    }

    NormEstimate est;
    est.method = NormMethod::bidisk_torus;
    est.grid_points = grid * grid;
    for (int iz = 0; iz < grid; ++iz) {
        const Complex& z = pts[static_cast<std::size_t>(iz)];
        for (int iw = 0; iw < grid; ++iw) {
            const auto& row = inner[static_cast<std::size_t>(iw)];
            Complex acc;
            for (int j = n; j >= 0; --j)
                acc = acc * z + row[static_cast<std::size_t>(j)];
            Real m = abs(acc);
            if (m > est.grid_max)
                est.grid_max = std::move(m);
        }
    }
    est.certified_upper = max_of(p.l1_norm(), est.grid_max);
    return est;
}

Real bw_envelope(const Complex& z, const Complex& w, const Real& norm_k, const Real& en, int n)
{
    const Real m = max_of(abs(z), abs(w));
    Real log_plus(0);
    if (m > Real(1))
        log_plus = log(m);
    return norm_k * en * exp(Real(n) * log_plus);
}

}  // namespace bwexp
