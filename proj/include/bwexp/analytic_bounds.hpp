#pragma once

// Closed-form bounds on e_n(alpha) = log E_n(alpha) and every link of the
// coefficient-estimate chain that produces the upper bound: the lemma on
// products |j - k alpha|, the Stirling facts it relies on, the annihilator
// polynomials R_lm and their values beta_lm, and the Vieta majorant.
//
// Closed forms return double. Products that can be evaluated exactly return
// Real at the requested precision.

#include "bwexp/core.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bwexp {

/// The constants of the upper-estimate chain, exactly as used there. Kept in
/// one place so the verification suites can be mutation-tested.
struct ProofConstants {
    double vieta_slack = 3.7;        // N log(N+n) <= n^2 log n + 3.7 n^2
    double coeff_slack = 5.95;       // log|c_lm| <= (n^2/2) log n + 5.95 n^2 - n log|alpha_2|
    double beta_slack = 9.0 / 4.0;   // log|beta_lm| >= (n^2 log n)/2 - 9n^2/4 + n log|alpha_2|
    double theorem_slack = 8.0;      // e_n <= (n^2 log n)/2 + 8 n^2 - n log|alpha_2|
    double kk_slack = 0.25;          // sum k log k >= (n^2 log n)/2 - n^2/4
};

struct Bracket {
    double lower;
    double upper;
};

/// lower = (n^2 ln n)/2 - n^2, upper = (n^2 ln n)/2 + 8n^2 - n ln|alpha_2|.
/// Throws InvalidAlpha unless alpha.theorem_valid.
Bracket theorem2_bounds(int n, const AlphaParam& alpha, const ProofConstants& k = {});

/// Closest integer; exact half-integers round toward +infinity.
long nearest_integer(double x);

enum class LemmaSide { outside, inside };

/// The case split of the product lemma for fixed (k, x, y, alpha).
struct LemmaCase {
    long k;
    long x;
    long y;
    AlphaParam alpha;
    long j0;  // nearest integer to k * alpha_1
    LemmaSide side;
};

LemmaCase classify_lemma_case(long x, long y, long k, const AlphaParam& alpha);

/// prod_{j=x}^{y} |j - k alpha|. Throws std::invalid_argument if x > y.
Real lemma_product_exact(long x, long y, long k, const AlphaParam& alpha, Precision prec = {});

/// ((y-x)/(2e))^(y-x), times |k alpha_2| when x <= <k alpha_1> <= y; 0^0 = 1.
Real lemma_product_lower(long x, long y, long k, const AlphaParam& alpha, Precision prec = {});

/// m! / ((m/e)^m sqrt(m)); lies in [e^{7/8}, e] for every m >= 1.
Real stirling_ratio(unsigned long m, Precision prec = {});

/// prod_{j=1}^{m} (j - 1/2).
Real half_integer_product(unsigned long m, Precision prec = {});

/// R_lm(lambda) = prod over nodes other than the target of (lambda - node),
/// expanded as coeffs[0] + coeffs[1] lambda + ... + coeffs[N] lambda^N.
struct AnnihilatorData {
    MultiIndex target;
    int degree = 0;
    std::vector<Complex> coeffs;
    /// beta_lm = prod_{(j,k) != (l,m)} (l - j + (m - k) alpha), by direct product.
    Complex beta;

    /// Horner evaluation of R_lm.
    Complex evaluate(const Complex& lambda) const;
    /// sum |a_t| N^t
    Real majorant_sum() const;
};

/// Expands R_lm by multiplying in one linear factor at a time.
/// Throws std::out_of_range for l + m > n, InvalidAlpha for alpha_2 = 0.
AnnihilatorData annihilator(int l, int m, int n, const AlphaParam& alpha, Precision prec = {});

/// D_R f(0) = sum_t a_t f^{(t)}(0). For f composed from P this isolates
/// c_lm * beta_lm.
Complex apply_annihilator(const AnnihilatorData& r, const ExpSum& f);

/// (n^2 ln n)/2 - 9n^2/4 + n ln|alpha_2|.
double beta_log_lower(int l, int m, int n, const AlphaParam& alpha, const ProofConstants& k = {});

/// The two re-indexed double products whose product bounds |beta_lm| from
/// below:
///   A1 = prod_{k=1}^{m}   prod_{j=-l}^{n-l-m+k} |j - k alpha|
///   A2 = prod_{k=1}^{n-m} prod_{j=l+m+k-n}^{l}  |j - k alpha|
std::pair<Real, Real> a1_a2_products(int l, int m, int n, const AlphaParam& alpha, Precision prec = {});

/// (N+n)^N.
Real vieta_majorant(int n, Precision prec = {});

/// (n^2/2) ln n + 5.95 n^2 - n ln|alpha_2|.
double coeff_log_upper(int n, const AlphaParam& alpha, const ProofConstants& k = {});

struct InequalityViolation {
    std::string name;
    int n;
    double lhs;
    double rhs;
};

struct InequalityReport {
    int n_max = 0;
    int checks = 0;
    std::optional<InequalityViolation> first_violation;

    bool ok() const { return !first_violation.has_value(); }
};

/// Scans n = 1..n_max through the closed-form inequalities of the chain:
///   vieta_log_bound:   N ln(N+n) <= n^2 ln n + 3.7 n^2
///   dimension_log:     ln(N+1) <= N  and  ln(N+1) <= 2 n^2
///   proof_floor:       N ln(N/n) - N >= (n^2/2) ln n - n^2
///   kk_log_sum:        sum_{k<=n} k ln k >= (n^2 ln n)/2 - n^2/4
InequalityReport numeric_inequality_suite(int n_max, const ProofConstants& k = {});

}  // namespace bwexp
