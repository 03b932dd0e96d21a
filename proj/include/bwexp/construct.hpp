#pragma once

// Lower-bound witness: a polynomial P of degree n whose composition
// f(t) = P(e^t, e^{alpha t}) vanishes to order N = (n^2+3n)/2 at t = 0.
//
// Requiring f^{(m)}(0) = sum c_jk (j + k alpha)^m = 0 for m < N is an N x (N+1)
// Vandermonde system in the exponent nodes. Its null space is spanned by the
// divided-difference weights c_i = 1 / prod_{j != i} (a_i - a_j), which exist
// iff the nodes are pairwise distinct, i.e. iff alpha_2 != 0.

#include "bwexp/core.hpp"
#include "bwexp/norms.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace bwexp {

/// Raised when exponent nodes coincide within 2^(-bits/2) relative.
class DuplicateNodes : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when the constructed weights fail their residual check; the caller
/// must raise the precision.
class PrecisionTooLow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Weights of the divided difference over `nodes`: sum c_i a_i^m = 0 for
/// m < size-1 and sum c_i a_i^(size-1) = 1.
std::vector<Complex> divided_difference_weights(std::span<const Complex> nodes, Precision prec = {});

/// Smallest precision at which the witness of degree n is built:
/// 64 + ceil(N log2(n+2)).
unsigned witness_min_bits(int n);

struct WitnessResult {
    Poly2 p;
    int n = 0;
    int big_n = 0;
    /// max over m < N of |sum c a^m| / (max|c| * max(1, max|a|)^m).
    Real max_residual;
    /// Evaluation radius; N/n unless overridden.
    double r = 0.0;
    /// Precision the construction actually ran at (>= requested).
    unsigned bits = 0;
    /// sum c a^N after normalization to max|c| = 1.
    Complex leading_power_sum;
};

/// Builds the witness at max(prec.bits, witness_min_bits(n)) bits and
/// normalizes it to max|coefficient| = 1.
WitnessResult build_witness(int n, const AlphaParam& alpha, Precision prec = {});

/// ln(circle_sup.grid_max) - ln(normK.certified_upper) - n r: a certified lower
/// bound on e_n(alpha) from sup_{|t|=r}|f| <= ||P||_K E_n e^{n r}.
/// Throws std::invalid_argument for r < 1 or a missing certified K-norm.
double witness_lower_bound(const WitnessResult& w, const AlphaParam& alpha, double r, const NormEstimate& norm_k,
                           const NormEstimate& circle_sup);

/// N ln(N/n) - N, the floor the construction guarantees at r = N/n.
double proof_lower_bound(int n);

/// ln sup_{|t|=r}|f| - ln sup_{|t|=1}|f| - N ln r for the witness, using the
/// grid maximum on |t| = r and the certified bound on |t| = 1, so a
/// nonnegative value certifies the growth law of an order-N zero.
double growth_law_gap(const WitnessResult& w, const AlphaParam& alpha, double r, int grid = kDefaultCircleGrid);

/// Witness plus the two norms and the resulting bound, as reported by the CLI.
struct WitnessCertificate {
    WitnessResult witness;
    NormEstimate norm_k;
    NormEstimate circle_sup;
    double lower_bound = 0.0;
};

/// r <= 0 selects the default radius N/n.
WitnessCertificate certify_witness(int n, const AlphaParam& alpha, double r = 0.0, int grid = kDefaultCircleGrid,
                                   Precision prec = {});

}  // namespace bwexp
