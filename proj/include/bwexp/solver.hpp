#pragma once

// Numeric estimates of E_n(alpha) = sup{ ||P||_bidisk : deg P <= n, ||P||_K <= 1 }.
//
// en_lp_estimate discretizes the program: the K-norm constraint is imposed at
// M1 equispaced points of |t| = 1, each modulus constraint |f(t_i)| <= 1 is
// replaced by its circumscribed S-gon (Re(e^{i phi_s} f(t_i)) <= 1), and the
// bidisk sup is replaced by a maximum over an M2 x M2 torus grid and Q output
// phases. Both approximations enlarge the feasible set, so the LP value is
// biased upward relative to the restricted objective; it is solved exactly
// (to tolerance) by a cutting-plane loop over the M1 * S constraints.
//
// en_random_search samples feasible directions and reports the best certified
// ratio ||P||_bidisk,grid / ||P||_K,certified, a lower bound on e_n up to
// torus-grid slack.
//
// Both run in double precision; they are meant for small n (default guard
// n <= 8, with useful accuracy for n <= 4).

#include "bwexp/analytic_bounds.hpp"
#include "bwexp/core.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bwexp {

/// Raised when the discretized program is unbounded: some exponential sum
/// escapes between grid points, so circle_points must be raised.
class SolverUnbounded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when n exceeds the size guard without an override.
class ProblemTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct LPConfig {
    int circle_points = 512;  // M1
    int polygon_sides = 64;   // S
    int torus_points = 32;    // M2 per dimension
    int phase_samples = 16;   // Q

    /// Checks M1 >= 4N, S >= 8, M2 >= 8, Q >= 4.
    void validate(int n) const;
    friend bool operator==(const LPConfig&, const LPConfig&) = default;
};

struct SolverOptions {
    int max_degree = 8;
    bool allow_large_degree = false;
    /// Worker threads for independent LP instances; 0 = hardware concurrency.
    int threads = 1;
    /// Extended precision for the seeded witness candidate.
    Precision precision{};
};

/// Documented allowance between the oracle and the LP estimate.
inline constexpr double kCrossEstimatorSlack = 0.05;

struct LpDetails {
    double log_value = 0.0;
    int programs = 0;      // LP instances solved
    int max_rows = 0;      // largest active constraint set in any instance
    int best_torus_z = 0;  // grid index of the maximizing candidate
    int best_torus_w = 0;
};

/// ln of the maximum LP value over all torus candidates and phases.
double en_lp_estimate(int n, const AlphaParam& alpha, const LPConfig& cfg, const SolverOptions& opts = {});
LpDetails en_lp_details(int n, const AlphaParam& alpha, const LPConfig& cfg, const SolverOptions& opts = {});

struct RandomSearchOptions {
    int circle_points = 512;
    int torus_points = 256;
    /// Include z, w and the witness as deterministic candidates.
    bool seeded_candidates = true;
    Precision precision{};
};

struct RandomSearchResult {
    double log_value = 0.0;
    std::string best_label;  // "z", "w", "witness" or "random:<trial>"
};

/// Max of ln(grid ||P||_bidisk / certified ||P||_K) over seeded candidates and
/// `trials` unit-sphere random coefficient vectors; deterministic in `seed`.
double en_random_search(int n, const AlphaParam& alpha, int trials, std::uint64_t seed,
                        const RandomSearchOptions& opts = {});
RandomSearchResult en_random_search_details(int n, const AlphaParam& alpha, int trials, std::uint64_t seed,
                                            const RandomSearchOptions& opts = {});

struct EnEstimate {
    int n = 0;
    AlphaParam alpha;
    double lp_log_value = 0.0;
    double oracle_log_value = 0.0;
    double witness_log_value = 0.0;
    Bracket analytic{};
    LPConfig config;
    std::uint64_t seed = 0;
    int trials = 0;
    unsigned precision_bits = 0;
    /// Names of violated cross-estimator invariants (empty when coherent).
    std::vector<std::string> violations;
};

EnEstimate en_bracket(int n, const AlphaParam& alpha, const LPConfig& cfg, int trials, std::uint64_t seed,
                      const SolverOptions& opts = {});

}  // namespace bwexp
