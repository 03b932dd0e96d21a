#pragma once

// Property suites behind `bwexp verify`. Each suite checks one invariant over
// a deterministic pseudo-random or exhaustive case set; the quick level keeps
// the whole run under half a minute, the full level uses the larger budgets.

#include "bwexp/analytic_bounds.hpp"
#include "bwexp/real.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bwexp {

enum class VerifyLevel { quick, full };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::quick;
    Precision precision{};
    /// Injected into every suite that consumes a closed-form constant.
    ProofConstants constants{};
    std::uint64_t seed = 20240229;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    long cases = 0;
    /// Name of the failing invariant; differs from `name` for suites that
    /// bundle several checks.
    std::string failed_check;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool ok() const;
    const SuiteResult* first_failure() const;
};

/// Suite names in execution order.
std::vector<std::string> verify_suite_names();

/// Runs the selected suites (all when `only` is empty). Unknown names throw
/// std::invalid_argument. `progress` is called after each suite.
VerifyReport run_verify(const VerifyOptions& opts, const std::vector<std::string>& only = {},
                        const std::function<void(const SuiteResult&)>& progress = {});

/// Applies "name=value" to a ProofConstants field (vieta, coeff, beta,
/// theorem, kk). Throws std::invalid_argument.
void set_proof_constant(ProofConstants& k, const std::string& assignment);

}  // namespace bwexp
