#pragma once

#include <cstdint>

namespace qrk {

/// Outcome of one two-sided binomial z-test.
struct TestOutcome {
    double observed = 0.0; // successes / shots
    double expected = 0.0;
    double z = 0.0;        // +/-inf on an edge-case mismatch
    double alpha = 0.0;    // per-test level
    bool pass = false;
};

/// Two-sided z-test of `successes` out of `shots` against `expected_p`, with
/// sigma = sqrt(expected_p (1 - expected_p) / shots). The edges expected_p in
/// {0, 1} have no sampling variance and pass only on an exact match.
TestOutcome binomial_ztest(std::uint64_t successes, std::uint64_t shots,
                           double expected_p, double alpha);

/// Hoeffding shot budget: ceil(ln(2/alpha) / (2 tolerance^2)) shots guarantee
/// the empirical proportion lands within `tolerance` with probability
/// >= 1 - alpha.
std::uint64_t required_shots(double tolerance, double alpha);

/// Bonferroni correction: alpha / m_tests.
double bonferroni(double alpha, std::uint64_t m_tests);

/// Two-sided critical value for a given alpha. The two levels the harness
/// exposes are pinned (0.05 -> 1.95996, 0.01 -> 2.57583); other levels go
/// through inverse_normal_cdf.
double z_critical(double alpha);

/// Acklam's rational approximation of the standard normal quantile
/// (relative error below 1.2e-9 over (0, 1)).
double inverse_normal_cdf(double p);

} // namespace qrk
