#include "qrk/stats.hpp"

#include <cmath>
#include <limits>

#include "qrk/errors.hpp"

namespace qrk {

namespace {

// Acklam's coefficients for the central and tail rational approximations.
constexpr double kA[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                          -2.759285104469687e+02, 1.383577518672690e+02,
                          -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kB[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                          -1.556989798598866e+02, 6.680131188771972e+01,
                          -1.328068155288572e+01};
constexpr double kC[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                          -2.400758277161838e+00, -2.549732539343734e+00,
                          4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kD[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                          2.445134137142996e+00, 3.754408661907416e+00};
constexpr double kPLow = 0.02425;

double tail_quantile(double p) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q +
            kC[5]) /
           ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
}

} // namespace

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw ValidationError("inverse_normal_cdf: p must lie in (0, 1)");
    }
    if (p < kPLow) {
        return tail_quantile(p);
    }
    if (p > 1.0 - kPLow) {
        return -tail_quantile(1.0 - p);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r +
            kA[5]) *
           q /
           (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r +
            1.0);
}

double z_critical(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ValidationError("z_critical: alpha must lie in (0, 1)");
    }
    // Pinned values for the two standard levels so results do not drift with
    // the approximation.
    if (alpha == 0.05) {
        return 1.95996;
    }
    if (alpha == 0.01) {
        return 2.57583;
    }
    return inverse_normal_cdf(1.0 - alpha / 2.0);
}

TestOutcome binomial_ztest(std::uint64_t successes, std::uint64_t shots,
                           double expected_p, double alpha) {
    if (shots == 0) {
        throw ValidationError("binomial_ztest: shots must be positive");
    }
    if (successes > shots) {
        throw ValidationError("binomial_ztest: successes exceed shots");
    }
    if (!(expected_p >= 0.0 && expected_p <= 1.0)) {
        throw ValidationError("binomial_ztest: expected_p must lie in [0, 1]");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ValidationError("binomial_ztest: alpha must lie in (0, 1)");
    }
    TestOutcome out;
    out.observed = static_cast<double>(successes) / static_cast<double>(shots);
    out.expected = expected_p;
    out.alpha = alpha;
    if (expected_p == 0.0 || expected_p == 1.0) {
        // Degenerate distribution: any deviation is impossible under the
        // null, so pass only on an exact match.
        const bool exact = out.observed == expected_p;
        out.z = exact ? 0.0 : std::numeric_limits<double>::infinity();
        out.pass = exact;
        return out;
    }
    const double sigma =
        std::sqrt(expected_p * (1.0 - expected_p) /
                  static_cast<double>(shots));
    out.z = (out.observed - expected_p) / sigma;
    out.pass = std::fabs(out.z) <= z_critical(alpha);
    return out;
}

std::uint64_t required_shots(double tolerance, double alpha) {
    if (!(tolerance > 0.0)) {
        throw ValidationError("required_shots: tolerance must be positive");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ValidationError("required_shots: alpha must lie in (0, 1)");
    }
    const double raw = std::log(2.0 / alpha) / (2.0 * tolerance * tolerance);
    return static_cast<std::uint64_t>(std::ceil(raw));
}

double bonferroni(double alpha, std::uint64_t m_tests) {
    if (m_tests == 0) {
        throw ValidationError("bonferroni: m_tests must be positive");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ValidationError("bonferroni: alpha must lie in (0, 1)");
    }
    return alpha / static_cast<double>(m_tests);
}

} // namespace qrk
