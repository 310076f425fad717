#include "qrk/kernels/witness.hpp"

#include <cmath>

#include "qrk/constants.hpp"
#include "qrk/errors.hpp"
#include "qrk/rng.hpp"
#include "qrk/simulator.hpp"

namespace qrk {

double ghz_witness_exact(const std::vector<StateVector>& final_states, int n) {
    if (final_states.empty()) {
        throw ValidationError("witness needs at least one trajectory state");
    }
    const StateVector ghz = ghz_state(n);
    double sum = 0.0;
    for (const StateVector& state : final_states) {
        if (state.n_qubits != n) {
            throw ValidationError("trajectory state register size mismatch");
        }
        sum += exact_fidelity(state, ghz);
    }
    return sum / static_cast<double>(final_states.size());
}

namespace {

double parity_expectation(const Counts& counts) {
    double sum = 0.0;
    for (const auto& [key, count] : counts.histogram) {
        int ones = 0;
        for (char c : key) {
            ones += (c == '1');
        }
        const double sign = (ones % 2 == 0) ? 1.0 : -1.0;
        sum += sign * static_cast<double>(count);
    }
    return sum / static_cast<double>(counts.shots);
}

} // namespace

WitnessEstimate ghz_witness_shots(const Backend& backend,
                                  const Circuit& circuit, int n,
                                  std::uint64_t shots, std::uint64_t seed) {
    if (n < 2) {
        throw ValidationError("GHZ witness needs at least 2 qubits");
    }
    if (circuit.n_qubits() != n) {
        throw ValidationError("circuit register size does not match n");
    }
    const std::uint64_t settings = static_cast<std::uint64_t>(n) + 2;
    if (shots < settings * 100) {
        throw ValidationError("witness needs at least (n+2)*100 shots");
    }
    const std::uint64_t base = shots / settings;
    const std::uint64_t extra = shots % settings;
    auto setting_shots = [&](std::uint64_t j) { return base + (j < extra); };

    // Setting 0: Z basis, population term.
    const std::uint64_t z_shots = setting_shots(0);
    Counts z_counts =
        backend.run(circuit, z_shots, derive_seed(seed, "witness", 0));
    const std::uint64_t all_ones = (1ULL << n) - 1;
    const double hits =
        static_cast<double>(z_counts.count(bitstring_key(0, n)) +
                            z_counts.count(bitstring_key(all_ones, n)));
    const double population = hits / static_cast<double>(z_shots);
    double var_population =
        population * (1.0 - population) / static_cast<double>(z_shots);

    // Settings 1..n+1: parity at phases phi_k = k pi / (n+1), k = 0..n.
    const double weight_norm = 2.0 / static_cast<double>(n + 1);
    double coherence = 0.0;
    double var_coherence = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double phi = static_cast<double>(k) * kPi /
                           static_cast<double>(n + 1);
        Circuit suffix(n);
        for (int q = 0; q < n; ++q) {
            suffix.rz(q, phi);
        }
        for (int q = 0; q < n; ++q) {
            suffix.h(q);
        }
        const std::uint64_t s_shots =
            setting_shots(static_cast<std::uint64_t>(k) + 1);
        Counts counts = backend.run_with_ideal_suffix(
            circuit, suffix, s_shots,
            derive_seed(seed, "witness", static_cast<std::uint64_t>(k) + 1));
        const double m = parity_expectation(counts);
        const double weight = weight_norm * std::cos(static_cast<double>(n) * phi);
        coherence += weight * m;
        // Each shot's parity is +/-1, so Var(mean) = (1 - m^2)/shots.
        const double var_m =
            std::max(0.0, 1.0 - m * m) / static_cast<double>(s_shots);
        var_coherence += weight * weight * var_m;
    }

    WitnessEstimate est;
    est.population = population;
    est.coherence = coherence;
    est.fidelity = (population + coherence) / 2.0;
    est.std_error = std::sqrt((var_population + var_coherence) / 4.0);
    return est;
}

} // namespace qrk
