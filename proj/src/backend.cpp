#include "qrk/backend.hpp"

#include "qrk/errors.hpp"
#include "qrk/rng.hpp"
#include "qrk/simulator.hpp"

namespace qrk {

void Backend::check_width(const Circuit& circuit) const {
    if (circuit.n_qubits() > width()) {
        throw CapabilityError("circuit needs " +
                              std::to_string(circuit.n_qubits()) +
                              " qubits but backend width is " +
                              std::to_string(width()));
    }
}

namespace {

void apply_all(StateVector& state, const Circuit& circuit) {
    for (const Gate& gate : circuit.gates()) {
        apply_gate_inplace(state, gate);
    }
}

} // namespace

ExactBackend::ExactBackend(int width) : width_(width) {
    if (width < 1) {
        throw ValidationError("backend width must be positive");
    }
}

Counts ExactBackend::run(const Circuit& circuit, std::uint64_t shots,
                         std::uint64_t seed) const {
    check_width(circuit);
    StateVector state = run_exact(circuit);
    return sample_counts(state, shots, /*readout_error=*/0.0,
                         derive_seed(seed, "measure", 0));
}

Counts ExactBackend::run_with_ideal_suffix(const Circuit& circuit,
                                           const Circuit& suffix,
                                           std::uint64_t shots,
                                           std::uint64_t seed) const {
    check_width(circuit);
    if (suffix.n_qubits() != circuit.n_qubits()) {
        throw ValidationError("suffix register size does not match circuit");
    }
    StateVector state = run_exact(circuit);
    apply_all(state, suffix);
    return sample_counts(state, shots, 0.0, derive_seed(seed, "measure", 0));
}

std::vector<StateVector> ExactBackend::trajectory_states(
    const Circuit& circuit, std::uint64_t /*seed*/) const {
    check_width(circuit);
    std::vector<StateVector> states;
    states.push_back(run_exact(circuit));
    return states;
}

TrajectoryBackend::TrajectoryBackend(NoiseModel noise,
                                     std::uint64_t trajectories, int width)
    : noise_(noise), trajectories_(trajectories), width_(width) {
    noise_.validate();
    if (trajectories == 0) {
        throw ValidationError("trajectory count must be positive");
    }
    if (width < 1) {
        throw ValidationError("backend width must be positive");
    }
}

Counts TrajectoryBackend::run_impl(const Circuit& circuit,
                                   const Circuit* suffix, std::uint64_t shots,
                                   std::uint64_t seed) const {
    check_width(circuit);
    if (suffix != nullptr && suffix->n_qubits() != circuit.n_qubits()) {
        throw ValidationError("suffix register size does not match circuit");
    }
    if (shots == 0) {
        throw ValidationError("shots must be positive");
    }
    if (noise_.is_zero()) {
        // Gate noise cannot fire, so every trajectory would prepare the same
        // state; compute it once and draw all shots from it.
        StateVector state = run_exact(circuit);
        if (suffix != nullptr) {
            apply_all(state, *suffix);
        }
        return sample_counts(state, shots, noise_.readout,
                             derive_seed(seed, "measure", 0));
    }
    const std::uint64_t base = shots / trajectories_;
    const std::uint64_t extra = shots % trajectories_;
    Counts merged;
    merged.n_qubits = circuit.n_qubits();
    merged.shots = 0;
    for (std::uint64_t t = 0; t < trajectories_; ++t) {
        const std::uint64_t shots_t = base + (t < extra ? 1 : 0);
        if (shots_t == 0) {
            continue;
        }
        StateVector state =
            run_trajectory(circuit, noise_, derive_seed(seed, "trajectory", t));
        if (suffix != nullptr) {
            apply_all(state, *suffix);
        }
        Counts counts = sample_counts(state, shots_t, noise_.readout,
                                      derive_seed(seed, "measure", t));
        merged.merge(counts);
    }
    return merged;
}

Counts TrajectoryBackend::run(const Circuit& circuit, std::uint64_t shots,
                              std::uint64_t seed) const {
    return run_impl(circuit, nullptr, shots, seed);
}

Counts TrajectoryBackend::run_with_ideal_suffix(const Circuit& circuit,
                                                const Circuit& suffix,
                                                std::uint64_t shots,
                                                std::uint64_t seed) const {
    return run_impl(circuit, &suffix, shots, seed);
}

std::vector<StateVector> TrajectoryBackend::trajectory_states(
    const Circuit& circuit, std::uint64_t seed) const {
    check_width(circuit);
    std::vector<StateVector> states;
    if (noise_.is_zero()) {
        states.push_back(run_exact(circuit));
        return states;
    }
    states.reserve(trajectories_);
    for (std::uint64_t t = 0; t < trajectories_; ++t) {
        states.push_back(
            run_trajectory(circuit, noise_, derive_seed(seed, "trajectory", t)));
    }
    return states;
}

std::unique_ptr<Backend> make_backend(const std::string& kind,
                                      const NoiseModel& noise,
                                      std::uint64_t trajectories, int width) {
    if (kind == "exact") {
        return std::make_unique<ExactBackend>(width);
    }
    if (kind == "trajectory") {
        return std::make_unique<TrajectoryBackend>(noise, trajectories, width);
    }
    throw ConfigError("unknown backend '" + kind +
                      "' (expected 'exact' or 'trajectory')");
}

} // namespace qrk
