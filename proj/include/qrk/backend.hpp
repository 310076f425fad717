#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qrk/circuit.hpp"
#include "qrk/statevector.hpp"

namespace qrk {

/// Execution target for kernels. A backend owns its noise configuration and
/// the sampling discipline; kernels talk to it through counts or through the
/// per-trajectory statevectors when they need exact expectation values.
class Backend {
public:
    virtual ~Backend() = default;

    virtual std::string name() const = 0;

    /// Largest register the backend accepts.
    virtual int width() const = 0;

    virtual const NoiseModel& noise() const = 0;

    /// Number of Monte-Carlo trajectories shots are spread over.
    virtual std::uint64_t trajectories() const = 0;

    /// True when execution is a single deterministic statevector pass.
    virtual bool is_exact() const = 0;

    /// Execute `circuit` and sample `shots` measurement outcomes.
    virtual Counts run(const Circuit& circuit, std::uint64_t shots,
                       std::uint64_t seed) const = 0;

    /// Execute `circuit` under the backend's noise, then apply `suffix`
    /// without noise before sampling. Analysis rotations (basis changes that
    /// belong to the estimator, not to the workload under test) go through
    /// this path so they do not add error of their own.
    virtual Counts run_with_ideal_suffix(const Circuit& circuit,
                                         const Circuit& suffix,
                                         std::uint64_t shots,
                                         std::uint64_t seed) const = 0;

    /// The statevectors the sampler would draw from: one per trajectory, or a
    /// single state when execution is deterministic.
    virtual std::vector<StateVector> trajectory_states(
        const Circuit& circuit, std::uint64_t seed) const = 0;

protected:
    void check_width(const Circuit& circuit) const;
};

/// Noiseless reference backend: one exact statevector pass per circuit.
class ExactBackend final : public Backend {
public:
    explicit ExactBackend(int width = 16);

    std::string name() const override { return "exact"; }
    int width() const override { return width_; }
    const NoiseModel& noise() const override { return noise_; }
    std::uint64_t trajectories() const override { return 1; }
    bool is_exact() const override { return true; }

    Counts run(const Circuit& circuit, std::uint64_t shots,
               std::uint64_t seed) const override;
    Counts run_with_ideal_suffix(const Circuit& circuit, const Circuit& suffix,
                                 std::uint64_t shots,
                                 std::uint64_t seed) const override;
    std::vector<StateVector> trajectory_states(
        const Circuit& circuit, std::uint64_t seed) const override;

private:
    int width_;
    NoiseModel noise_; // all-zero
};

/// Monte-Carlo trajectory backend: shots are split evenly across the
/// configured trajectory count, each trajectory re-running the circuit with
/// independently sampled Pauli insertions. With an all-zero noise model the
/// state is computed once (the trajectory pass is bit-identical to the exact
/// pass in that case) and all shots are drawn from it.
class TrajectoryBackend final : public Backend {
public:
    TrajectoryBackend(NoiseModel noise, std::uint64_t trajectories,
                      int width = 16);

    std::string name() const override { return "trajectory"; }
    int width() const override { return width_; }
    const NoiseModel& noise() const override { return noise_; }
    std::uint64_t trajectories() const override { return trajectories_; }
    bool is_exact() const override { return false; }

    Counts run(const Circuit& circuit, std::uint64_t shots,
               std::uint64_t seed) const override;
    Counts run_with_ideal_suffix(const Circuit& circuit, const Circuit& suffix,
                                 std::uint64_t shots,
                                 std::uint64_t seed) const override;
    std::vector<StateVector> trajectory_states(
        const Circuit& circuit, std::uint64_t seed) const override;

private:
    Counts run_impl(const Circuit& circuit, const Circuit* suffix,
                    std::uint64_t shots, std::uint64_t seed) const;

    NoiseModel noise_;
    std::uint64_t trajectories_;
    int width_;
};

/// Factory used by the harness: `kind` is "exact" or "trajectory".
std::unique_ptr<Backend> make_backend(const std::string& kind,
                                      const NoiseModel& noise,
                                      std::uint64_t trajectories,
                                      int width = 16);

} // namespace qrk
