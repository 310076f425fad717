#include <doctest.h>

#include <cmath>
#include <vector>

#include "qrk/backend.hpp"
#include "qrk/density.hpp"
#include "qrk/errors.hpp"
#include "qrk/kernels/mirror.hpp"
#include "qrk/kernels/witness.hpp"
#include "qrk/simulator.hpp"

#include "helpers.hpp"

using namespace qrk;

namespace {

// Gate count of one brickwork layer: one RY per qubit plus the CZ pairs.
std::size_t layer_gates(int n, int layer) {
    const int parity = layer % 2;
    return static_cast<std::size_t>(n + (n - parity) / 2);
}

} // namespace

TEST_CASE("ghz prep circuits have the textbook shape") {
    const Circuit bell = build_ghz_circuit(2);
    REQUIRE(bell.gate_count() == 2);
    CHECK(bell.gates()[0] == Gate::h(0));
    CHECK(bell.gates()[1] == Gate::cx(0, 1));

    CHECK(build_ghz_circuit(3).gate_count() == 3);
    CHECK(build_ghz_circuit(5).gate_count() == 5);
    CHECK_THROWS_AS(build_ghz_circuit(1), ValidationError);
}

TEST_CASE("mirror load gate count follows the brickwork formula") {
    for (int n : {2, 3, 4, 5, 8}) {
        for (int L : {1, 2, 5, 8}) {
            std::size_t expected = 0;
            for (int layer = 0; layer < L; ++layer) {
                expected += layer_gates(n, layer);
            }
            expected *= 2; // forward layers plus their inverses
            CHECK(build_mirror_load(n, L, 17).gate_count() == expected);
        }
    }
    // The grid point used by the area examples: 4 qubits, half-depth 8.
    CHECK(build_mirror_load(4, 8, 1).gate_count() == 88);
}

TEST_CASE("mirror load is deterministic in the seed") {
    CHECK(build_mirror_load(4, 3, 9) == build_mirror_load(4, 3, 9));
    CHECK_FALSE(build_mirror_load(4, 3, 9) == build_mirror_load(4, 3, 10));
}

TEST_CASE("mirror load composes to the identity on the GHZ state") {
    for (int n : {2, 3, 5, 8}) {
        for (int L : {1, 4, 16}) {
            for (std::uint64_t seed : {1ULL, 2ULL}) {
                Circuit c = build_ghz_circuit(n);
                c.extend(build_mirror_load(n, L, seed));
                CHECK(exact_fidelity(run_exact(c), ghz_state(n)) >= 1.0 - 1e-9);
            }
        }
    }
}

TEST_CASE("exact witness averages trajectory fidelities") {
    const std::vector<StateVector> ideal{ghz_state(3), ghz_state(3)};
    CHECK(ghz_witness_exact(ideal, 3) == doctest::Approx(1.0).epsilon(1e-9));

    // Second state orthogonal to GHZ: (|000> - |111>)/sqrt(2).
    StateVector orth = ghz_state(3);
    orth.amps[orth.dim() - 1] *= -1.0;
    const std::vector<StateVector> half{ghz_state(3), orth};
    CHECK(ghz_witness_exact(half, 3) == doctest::Approx(0.5).epsilon(1e-9));

    CHECK_THROWS_AS(ghz_witness_exact({}, 3), ValidationError);
}

TEST_CASE("exact witness of the maximally mixed ensemble matches the oracle") {
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
    CHECK(state_fidelity(mixed, ghz_state(2)) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("shot witness approaches 1 on a noiseless GHZ pair") {
    const ExactBackend backend(4);
    const WitnessEstimate est =
        ghz_witness_shots(backend, build_ghz_circuit(2), 2, 40000, 33);
    CHECK(est.std_error > 0.0);
    CHECK(std::abs(est.fidelity - 1.0) <= 3.0 * est.std_error);
    CHECK(est.population == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("shot witness of the product state |000> is one half") {
    const ExactBackend backend(4);
    const WitnessEstimate est = ghz_witness_shots(backend, Circuit(3), 3, 40000, 44);
    CHECK(est.population == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(est.coherence) <= 3.0 * est.std_error * 2.0);
    CHECK(std::abs(est.fidelity - 0.5) <= 3.0 * est.std_error);
}

TEST_CASE("shot witness enforces its shot floor") {
    const ExactBackend backend(4);
    CHECK_THROWS_AS(ghz_witness_shots(backend, build_ghz_circuit(3), 3, 499, 1),
                    ValidationError);
    CHECK_NOTHROW(ghz_witness_shots(backend, build_ghz_circuit(3), 3, 500, 1));
}

TEST_CASE("shot witness agrees with the density oracle under noise") {
    // One shot per trajectory per setting makes the sampled counts exact
    // draws from the channel distribution, so the propagated standard error
    // is the right yardstick.
    const NoiseModel noise{0.02, 0.02, 0.0, 0.0};
    Circuit c = build_ghz_circuit(3);
    c.extend(build_mirror_load(3, 2, 60));
    const double oracle = state_fidelity(density_matrix_reference(c, noise), ghz_state(3));

    const TrajectoryBackend backend(noise, 5000, 4);
    const WitnessEstimate est = ghz_witness_shots(backend, c, 3, 25000, 61);
    CHECK(std::abs(est.fidelity - oracle) <= 3.0 * est.std_error);
}

TEST_CASE("shot witness tracks the exact witness on noisy trajectories") {
    const NoiseModel noise{0.03, 0.03, 0.0, 0.0};
    Circuit c = build_ghz_circuit(2);
    c.extend(build_mirror_load(2, 3, 70));
    const TrajectoryBackend backend(noise, 4000, 4);

    const double exact_mean = ghz_witness_exact(backend.trajectory_states(c, 71), 2);
    const WitnessEstimate est = ghz_witness_shots(backend, c, 2, 20000, 71);
    // Independent trajectory draws on both sides: allow both error scales.
    CHECK(std::abs(est.fidelity - exact_mean) <= 3.0 * est.std_error + 0.02);
}
