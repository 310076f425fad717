#include <doctest.h>

#include <memory>

#include "qrk/backend.hpp"
#include "qrk/errors.hpp"
#include "qrk/kernels/mirror.hpp"
#include "qrk/rng.hpp"

#include "helpers.hpp"

using namespace qrk;

TEST_CASE("exact backend samples the noiseless distribution") {
    const ExactBackend backend(8);
    CHECK(backend.is_exact());
    CHECK(backend.trajectories() == 1);
    CHECK(backend.noise().is_zero());

    const Counts counts = backend.run(build_ghz_circuit(2), 2000, 42);
    CHECK(counts.shots == 2000);
    CHECK(counts.count("00") + counts.count("11") == 2000);
    CHECK(counts.count("00") > 0);
    CHECK(counts.count("11") > 0);
}

TEST_CASE("zero-noise trajectory backend equals the exact backend draw for draw") {
    const Circuit c = test::random_circuit(3, 20, 5);
    const ExactBackend exact(8);
    const TrajectoryBackend traj(NoiseModel{}, 50, 8);
    CHECK(exact.run(c, 1000, 9).histogram == traj.run(c, 1000, 9).histogram);
}

TEST_CASE("trajectory backend spreads shots over trajectories") {
    const TrajectoryBackend backend(NoiseModel{0.1, 0.1, 0.0, 0.0}, 7, 8);
    const Circuit c = test::random_circuit(2, 10, 3);
    const Counts counts = backend.run(c, 100, 4);
    CHECK(counts.shots == 100);
    CHECK(backend.trajectory_states(c, 4).size() == 7);
}

TEST_CASE("zero-noise trajectory backend collapses to a single state") {
    const TrajectoryBackend backend(NoiseModel{}, 200, 8);
    const Circuit c = test::random_circuit(2, 10, 3);
    CHECK(backend.trajectory_states(c, 4).size() == 1);
}

TEST_CASE("backends reject circuits wider than their register") {
    const ExactBackend backend(3);
    CHECK_THROWS_AS(backend.run(Circuit(4), 10, 1), CapabilityError);
    const TrajectoryBackend traj(NoiseModel{}, 10, 3);
    CHECK_THROWS_AS(traj.run(Circuit(4), 10, 1), CapabilityError);
}

TEST_CASE("full readout error flips every sampled bit") {
    const TrajectoryBackend backend(NoiseModel{0.0, 0.0, 1.0, 0.0}, 10, 4);
    const Counts counts = backend.run(Circuit(1), 50, 6);
    CHECK(counts.count("1") == 50);
}

TEST_CASE("ideal-suffix execution adds the suffix without noise") {
    // Forward circuit fully depolarizes, suffix must still act cleanly: an X
    // suffix on an empty forward circuit has to flip the readout exactly.
    const TrajectoryBackend backend(NoiseModel{1.0, 1.0, 0.0, 0.0}, 20, 4);
    Circuit suffix(1);
    suffix.x(0);
    const Counts counts = backend.run_with_ideal_suffix(Circuit(1), suffix, 40, 8);
    CHECK(counts.count("1") == 40);
}

TEST_CASE("make_backend resolves names and rejects unknown kinds") {
    const auto exact = make_backend("exact", NoiseModel{}, 100, 10);
    CHECK(exact->name() == "exact");
    CHECK(exact->width() == 10);
    const auto traj = make_backend("trajectory", NoiseModel{0.01, 0.0, 0.0, 0.0}, 100, 10);
    CHECK(traj->name() == "trajectory");
    CHECK(traj->trajectories() == 100);
    CHECK_THROWS_AS(make_backend("bogus", NoiseModel{}, 1, 4), ConfigError);
}

TEST_CASE("seed derivation separates domains and indices") {
    CHECK(derive_seed(1, "trajectory", 0) != derive_seed(1, "trajectory", 1));
    CHECK(derive_seed(1, "trajectory", 0) != derive_seed(1, "measure", 0));
    CHECK(derive_seed(1, "trajectory", 0) != derive_seed(2, "trajectory", 0));
    CHECK(derive_seed(1, "trajectory", 0) == derive_seed(1, "trajectory", 0));
}
