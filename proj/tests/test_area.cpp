#include <doctest.h>

#include <vector>

#include "qrk/backend.hpp"
#include "qrk/density.hpp"
#include "qrk/errors.hpp"
#include "qrk/kernels/area.hpp"
#include "qrk/kernels/mirror.hpp"
#include "qrk/rng.hpp"
#include "qrk/simulator.hpp"

using namespace qrk;

TEST_CASE("noiseless grid sustains its largest point") {
    const ExactBackend backend(16);
    CAParams params;
    params.n_max = 4;
    params.depth_max = 8;
    const CAResult result = compute_computational_area(params, backend);

    CHECK(result.best_n == 4);
    CHECK(result.best_depth == 8);
    for (const CAPoint& point : result.pass_map) {
        CHECK(point.pass);
        CHECK(point.witness >= 1.0 - 1e-9);
    }

    // Recount the winning circuit rather than trusting the kernel's formula.
    Circuit best = build_ghz_circuit(result.best_n);
    best.extend(build_mirror_load(
        result.best_n, result.best_depth,
        derive_seed(params.seed, "ca_mirror",
                    (static_cast<std::uint64_t>(result.best_n) << 32) |
                        static_cast<std::uint64_t>(result.best_depth))));
    CHECK(result.ops == best.gate_count());
    CHECK(result.area == static_cast<std::uint64_t>(result.best_n) * best.gate_count());
    CHECK(result.area == 368);
}

TEST_CASE("fully depolarizing two-qubit gates collapse the area to zero") {
    const TrajectoryBackend backend(NoiseModel{0.0, 1.0, 0.0, 0.0}, 50, 16);
    CAParams params;
    params.n_max = 3;
    params.depth_max = 4;
    const CAResult result = compute_computational_area(params, backend);
    CHECK(result.area == 0);
    CHECK(result.best_n == 0);
    for (const CAPoint& point : result.pass_map) {
        CHECK_FALSE(point.pass);
    }
}

TEST_CASE("oracle fidelity decreases monotonically in p2") {
    Circuit c = build_ghz_circuit(2);
    c.extend(build_mirror_load(2, 4, 5));
    std::vector<double> fidelities;
    for (double p2 : {0.0, 0.001, 0.01, 0.05, 0.2}) {
        const DensityMatrix rho =
            density_matrix_reference(c, NoiseModel{0.0, p2, 0.0, 0.0});
        fidelities.push_back(state_fidelity(rho, ghz_state(2)));
    }
    CHECK(fidelities.front() == doctest::Approx(1.0).epsilon(1e-9));
    for (std::size_t i = 1; i < fidelities.size(); ++i) {
        CHECK(fidelities[i] < fidelities[i - 1]);
    }
}

TEST_CASE("binary search reports every evaluated point") {
    const ExactBackend backend(16);
    CAParams params;
    params.n_max = 3;
    params.depth_max = 8;
    const CAResult result = compute_computational_area(params, backend);
    // Two n values, each probing at most ceil(log2(8)) + 1 = 4 depths.
    CHECK(result.pass_map.size() >= 2);
    CHECK(result.pass_map.size() <= 8);
    for (const CAPoint& point : result.pass_map) {
        CHECK(point.n >= 2);
        CHECK(point.n <= 3);
        CHECK(point.L >= 1);
        CHECK(point.L <= 8);
        CHECK(point.ops > 0);
    }
}

TEST_CASE("kernel wrapper passes iff the area is positive") {
    const ExactBackend backend(16);
    CAParams params;
    params.n_max = 2;
    params.depth_max = 2;
    const KernelResult good = run_computational_area(params, backend);
    CHECK(good.pass);
    CHECK(good.metric == static_cast<double>(good.details.at("area").get<std::uint64_t>()));

    const TrajectoryBackend noisy(NoiseModel{0.0, 1.0, 0.0, 0.0}, 30, 16);
    const KernelResult bad = run_computational_area(params, noisy);
    CHECK_FALSE(bad.pass);
    CHECK(bad.metric == 0.0);
}

TEST_CASE("area parameters are validated") {
    const ExactBackend backend(16);
    CAParams params;
    params.n_max = 1;
    CHECK_THROWS_AS(compute_computational_area(params, backend), ValidationError);
    params.n_max = 4;
    params.threshold = 1.5;
    CHECK_THROWS_AS(compute_computational_area(params, backend), ValidationError);
    params.threshold = 0.5;
    params.depth_max = 0;
    CHECK_THROWS_AS(compute_computational_area(params, backend), ValidationError);
}

TEST_CASE("shot-based witness mode works on the noiseless grid") {
    const ExactBackend backend(16);
    CAParams params;
    params.n_max = 3;
    params.depth_max = 2;
    params.witness_mode = WitnessMode::Shots;
    params.shots = 4096;
    const CAResult result = compute_computational_area(params, backend);
    CHECK(result.best_n == 3);
    CHECK(result.best_depth == 2);
    CHECK(result.area > 0);
}
