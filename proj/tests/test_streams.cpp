#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qrk/backend.hpp"
#include "qrk/density.hpp"
#include "qrk/errors.hpp"
#include "qrk/kernels/streams.hpp"
#include "qrk/rng.hpp"
#include "qrk/simulator.hpp"

#include "helpers.hpp"

using namespace qrk;

TEST_CASE("stream circuits are per-stream deterministic and interleave cleanly") {
    StreamsParams params;
    params.n_per_stream = 3;
    params.depth = 4;
    const Circuit s0 = build_stream_circuit(params, 0);
    const Circuit s1 = build_stream_circuit(params, 1);
    CHECK(s0 == build_stream_circuit(params, 0));
    CHECK_FALSE(s0 == s1);
    CHECK(s0.gate_count() == s1.gate_count());

    const Circuit combined = combine_streams({s0, s1});
    CHECK(combined.n_qubits() == 6);
    CHECK(combined.gate_count() == s0.gate_count() + s1.gate_count());
    // Gate-by-gate interleave: gate 0 of stream 0, gate 0 of stream 1, ...
    CHECK(combined.gates()[0].kind == s0.gates()[0].kind);
    CHECK(combined.gates()[1].kind == s1.gates()[0].kind);
    CHECK(combined.gates()[1].targets[0] == s1.gates()[0].targets[0] + 3);
}

TEST_CASE("combine_streams validates its inputs") {
    StreamsParams params;
    const Circuit s0 = build_stream_circuit(params, 0);
    Circuit short_circuit(params.n_per_stream);
    short_circuit.h(0);
    CHECK_THROWS_AS(combine_streams({s0, short_circuit}), ValidationError);
    CHECK_THROWS_AS(combine_streams({}), ValidationError);
}

TEST_CASE("noiseless streams reach the full concurrency target") {
    const ExactBackend backend(16);
    StreamsParams params; // k_max 4, 3 qubits per stream, depth 4
    const StreamsResult result = compute_parallel_streams(params, backend);
    CHECK(result.k_achieved == 4);
    CHECK(result.ops == build_stream_circuit(params, 0).gate_count());
    CHECK(result.per_stream_area == 3 * result.ops);
    CHECK(result.score == 4 * result.per_stream_area);
    REQUIRE(result.rows.size() == 4);
    for (const StreamsKRow& row : result.rows) {
        CHECK(row.all_pass);
        REQUIRE(row.fidelities.size() == static_cast<std::size_t>(row.k));
        for (double f : row.fidelities) {
            CHECK(f >= 1.0 - 1e-9);
        }
    }
}

TEST_CASE("combined statevector is the tensor product of its streams") {
    StreamsParams params;
    params.n_per_stream = 3;
    params.depth = 2;
    for (int k : {2, 3}) {
        std::vector<Circuit> streams;
        for (int s = 0; s < k; ++s) {
            streams.push_back(build_stream_circuit(params, s));
        }
        const StateVector combined = run_exact(combine_streams(streams));

        std::vector<StateVector> singles;
        for (const Circuit& c : streams) {
            singles.push_back(run_exact(c));
        }
        // Overlap of the combined state with the explicit tensor product.
        const int np = params.n_per_stream;
        const std::uint64_t mask = (1ULL << np) - 1;
        Amplitude overlap{0.0, 0.0};
        for (std::uint64_t idx = 0; idx < combined.dim(); ++idx) {
            Amplitude product{1.0, 0.0};
            for (int s = 0; s < k; ++s) {
                product *= singles[static_cast<std::size_t>(s)]
                               .amps[(idx >> (s * np)) & mask];
            }
            overlap += std::conj(product) * combined.amps[idx];
        }
        CHECK(std::norm(overlap) >= 1.0 - 1e-9);
    }
}

TEST_CASE("marginal fidelity reads one stream out of the register") {
    StreamsParams params;
    params.n_per_stream = 2;
    params.depth = 1;
    const Circuit combined = combine_streams(
        {build_stream_circuit(params, 0), build_stream_circuit(params, 1)});
    const StateVector state = run_exact(combined);
    CHECK(marginal_ghz_fidelity(state, 0, 2) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(marginal_ghz_fidelity(state, 2, 2) == doctest::Approx(1.0).epsilon(1e-9));

    // A product register holds no GHZ coherence: fidelity 0.5 from population.
    const StateVector zeros = StateVector::zero(4);
    CHECK(marginal_ghz_fidelity(zeros, 0, 2) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("crosstalk degrades streams and the oracle confirms the direction") {
    StreamsParams params;
    params.k_max = 2;
    params.n_per_stream = 2;
    params.depth = 4;
    params.seed = 77;

    const NoiseModel xt{0.0, 0.0, 0.0, 0.2};
    const TrajectoryBackend noisy(xt, 400, 16);
    const ExactBackend clean(16);

    const StreamsResult degraded = compute_parallel_streams(params, noisy);
    const StreamsResult ideal = compute_parallel_streams(params, clean);
    REQUIRE(degraded.rows.size() == 2);
    REQUIRE(ideal.rows.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& noisy_row = degraded.rows[1];
        const auto& clean_row = ideal.rows[1];
        CHECK(noisy_row.fidelities[i] < clean_row.fidelities[i] - 0.05);
    }

    // Exact channel evolution of the 4-qubit combined system agrees that
    // crosstalk pulls the marginals down.
    std::vector<Circuit> streams{build_stream_circuit(params, 0),
                                 build_stream_circuit(params, 1)};
    const Circuit combined = combine_streams(streams);
    std::vector<int> stream_ids{0, 0, 1, 1};
    const DensityMatrix rho =
        density_matrix_reference_streams(combined, xt, stream_ids);
    const DensityMatrix rho_clean =
        density_matrix_reference_streams(combined, NoiseModel{}, stream_ids);
    for (int s = 0; s < 2; ++s) {
        const DensityMatrix reduced =
            partial_trace(rho, {2 * s, 2 * s + 1});
        const DensityMatrix reduced_clean =
            partial_trace(rho_clean, {2 * s, 2 * s + 1});
        const double noisy_f = state_fidelity(reduced, ghz_state(2));
        const double clean_f = state_fidelity(reduced_clean, ghz_state(2));
        CHECK(clean_f == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(noisy_f < clean_f - 0.05);
    }
}

TEST_CASE("without crosstalk a stream behaves as if it ran alone") {
    StreamsParams params;
    params.k_max = 2;
    params.n_per_stream = 2;
    params.depth = 2;
    params.seed = 31;
    const NoiseModel noise{0.02, 0.02, 0.0, 0.0};

    // Stream 0 run alone.
    const Circuit alone = build_stream_circuit(params, 0);
    const std::uint64_t trials = 2000;
    std::vector<double> single_fids;
    for (std::uint64_t t = 0; t < trials; ++t) {
        single_fids.push_back(exact_fidelity(
            run_trajectory(alone, noise, derive_seed(5000, "trajectory", t)),
            ghz_state(2)));
    }

    // Stream 0 as the first member of a 2-stream register.
    const Circuit combined = combine_streams(
        {alone, build_stream_circuit(params, 1)});
    const std::vector<int> stream_ids{0, 0, 1, 1};
    std::vector<double> marginal_fids;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const StateVector state = run_trajectory_streams(
            combined, noise, stream_ids, derive_seed(6000, "trajectory", t));
        marginal_fids.push_back(marginal_ghz_fidelity(state, 0, 2));
    }

    const auto single = test::sample_stats(single_fids);
    const auto marginal = test::sample_stats(marginal_fids);
    const double band =
        3.0 * std::sqrt(single.std_error * single.std_error +
                        marginal.std_error * marginal.std_error);
    CHECK(std::abs(single.mean - marginal.mean) <= band);
}

TEST_CASE("streams kernel wrapper carries the score and verdict") {
    const ExactBackend backend(16);
    StreamsParams params;
    params.k_max = 2;
    params.n_per_stream = 2;
    params.depth = 1;
    const KernelResult result = run_parallel_streams(params, backend);
    CHECK(result.pass);
    CHECK(result.metric == static_cast<double>(result.details.at("score").get<std::uint64_t>()));
    CHECK(result.details.at("k_achieved").get<int>() == 2);
}

TEST_CASE("stream width beyond the backend is a capability error") {
    const ExactBackend backend(8);
    StreamsParams params;
    params.k_max = 4;
    params.n_per_stream = 3; // 12 qubits > backend width 8
    CHECK_THROWS_AS(compute_parallel_streams(params, backend), CapabilityError);
}

TEST_CASE("stream parameters are validated") {
    const ExactBackend backend(16);
    StreamsParams params;
    params.k_max = 0;
    CHECK_THROWS_AS(compute_parallel_streams(params, backend), ValidationError);
    params.k_max = 2;
    params.n_per_stream = 1;
    CHECK_THROWS_AS(compute_parallel_streams(params, backend), ValidationError);
}
