#include "qrk/kernels/streams.hpp"

#include <chrono>
#include <complex>
#include <cstdio>

#include "qrk/errors.hpp"
#include "qrk/kernels/mirror.hpp"
#include "qrk/qasm_sink.hpp"
#include "qrk/rng.hpp"
#include "qrk/simulator.hpp"

namespace qrk {

namespace {

void validate(const StreamsParams& params) {
    if (params.k_max < 1) {
        throw ValidationError("parallel streams needs k_max >= 1");
    }
    if (params.n_per_stream < 2) {
        throw ValidationError("parallel streams needs n_per_stream >= 2");
    }
    if (params.depth < 1) {
        throw ValidationError("parallel streams needs depth >= 1");
    }
    if (!(params.threshold > 0.0 && params.threshold < 1.0)) {
        throw ValidationError("witness threshold must lie in (0, 1)");
    }
}

} // namespace

Circuit build_stream_circuit(const StreamsParams& params, int s) {
    Circuit circuit = build_ghz_circuit(params.n_per_stream);
    circuit.extend(build_mirror_load(
        params.n_per_stream, params.depth,
        derive_seed(params.seed, "stream", static_cast<std::uint64_t>(s))));
    return circuit;
}

Circuit combine_streams(const std::vector<Circuit>& streams) {
    if (streams.empty()) {
        throw ValidationError("need at least one stream circuit");
    }
    const int n_per = streams[0].n_qubits();
    const std::size_t length = streams[0].gate_count();
    for (const Circuit& stream : streams) {
        if (stream.n_qubits() != n_per || stream.gate_count() != length) {
            throw ValidationError("stream circuits must have equal shape");
        }
    }
    const int k = static_cast<int>(streams.size());
    Circuit combined(k * n_per);
    for (std::size_t g = 0; g < length; ++g) {
        for (int s = 0; s < k; ++s) {
            Gate gate = streams[static_cast<std::size_t>(s)].gates()[g];
            gate.targets[0] += s * n_per;
            if (gate.arity() == 2) {
                gate.targets[1] += s * n_per;
            }
            combined.append(gate);
        }
    }
    return combined;
}

double marginal_ghz_fidelity(const StateVector& state, int first_qubit,
                             int block) {
    if (block < 1 || first_qubit < 0 ||
        first_qubit + block > state.n_qubits) {
        throw ValidationError("qubit block out of range");
    }
    const int n_env = state.n_qubits - block;
    const std::uint64_t low_mask = (1ULL << first_qubit) - 1;
    const std::uint64_t ones = ((1ULL << block) - 1) << first_qubit;
    double fidelity = 0.0;
    for (std::uint64_t e = 0; e < (1ULL << n_env); ++e) {
        const std::uint64_t base =
            (e & low_mask) | ((e >> first_qubit) << (first_qubit + block));
        const Amplitude overlap =
            state.amps[base] + state.amps[base | ones];
        fidelity += std::norm(overlap) / 2.0;
    }
    return fidelity;
}

StreamsResult compute_parallel_streams(const StreamsParams& params,
                                       const Backend& backend,
                                       QasmSink* qasm_sink) {
    validate(params);
    if (params.k_max * params.n_per_stream > backend.width()) {
        throw CapabilityError(
            "parallel streams needs " +
            std::to_string(params.k_max * params.n_per_stream) +
            " qubits but backend width is " + std::to_string(backend.width()));
    }
    const std::uint64_t single_ops = build_stream_circuit(params, 0).gate_count();
    const NoiseModel& noise = backend.noise();

    StreamsResult result;
    result.ops = single_ops;
    for (int k = 1; k <= params.k_max; ++k) {
        std::vector<Circuit> streams;
        streams.reserve(static_cast<std::size_t>(k));
        for (int s = 0; s < k; ++s) {
            streams.push_back(build_stream_circuit(params, s));
        }
        const Circuit combined = combine_streams(streams);
        if (qasm_sink != nullptr) {
            char tag[96];
            std::snprintf(tag, sizeof(tag), "k=%d n_per=%d depth=%d seed=%llu",
                          k, params.n_per_stream, params.depth,
                          static_cast<unsigned long long>(params.seed));
            qasm_sink->emit("streams", tag, combined);
        }
        std::vector<int> stream_ids(
            static_cast<std::size_t>(combined.n_qubits()));
        for (int q = 0; q < combined.n_qubits(); ++q) {
            stream_ids[static_cast<std::size_t>(q)] = q / params.n_per_stream;
        }

        std::vector<double> fidelity_sums(static_cast<std::size_t>(k), 0.0);
        std::uint64_t samples = 0;
        if (backend.is_exact() || noise.is_zero()) {
            const StateVector state = run_exact(combined);
            for (int s = 0; s < k; ++s) {
                fidelity_sums[static_cast<std::size_t>(s)] =
                    marginal_ghz_fidelity(state, s * params.n_per_stream,
                                          params.n_per_stream);
            }
            samples = 1;
        } else {
            const std::uint64_t k_seed = derive_seed(
                params.seed, "streams_k", static_cast<std::uint64_t>(k));
            for (std::uint64_t t = 0; t < backend.trajectories(); ++t) {
                const StateVector state = run_trajectory_streams(
                    combined, noise, stream_ids,
                    derive_seed(k_seed, "trajectory", t));
                for (int s = 0; s < k; ++s) {
                    fidelity_sums[static_cast<std::size_t>(s)] +=
                        marginal_ghz_fidelity(state, s * params.n_per_stream,
                                              params.n_per_stream);
                }
            }
            samples = backend.trajectories();
        }

        StreamsKRow row;
        row.k = k;
        row.all_pass = true;
        for (int s = 0; s < k; ++s) {
            const double mean = fidelity_sums[static_cast<std::size_t>(s)] /
                                static_cast<double>(samples);
            row.fidelities.push_back(mean);
            row.all_pass = row.all_pass && mean >= params.threshold;
        }
        if (row.all_pass) {
            result.k_achieved = k;
        }
        result.rows.push_back(std::move(row));
    }
    if (result.k_achieved >= 1) {
        result.per_stream_area =
            static_cast<std::uint64_t>(params.n_per_stream) * single_ops;
        result.score = static_cast<std::uint64_t>(result.k_achieved) *
                       result.per_stream_area;
    }
    return result;
}

KernelResult run_parallel_streams(const StreamsParams& params,
                                  const Backend& backend,
                                  QasmSink* qasm_sink) {
    const auto t0 = std::chrono::steady_clock::now();
    const StreamsResult sr = compute_parallel_streams(params, backend, qasm_sink);

    nlohmann::json rows = nlohmann::json::array();
    for (const StreamsKRow& row : sr.rows) {
        rows.push_back({{"k", row.k},
                        {"stream_fidelities", row.fidelities},
                        {"all_pass", row.all_pass}});
    }

    KernelResult result;
    result.kernel = "streams";
    result.params = {{"k_max", params.k_max},
                     {"n_per_stream", params.n_per_stream},
                     {"depth", params.depth},
                     {"threshold", params.threshold},
                     {"seed", params.seed}};
    result.pass = sr.k_achieved >= 1;
    result.metric = static_cast<double>(sr.score);
    result.seed = params.seed;
    result.details = {{"k_achieved", sr.k_achieved},
                      {"ops_per_stream", sr.ops},
                      {"per_stream_area", sr.per_stream_area},
                      {"score", sr.score},
                      {"rounds", std::move(rows)}};
    const auto t1 = std::chrono::steady_clock::now();
    result.wall_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return result;
}

} // namespace qrk
