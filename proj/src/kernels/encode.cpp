#include "qrk/kernels/encode.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "qrk/errors.hpp"
#include "qrk/qasm_sink.hpp"
#include "qrk/rng.hpp"
#include "qrk/simulator.hpp"
#include "qrk/stats.hpp"

namespace qrk {

std::vector<double> encode_values(std::uint64_t N) {
    if (N == 0) {
        throw ValidationError("encode needs N >= 1");
    }
    std::vector<double> values(N + 1);
    for (std::uint64_t i = 0; i <= N; ++i) {
        values[i] = 4.0 * static_cast<double>(i) * kPi / static_cast<double>(N);
    }
    return values;
}

Circuit build_encode_circuit(const std::vector<double>& angles,
                             double offset) {
    if (angles.empty()) {
        throw ValidationError("encode circuit needs at least one angle");
    }
    Circuit circuit(static_cast<int>(angles.size()));
    for (int q = 0; q < static_cast<int>(angles.size()); ++q) {
        circuit.ry(q, angles[static_cast<std::size_t>(q)]);
        circuit.ry(q, offset);
    }
    return circuit;
}

namespace {

/// P(qubit q reads 1) from the statevector.
double one_probability(const StateVector& state, int q) {
    const std::uint64_t mask = 1ULL << q;
    double p = 0.0;
    for (std::uint64_t idx = 0; idx < state.dim(); ++idx) {
        if (idx & mask) {
            p += std::norm(state.amps[idx]);
        }
    }
    return p;
}

/// Ideal product state for a batch: qubit q at total rotation angles[q]+pi/6.
StateVector ideal_batch_state(const std::vector<double>& angles) {
    const int n = static_cast<int>(angles.size());
    StateVector state = StateVector::zero(n);
    for (std::uint64_t idx = 0; idx < state.dim(); ++idx) {
        double amp = 1.0;
        for (int q = 0; q < n; ++q) {
            const double half = (angles[static_cast<std::size_t>(q)] +
                                 kPi / 6.0) /
                                2.0;
            amp *= (idx >> q) & 1 ? std::sin(half) : std::cos(half);
        }
        state.amps[idx] = amp;
    }
    return state;
}

std::uint64_t ones_on_qubit(const Counts& counts, int q) {
    std::uint64_t ones = 0;
    const std::size_t pos = static_cast<std::size_t>(counts.n_qubits - 1 - q);
    for (const auto& [key, count] : counts.histogram) {
        if (key[pos] == '1') {
            ones += count;
        }
    }
    return ones;
}

} // namespace

KernelResult run_encode(const EncodeParams& params, const Backend& backend,
                        QasmSink* qasm_sink) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> values = encode_values(params.n);
    const std::uint64_t total = values.size();
    const int width = backend.width();
    const std::uint64_t batches =
        (total + static_cast<std::uint64_t>(width) - 1) /
        static_cast<std::uint64_t>(width);
    const double per_test_alpha = bonferroni(params.alpha, total);
    const bool exact_mode = backend.is_exact();

    bool all_pass = true;
    double max_deviation = 0.0;
    double min_batch_fidelity = 1.0;
    nlohmann::json qubit_rows = nlohmann::json::array();

    for (std::uint64_t b = 0; b < batches; ++b) {
        const std::uint64_t lo = b * static_cast<std::uint64_t>(width);
        const std::uint64_t hi = std::min(
            lo + static_cast<std::uint64_t>(width), total);
        const std::vector<double> chunk(values.begin() + lo,
                                        values.begin() + hi);
        const Circuit circuit = build_encode_circuit(chunk, params.offset);
        if (qasm_sink != nullptr) {
            char tag[128];
            std::snprintf(tag, sizeof(tag),
                          "N=%llu shots=%llu seed=%llu batch=%llu",
                          static_cast<unsigned long long>(params.n),
                          static_cast<unsigned long long>(params.shots),
                          static_cast<unsigned long long>(params.seed),
                          static_cast<unsigned long long>(b));
            qasm_sink->emit("encode", tag, circuit);
        }

        StateVector state = StateVector::zero(1);
        Counts counts;
        if (exact_mode) {
            state = backend.trajectory_states(
                circuit, derive_seed(params.seed, "encode_batch", b))[0];
            const double fid = exact_fidelity(state, ideal_batch_state(chunk));
            min_batch_fidelity = std::min(min_batch_fidelity, fid);
            if (fid < 1.0 - 1e-10) {
                all_pass = false;
            }
        } else {
            counts = backend.run(circuit, params.shots,
                                 derive_seed(params.seed, "encode_batch", b));
        }

        for (std::uint64_t j = lo; j < hi; ++j) {
            const int q = static_cast<int>(j - lo);
            const double theta = values[j];
            const double expected =
                std::sin((theta + kPi / 6.0) / 2.0) *
                std::sin((theta + kPi / 6.0) / 2.0);
            nlohmann::json row;
            row["index"] = j;
            row["theta"] = theta;
            row["expected_p"] = expected;
            bool q_pass = false;
            double observed = 0.0;
            if (exact_mode) {
                observed = one_probability(state, q);
                q_pass = std::fabs(observed - expected) <= 1e-10;
                row["z"] = nullptr;
            } else {
                const std::uint64_t ones = ones_on_qubit(counts, q);
                const TestOutcome outcome = binomial_ztest(
                    ones, params.shots, expected, per_test_alpha);
                observed = outcome.observed;
                q_pass = outcome.pass;
                row["z"] = outcome.z;
            }
            const double deviation = std::fabs(observed - expected);
            max_deviation = std::max(max_deviation, deviation);
            all_pass = all_pass && q_pass;
            row["observed_p"] = observed;
            row["deviation"] = deviation;
            row["pass"] = q_pass;
            qubit_rows.push_back(std::move(row));
        }
    }

    KernelResult result;
    result.kernel = "encode";
    result.params = {{"N", params.n},
                     {"shots", params.shots},
                     {"alpha", params.alpha},
                     {"offset", params.offset},
                     {"seed", params.seed}};
    result.pass = all_pass;
    result.metric = max_deviation;
    result.seed = params.seed;
    result.details = {{"mode", exact_mode ? "exact" : "shots"},
                      {"batches", batches},
                      {"batch_width", width},
                      {"per_test_alpha", per_test_alpha},
                      {"qubits", std::move(qubit_rows)}};
    if (exact_mode) {
        result.details["min_batch_fidelity"] = min_batch_fidelity;
    }
    const auto t1 = std::chrono::steady_clock::now();
    result.wall_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return result;
}

} // namespace qrk
