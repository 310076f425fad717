#include "qrk/runner.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "qrk/backend.hpp"
#include "qrk/errors.hpp"
#include "qrk/kernels/area.hpp"
#include "qrk/kernels/encode.hpp"
#include "qrk/kernels/mirror.hpp"
#include "qrk/kernels/streams.hpp"
#include "qrk/qasm_sink.hpp"

namespace qrk {

namespace {

/// Gate count of GHZ prep + mirror load at (n, L); independent of the seed.
std::uint64_t workload_ops(int n, int L) {
    Circuit circuit = build_ghz_circuit(n);
    circuit.extend(build_mirror_load(n, L, 0));
    return circuit.gate_count();
}

} // namespace

double composite_score(const std::vector<KernelResult>& results,
                       const std::map<std::string, double>& weights,
                       const RunConfig& config) {
    double total = 0.0;
    for (const auto& [kernel, weight] : weights) {
        const KernelResult* found = nullptr;
        for (const KernelResult& result : results) {
            if (result.kernel == kernel) {
                found = &result;
                break;
            }
        }
        if (found == nullptr) {
            throw ConfigError("no result for weighted kernel '" + kernel +
                              "'");
        }
        if (!std::isfinite(found->metric)) {
            throw ConfigError("metric of weighted kernel '" + kernel +
                              "' is not finite");
        }
        double normalized = 0.0;
        if (kernel == "encode") {
            normalized = std::clamp(1.0 - found->metric, 0.0, 1.0);
        } else if (kernel == "ca") {
            const double grid_max =
                static_cast<double>(config.n_max) *
                static_cast<double>(workload_ops(config.n_max,
                                                 config.depth_max));
            normalized = found->metric / grid_max;
        } else if (kernel == "streams") {
            const double grid_max =
                static_cast<double>(config.k_max) *
                static_cast<double>(config.n_per_stream) *
                static_cast<double>(workload_ops(config.n_per_stream,
                                                 config.streams_depth));
            normalized = found->metric / grid_max;
        } else {
            throw ConfigError("unknown kernel '" + kernel + "' in weights");
        }
        total += weight * normalized;
    }
    return total;
}

RunOutcome run_suite(const RunConfig& config) {
    config.validate();
    const auto backend = make_backend(config.backend, config.noise,
                                      config.trajectories, config.width);
    std::optional<QasmSink> sink;
    if (!config.emit_qasm_dir.empty()) {
        sink.emplace(config.emit_qasm_dir);
    }
    QasmSink* sink_ptr = sink.has_value() ? &*sink : nullptr;

    Report report;
    report.timestamp = rfc3339_utc_now();
    report.config = config.to_json();
    bool all_pass = true;
    for (const std::string& kernel : config.kernels) {
        KernelResult result;
        try {
            if (kernel == "encode") {
                EncodeParams params;
                params.n = config.encode_n;
                params.shots = config.shots;
                params.alpha = config.alpha;
                params.seed = config.seed;
                params.offset = config.encode_offset;
                result = run_encode(params, *backend, sink_ptr);
            } else if (kernel == "ca") {
                CAParams params;
                params.n_max = config.n_max;
                params.depth_max = config.depth_max;
                params.threshold = config.threshold;
                params.shots = config.shots;
                params.witness_mode = config.witness_mode == "shots"
                                          ? WitnessMode::Shots
                                          : WitnessMode::Exact;
                params.seed = config.seed;
                result = run_computational_area(params, *backend, sink_ptr);
            } else {
                StreamsParams params;
                params.k_max = config.k_max;
                params.n_per_stream = config.n_per_stream;
                params.depth = config.streams_depth;
                params.threshold = config.threshold;
                params.seed = config.seed;
                result = run_parallel_streams(params, *backend, sink_ptr);
            }
        } catch (const Error& e) {
            // Execution-level failure: keep the suite going, record the
            // failed row so the report explains the exit code.
            result = KernelResult{};
            result.kernel = kernel;
            result.seed = config.seed;
            result.details = {{"error", e.what()}};
        }
        all_pass = all_pass && result.pass;
        report.results.push_back(std::move(result));
    }
    if (config.weights.has_value()) {
        report.composite =
            composite_score(report.results, *config.weights, config);
    }
    RunOutcome outcome;
    outcome.report = std::move(report);
    outcome.exit_code = all_pass ? 0 : 1;
    return outcome;
}

} // namespace qrk
