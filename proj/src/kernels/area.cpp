#include "qrk/kernels/area.hpp"

#include <chrono>
#include <cstdio>

#include "qrk/errors.hpp"
#include "qrk/kernels/mirror.hpp"
#include "qrk/kernels/witness.hpp"
#include "qrk/qasm_sink.hpp"
#include "qrk/rng.hpp"

namespace qrk {

namespace {

void validate(const CAParams& params) {
    if (params.n_max < 2) {
        throw ValidationError("computational area needs n_max >= 2");
    }
    if (params.depth_max < 1) {
        throw ValidationError("computational area needs depth_max >= 1");
    }
    if (!(params.threshold > 0.0 && params.threshold < 1.0)) {
        throw ValidationError("witness threshold must lie in (0, 1)");
    }
}

CAPoint evaluate_point(const CAParams& params, const Backend& backend,
                       QasmSink* qasm_sink, int n, int L) {
    const std::uint64_t idx =
        (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(L);
    Circuit circuit = build_ghz_circuit(n);
    circuit.extend(
        build_mirror_load(n, L, derive_seed(params.seed, "ca_mirror", idx)));
    if (qasm_sink != nullptr) {
        char tag[96];
        std::snprintf(tag, sizeof(tag), "n=%d L=%d seed=%llu", n, L,
                      static_cast<unsigned long long>(params.seed));
        qasm_sink->emit("ca", tag, circuit);
    }
    const std::uint64_t witness_seed = derive_seed(params.seed, "ca_witness", idx);
    double witness = 0.0;
    if (params.witness_mode == WitnessMode::Shots) {
        witness =
            ghz_witness_shots(backend, circuit, n, params.shots, witness_seed)
                .fidelity;
    } else {
        witness = ghz_witness_exact(
            backend.trajectory_states(circuit, witness_seed), n);
    }
    CAPoint point;
    point.n = n;
    point.L = L;
    point.ops = circuit.gate_count();
    point.witness = witness;
    point.pass = witness >= params.threshold;
    return point;
}

} // namespace

CAResult compute_computational_area(const CAParams& params,
                                    const Backend& backend,
                                    QasmSink* qasm_sink) {
    validate(params);
    CAResult result;
    for (int n = 2; n <= params.n_max; ++n) {
        int lo = 1;
        int hi = params.depth_max;
        CAPoint best_for_n;
        bool found = false;
        while (lo <= hi) {
            const int mid = lo + (hi - lo) / 2;
            const CAPoint point =
                evaluate_point(params, backend, qasm_sink, n, mid);
            result.pass_map.push_back(point);
            if (point.pass) {
                best_for_n = point;
                found = true;
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        if (found) {
            const std::uint64_t area =
                static_cast<std::uint64_t>(n) * best_for_n.ops;
            if (area > result.area) {
                result.area = area;
                result.best_n = n;
                result.best_depth = best_for_n.L;
                result.ops = best_for_n.ops;
            }
        }
    }
    return result;
}

KernelResult run_computational_area(const CAParams& params,
                                    const Backend& backend,
                                    QasmSink* qasm_sink) {
    const auto t0 = std::chrono::steady_clock::now();
    const CAResult ca = compute_computational_area(params, backend, qasm_sink);

    nlohmann::json points = nlohmann::json::array();
    for (const CAPoint& p : ca.pass_map) {
        points.push_back({{"n", p.n},
                          {"L", p.L},
                          {"ops", p.ops},
                          {"witness", p.witness},
                          {"pass", p.pass}});
    }

    KernelResult result;
    result.kernel = "ca";
    result.params = {
        {"n_max", params.n_max},
        {"depth_max", params.depth_max},
        {"threshold", params.threshold},
        {"shots", params.shots},
        {"witness_mode",
         params.witness_mode == WitnessMode::Shots ? "shots" : "exact"},
        {"seed", params.seed}};
    result.pass = ca.area > 0;
    result.metric = static_cast<double>(ca.area);
    result.seed = params.seed;
    result.details = {{"best_n", ca.best_n},
                      {"best_depth", ca.best_depth},
                      {"ops", ca.ops},
                      {"area", ca.area},
                      {"points", std::move(points)}};
    const auto t1 = std::chrono::steady_clock::now();
    result.wall_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return result;
}

} // namespace qrk
