#pragma once

#include <cstdint>
#include <vector>

#include "qrk/backend.hpp"
#include "qrk/circuit.hpp"
#include "qrk/result.hpp"
#include "qrk/statevector.hpp"

namespace qrk {

class QasmSink;

/// Parameters of the parallel-streams kernel: k disjoint registers, each
/// running its own GHZ prep + mirror load, interleaved gate-by-gate so
/// crosstalk between concurrent streams is exercised.
struct StreamsParams {
    int k_max = 4;
    int n_per_stream = 3;
    int depth = 4; // mirror half-depth per stream
    double threshold = 0.5;
    std::uint64_t seed = 12345;
};

/// Evidence from one concurrency level k.
struct StreamsKRow {
    int k = 0;
    std::vector<double> fidelities; // per-stream mean marginal GHZ fidelity
    bool all_pass = false;
};

struct StreamsResult {
    int k_achieved = 0; // largest k whose streams all pass the witness
    std::uint64_t per_stream_area = 0; // n_per_stream * ops, 0 if none pass
    std::uint64_t score = 0;           // k_achieved * per_stream_area
    std::uint64_t ops = 0;             // gate count of one stream's circuit
    std::vector<StreamsKRow> rows;
};

/// The workload of stream `s`: GHZ prep + mirror load on n_per_stream
/// qubits, seeded per stream (independent of how many streams run beside it).
Circuit build_stream_circuit(const StreamsParams& params, int s);

/// Interleaves equal-length stream circuits gate-by-gate onto one register,
/// stream s occupying qubits [s * n_per, (s+1) * n_per).
Circuit combine_streams(const std::vector<Circuit>& streams);

/// GHZ fidelity of the reduced state of the contiguous qubit block
/// [first_qubit, first_qubit + block) of `state`.
double marginal_ghz_fidelity(const StateVector& state, int first_qubit,
                             int block);

/// For k = 1..k_max, runs the combined k-stream circuit (with crosstalk
/// depolarization on qubits outside a stream during that stream's 2-qubit
/// gates) and checks every stream's marginal GHZ fidelity against the
/// threshold. k_achieved is the largest k with all streams passing.
StreamsResult compute_parallel_streams(const StreamsParams& params,
                                       const Backend& backend,
                                       QasmSink* qasm_sink = nullptr);

/// Kernel wrapper: pass iff k_achieved >= 1, metric = score.
KernelResult run_parallel_streams(const StreamsParams& params,
                                  const Backend& backend,
                                  QasmSink* qasm_sink = nullptr);

} // namespace qrk
