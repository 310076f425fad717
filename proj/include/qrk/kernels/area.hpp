#pragma once

#include <cstdint>
#include <vector>

#include "qrk/backend.hpp"
#include "qrk/result.hpp"

namespace qrk {

class QasmSink;

/// How a grid point's GHZ fidelity is estimated: from per-trajectory
/// statevector overlaps (exact) or from measurement counts (shots).
enum class WitnessMode { Exact, Shots };

/// Parameters of the computational-area kernel: over the grid n = 2..n_max,
/// L = 1..depth_max, find the largest sustained product of entangled qubits
/// and executed operations.
struct CAParams {
    int n_max = 6;
    int depth_max = 8;              // maximum mirror half-depth L
    double threshold = 0.5;         // witness bound certifying entanglement
    std::uint64_t shots = 4096;     // per grid point, shots witness mode only
    WitnessMode witness_mode = WitnessMode::Exact;
    std::uint64_t seed = 12345;
};

/// One evaluated grid point: GHZ prep + mirror load at (n, L).
struct CAPoint {
    int n = 0;
    int L = 0;
    std::uint64_t ops = 0; // gate count of the constructed circuit
    double witness = 0.0;
    bool pass = false;
};

struct CAResult {
    int best_n = 0;
    int best_depth = 0;
    std::uint64_t ops = 0;  // gate count at the best point
    std::uint64_t area = 0; // max over passing points of n * ops(n, L); 0 if none
    std::vector<CAPoint> pass_map; // every point the search evaluated
};

/// For each n, binary-searches the largest L in 1..depth_max whose witness
/// estimate reaches the threshold (depth monotonicity assumed for the search;
/// every evaluated point is recorded so anomalies stay visible). Operation
/// counts are taken from the constructed circuits, never from a formula.
CAResult compute_computational_area(const CAParams& params,
                                    const Backend& backend,
                                    QasmSink* qasm_sink = nullptr);

/// Kernel wrapper: pass iff area > 0, metric = area.
KernelResult run_computational_area(const CAParams& params,
                                    const Backend& backend,
                                    QasmSink* qasm_sink = nullptr);

} // namespace qrk
