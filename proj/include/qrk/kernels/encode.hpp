#pragma once

#include <cstdint>
#include <vector>

#include "qrk/backend.hpp"
#include "qrk/circuit.hpp"
#include "qrk/constants.hpp"
#include "qrk/result.hpp"

namespace qrk {

class QasmSink;

/// Parameters of the encode kernel: load the N+1 values 4*i*pi/N
/// (i = 0..N) into qubits, rotate each by a fixed offset, and verify the
/// resulting measurement distribution qubit by qubit.
struct EncodeParams {
    std::uint64_t n = 64;      // sequence upper index N (N+1 values)
    std::uint64_t shots = 4096;
    double alpha = 0.01;       // family-wise level, Bonferroni-split per qubit
    std::uint64_t seed = 12345;
    /// Rotation actually applied after encoding. Verification always targets
    /// the nominal pi/6, so setting this elsewhere injects a calibration
    /// fault the kernel is expected to catch.
    double offset = kPi / 6.0;
};

/// The value sequence: element i = 4*i*pi/N, i = 0..N inclusive.
std::vector<double> encode_values(std::uint64_t N);

/// One qubit per angle; per qubit: RY(angle) then RY(offset).
/// Gate count is 2 * angles.size().
Circuit build_encode_circuit(const std::vector<double>& angles,
                             double offset = kPi / 6.0);

/// Runs the encode kernel on `backend`, batching the N+1 qubits into
/// registers of at most the backend width. Each qubit i is checked against
/// the ideal P(1) = sin^2((theta_i + pi/6)/2): on an exact backend the
/// statevector probabilities must match within 1e-10 (and each batch state
/// must match the ideal product state); otherwise a two-sided binomial z-test
/// at level alpha/(N+1) is applied to the sampled counts. Pass requires every
/// qubit to pass; the metric is the largest absolute deviation seen.
KernelResult run_encode(const EncodeParams& params, const Backend& backend,
                        QasmSink* qasm_sink = nullptr);

} // namespace qrk
