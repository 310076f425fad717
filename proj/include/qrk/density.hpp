#pragma once

#include <string_view>
#include <vector>

#include "qrk/circuit.hpp"
#include "qrk/statevector.hpp"

namespace qrk {

/// Dense density matrix, row-major. Exists as an exact-noise oracle for
/// cross-validating the trajectory sampler; capped at 4 qubits.
struct DensityMatrix {
    int n_qubits = 0;
    std::size_t dim = 0;
    std::vector<Amplitude> data; // dim * dim entries

    static DensityMatrix zero_state(int n_qubits);
    static DensityMatrix maximally_mixed(int n_qubits);
    static DensityMatrix from_pure(const StateVector& state);

    Amplitude& at(std::size_t row, std::size_t col) { return data[row * dim + col]; }
    const Amplitude& at(std::size_t row, std::size_t col) const {
        return data[row * dim + col];
    }

    double trace_real() const;
    double hermiticity_defect() const; // max |rho[i][j] - conj(rho[j][i])|
};

/// Exact evolution of the depolarizing-channel model the trajectory sampler
/// realizes stochastically: each gate's unitary, then the depolarizing
/// channel of matching probability on its targets. Throws CapabilityError
/// above 4 qubits.
DensityMatrix density_matrix_reference(const Circuit& circuit, const NoiseModel& noise);

/// Same oracle for multi-stream circuits: after each 2-qubit gate, every
/// qubit outside that gate's stream is additionally depolarized at the
/// crosstalk rate.
DensityMatrix density_matrix_reference_streams(const Circuit& circuit,
                                               const NoiseModel& noise,
                                               const std::vector<int>& stream_ids);

/// <psi| rho |psi>.
double state_fidelity(const DensityMatrix& rho, const StateVector& psi);

/// tr(rho P) for a Pauli string (character i acts on qubit i).
double expectation_pauli(const DensityMatrix& rho, std::string_view pauli_string);

/// Reduced density matrix over `keep_qubits` (ascending), tracing out the rest.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep_qubits);

} // namespace qrk
