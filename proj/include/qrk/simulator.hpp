#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qrk/circuit.hpp"
#include "qrk/statevector.hpp"

namespace qrk {

/// Applies one gate in place. Norm is preserved to ~1e-16 per gate; nothing
/// is renormalized, so drift stays observable.
void apply_gate_inplace(StateVector& state, const Gate& gate);

/// Functional form: returns the transformed state.
StateVector apply_gate(StateVector state, const Gate& gate);

/// All gates in order, starting from |0...0>.
StateVector run_exact(const Circuit& circuit);

// Trajectory noise realization
// ----------------------------
// After each gate, one uniform double is drawn; if it falls below the gate's
// depolarizing probability (p1 or p2 by arity), one more draw picks a
// uniformly random non-identity Pauli on the gate's targets:
//   1-qubit: index in [0,3) -> X, Y, Z
//   2-qubit: index in [0,15) + 1 -> pair (idx>>2 on targets[0], idx&3 on
//            targets[1]) with 0=I, 1=X, 2=Y, 3=Z
// Draws happen in circuit order, so a run is a pure function of
// (circuit, noise, seed). With an all-zero model the amplitudes are
// bit-identical to run_exact.

/// One stochastic trajectory of the noisy circuit.
StateVector run_trajectory(const Circuit& circuit, const NoiseModel& noise,
                           std::uint64_t seed);

/// Trajectory execution for a circuit holding several independent streams.
/// stream_ids maps each qubit to its stream. Whenever a 2-qubit gate of
/// stream s fires and crosstalk > 0, every qubit outside s is depolarized
/// with that probability (one uniform draw per such qubit, ascending index,
/// after the gate's own noise draw). With a single stream or zero crosstalk
/// the draw sequence matches run_trajectory exactly.
StateVector run_trajectory_streams(const Circuit& circuit, const NoiseModel& noise,
                                   const std::vector<int>& stream_ids,
                                   std::uint64_t seed);

// Sampling: per shot, one uniform draw inverts the cumulative |amplitude|^2
// distribution; when readout > 0, one further draw per qubit (ascending)
// flips that bit with the readout probability.

/// `shots` independent measurements of the state. Throws ValidationError for
/// shots = 0.
Counts sample_counts(const StateVector& state, std::uint64_t shots, double readout,
                     std::uint64_t seed);

/// |<reference|state>|^2. Registers must have equal width.
double exact_fidelity(const StateVector& state, const StateVector& reference);

/// <state| P |state> for a Pauli string over {I,X,Y,Z}, character i acting on
/// qubit i. The result is real up to rounding; the real part is returned.
double expectation_pauli(const StateVector& state, std::string_view pauli_string);

/// The GHZ state (|0...0> + |1...1>)/sqrt(2) on n qubits (n >= 2).
StateVector ghz_state(int n_qubits);

} // namespace qrk
