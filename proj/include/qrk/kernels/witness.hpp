#pragma once

#include <cstdint>
#include <vector>

#include "qrk/backend.hpp"
#include "qrk/circuit.hpp"
#include "qrk/statevector.hpp"

namespace qrk {

/// Simulator-exact witness: mean over the trajectory ensemble of the exact
/// fidelity to the n-qubit GHZ state.
double ghz_witness_exact(const std::vector<StateVector>& final_states, int n);

/// Shot-based GHZ fidelity estimate and its ingredients. `fidelity` is the
/// raw estimator (P + C)/2 and may fall slightly outside [0, 1] from
/// sampling; it is reported unclamped.
struct WitnessEstimate {
    double fidelity = 0.0;
    double std_error = 0.0; // propagated 1-sigma sampling error of `fidelity`
    double population = 0.0; // P: all-zeros plus all-ones probability, Z basis
    double coherence = 0.0;  // C: estimate of 2 Re rho_{0..0,1..1}
};

/// Shot-based GHZ fidelity F = (P + C)/2 from n+2 measurement settings: one
/// Z-basis run for the population term P, and parity runs at the n+1 phases
/// phi_k = k pi / (n+1) for the coherence term. Each parity setting applies
/// RZ(phi_k) then H to every qubit and records the +/-1 parity of the
/// outcome; since the parity signal decomposes over this grid into the
/// frequencies n, n-2, ... only, the discrete-Fourier weights
/// 2 cos(n phi_k)/(n+1) recover the frequency-n amplitude — which is exactly
/// C = 2 Re rho_{0^n,1^n} — without bias from lower-frequency terms.
/// The basis-change rotations are analysis, not workload: they run through
/// the backend's ideal-suffix path so they add no noise of their own.
/// Shots are split evenly over the settings; requires shots >= (n+2) * 100.
WitnessEstimate ghz_witness_shots(const Backend& backend,
                                  const Circuit& circuit, int n,
                                  std::uint64_t shots, std::uint64_t seed);

} // namespace qrk
