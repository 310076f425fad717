#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qrk {

using Amplitude = std::complex<double>;

// Bit convention, fixed globally: basis-state bit i is qubit i, so qubit 0 is
// the least significant bit of the amplitude index. Bitstring keys in Counts
// render the index in binary with qubit n-1 leftmost and qubit 0 rightmost.

/// Dense state of an n-qubit register: 2^n complex amplitudes, unit norm.
struct StateVector {
    int n_qubits = 0;
    std::vector<Amplitude> amps;

    /// |0...0> on n qubits. n is capped at 24 (256 MiB of amplitudes).
    static StateVector zero(int n_qubits);

    std::size_t dim() const { return amps.size(); }
    double norm() const;
};

/// Measurement histogram: bitstring of length n_qubits -> occurrences.
struct Counts {
    std::map<std::string, std::uint64_t> histogram;
    std::uint64_t shots = 0;
    int n_qubits = 0;

    std::uint64_t count(const std::string& key) const;
    void merge(const Counts& other);
};

/// Renders a basis index as a bitstring key (qubit n-1 first, qubit 0 last).
std::string bitstring_key(std::uint64_t index, int n_qubits);

/// Depolarizing probabilities per gate plus readout and crosstalk rates.
/// Crosstalk only acts in multi-stream execution: each qubit idle during
/// another stream's 2-qubit gate is depolarized at that rate.
struct NoiseModel {
    double p1 = 0.0;        // per 1-qubit gate
    double p2 = 0.0;        // per 2-qubit gate
    double readout = 0.0;   // bit-flip per measured qubit
    double crosstalk = 0.0; // per idle qubit per foreign 2-qubit gate

    bool is_zero() const { return p1 == 0.0 && p2 == 0.0 && crosstalk == 0.0; }
    void validate() const; // all fields in [0, 1]
};

} // namespace qrk
