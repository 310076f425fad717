#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "qrk/circuit.hpp"
#include "qrk/rng.hpp"

namespace qrk::test {

/// Random circuit over the full gate alphabet, reproducible from the seed.
/// Two-qubit gates pick distinct targets; rotation angles are uniform in
/// [0, 2pi).
inline Circuit random_circuit(int n_qubits, std::size_t n_gates, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Circuit circuit(n_qubits);
    for (std::size_t g = 0; g < n_gates; ++g) {
        const auto kind = static_cast<int>(rng.next_below(7));
        const int a = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_qubits)));
        int b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_qubits - 1)));
        if (b >= a) {
            ++b;
        }
        const double angle = rng.next_double() * 6.283185307179586;
        switch (kind) {
        case 0: circuit.rx(a, angle); break;
        case 1: circuit.ry(a, angle); break;
        case 2: circuit.rz(a, angle); break;
        case 3: circuit.h(a); break;
        case 4: circuit.x(a); break;
        case 5: circuit.cx(a, b); break;
        default: circuit.cz(a, b); break;
        }
    }
    return circuit;
}

/// Mean and standard error of a sample.
struct SampleStats {
    double mean = 0.0;
    double std_error = 0.0;
};

inline SampleStats sample_stats(const std::vector<double>& xs) {
    SampleStats out;
    if (xs.empty()) {
        return out;
    }
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    out.mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) {
        return out;
    }
    double ss = 0.0;
    for (double x : xs) {
        const double d = x - out.mean;
        ss += d * d;
    }
    const auto n = static_cast<double>(xs.size());
    out.std_error = std::sqrt(ss / (n - 1.0) / n);
    return out;
}

} // namespace qrk::test
