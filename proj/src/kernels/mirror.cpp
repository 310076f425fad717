#include "qrk/kernels/mirror.hpp"

#include "qrk/constants.hpp"
#include "qrk/errors.hpp"
#include "qrk/rng.hpp"

namespace qrk {

Circuit build_ghz_circuit(int n) {
    if (n < 2) {
        throw ValidationError("GHZ preparation needs at least 2 qubits");
    }
    Circuit circuit(n);
    circuit.h(0);
    for (int q = 0; q + 1 < n; ++q) {
        circuit.cx(q, q + 1);
    }
    return circuit;
}

Circuit build_mirror_load(int n, int L, std::uint64_t seed) {
    if (n < 2) {
        throw ValidationError("mirror load needs at least 2 qubits");
    }
    if (L < 1) {
        throw ValidationError("mirror half-depth must be at least 1");
    }
    SplitMix64 rng(seed);
    Circuit forward(n);
    for (int layer = 0; layer < L; ++layer) {
        for (int q = 0; q < n; ++q) {
            forward.ry(q, rng.next_double() * 2.0 * kPi);
        }
        // Brickwork entanglers: even layers start pairing at qubit 0, odd
        // layers at qubit 1.
        for (int q = layer % 2; q + 1 < n; q += 2) {
            forward.cz(q, q + 1);
        }
    }
    Circuit mirror = forward;
    mirror.extend(forward.inverse());
    return mirror;
}

} // namespace qrk
