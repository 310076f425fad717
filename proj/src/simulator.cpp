#include "qrk/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qrk/errors.hpp"
#include "qrk/rng.hpp"

namespace qrk {

namespace {

constexpr Amplitude kI{0.0, 1.0};

void apply_1q_matrix(StateVector& state, int target, const Amplitude m[2][2]) {
    const std::uint64_t mask = 1ULL << target;
    const std::uint64_t lo_mask = mask - 1;
    const std::uint64_t hi_mask = ~lo_mask;
    const std::uint64_t half = state.dim() >> 1;
    for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
        const std::uint64_t i1 = i0 | mask;
        const Amplitude a0 = state.amps[i0];
        const Amplitude a1 = state.amps[i1];
        state.amps[i0] = m[0][0] * a0 + m[0][1] * a1;
        state.amps[i1] = m[1][0] * a0 + m[1][1] * a1;
    }
}

// Pauli index convention: 1 = X, 2 = Y, 3 = Z.
void apply_pauli(StateVector& state, int target, int pauli) {
    const std::uint64_t mask = 1ULL << target;
    const std::uint64_t lo_mask = mask - 1;
    const std::uint64_t hi_mask = ~lo_mask;
    const std::uint64_t half = state.dim() >> 1;
    for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
        const std::uint64_t i1 = i0 | mask;
        const Amplitude a0 = state.amps[i0];
        const Amplitude a1 = state.amps[i1];
        switch (pauli) {
        case 1: // X
            state.amps[i0] = a1;
            state.amps[i1] = a0;
            break;
        case 2: // Y: |0> -> i|1>, |1> -> -i|0>
            state.amps[i0] = -kI * a1;
            state.amps[i1] = kI * a0;
            break;
        case 3: // Z
            state.amps[i1] = -a1;
            break;
        default:
            break;
        }
    }
}

void check_target(const StateVector& state, int q) {
    if (q < 0 || q >= state.n_qubits) {
        throw IndexError("gate target " + std::to_string(q) +
                         " outside register of size " + std::to_string(state.n_qubits));
    }
}

} // namespace

void apply_gate_inplace(StateVector& state, const Gate& gate) {
    for (int i = 0; i < gate.arity(); ++i) {
        check_target(state, gate.targets[i]);
    }
    switch (gate.kind) {
    case GateKind::RX: {
        const double c = std::cos(gate.angle / 2.0);
        const double s = std::sin(gate.angle / 2.0);
        const Amplitude m[2][2] = {{{c, 0.0}, {0.0, -s}}, {{0.0, -s}, {c, 0.0}}};
        apply_1q_matrix(state, gate.targets[0], m);
        break;
    }
    case GateKind::RY: {
        const double c = std::cos(gate.angle / 2.0);
        const double s = std::sin(gate.angle / 2.0);
        const Amplitude m[2][2] = {{{c, 0.0}, {-s, 0.0}}, {{s, 0.0}, {c, 0.0}}};
        apply_1q_matrix(state, gate.targets[0], m);
        break;
    }
    case GateKind::RZ: {
        const double c = std::cos(gate.angle / 2.0);
        const double s = std::sin(gate.angle / 2.0);
        const Amplitude m[2][2] = {{{c, -s}, {0.0, 0.0}}, {{0.0, 0.0}, {c, s}}};
        apply_1q_matrix(state, gate.targets[0], m);
        break;
    }
    case GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        const Amplitude m[2][2] = {{{r, 0.0}, {r, 0.0}}, {{r, 0.0}, {-r, 0.0}}};
        apply_1q_matrix(state, gate.targets[0], m);
        break;
    }
    case GateKind::X:
        apply_pauli(state, gate.targets[0], 1);
        break;
    case GateKind::CX: {
        const std::uint64_t control = 1ULL << gate.targets[0];
        const std::uint64_t target = 1ULL << gate.targets[1];
        for (std::uint64_t i = 0; i < state.dim(); ++i) {
            if ((i & control) && !(i & target)) {
                std::swap(state.amps[i], state.amps[i | target]);
            }
        }
        break;
    }
    case GateKind::CZ: {
        const std::uint64_t both = (1ULL << gate.targets[0]) | (1ULL << gate.targets[1]);
        for (std::uint64_t i = 0; i < state.dim(); ++i) {
            if ((i & both) == both) {
                state.amps[i] = -state.amps[i];
            }
        }
        break;
    }
    }
}

StateVector apply_gate(StateVector state, const Gate& gate) {
    apply_gate_inplace(state, gate);
    return state;
}

StateVector run_exact(const Circuit& circuit) {
    StateVector state = StateVector::zero(circuit.n_qubits());
    for (const Gate& g : circuit.gates()) {
        apply_gate_inplace(state, g);
    }
    return state;
}

namespace {

void insert_depolarizing(StateVector& state, const Gate& gate, SplitMix64& rng,
                         double probability) {
    if (probability <= 0.0) {
        return;
    }
    if (rng.next_double() >= probability) {
        return;
    }
    if (gate.arity() == 1) {
        const int pauli = static_cast<int>(rng.next_below(3)) + 1;
        apply_pauli(state, gate.targets[0], pauli);
    } else {
        const int idx = static_cast<int>(rng.next_below(15)) + 1;
        const int pa = idx >> 2;
        const int pb = idx & 3;
        if (pa != 0) {
            apply_pauli(state, gate.targets[0], pa);
        }
        if (pb != 0) {
            apply_pauli(state, gate.targets[1], pb);
        }
    }
}

StateVector run_trajectory_impl(const Circuit& circuit, const NoiseModel& noise,
                                const std::vector<int>* stream_ids, std::uint64_t seed) {
    noise.validate();
    StateVector state = StateVector::zero(circuit.n_qubits());
    SplitMix64 rng(seed);
    for (const Gate& g : circuit.gates()) {
        apply_gate_inplace(state, g);
        insert_depolarizing(state, g, rng, g.arity() == 1 ? noise.p1 : noise.p2);
        if (stream_ids != nullptr && g.arity() == 2 && noise.crosstalk > 0.0) {
            const int gate_stream = (*stream_ids)[static_cast<std::size_t>(g.targets[0])];
            for (int q = 0; q < circuit.n_qubits(); ++q) {
                if ((*stream_ids)[static_cast<std::size_t>(q)] == gate_stream) {
                    continue;
                }
                if (rng.next_double() < noise.crosstalk) {
                    const int pauli = static_cast<int>(rng.next_below(3)) + 1;
                    apply_pauli(state, q, pauli);
                }
            }
        }
    }
    return state;
}

} // namespace

StateVector run_trajectory(const Circuit& circuit, const NoiseModel& noise,
                           std::uint64_t seed) {
    return run_trajectory_impl(circuit, noise, nullptr, seed);
}

StateVector run_trajectory_streams(const Circuit& circuit, const NoiseModel& noise,
                                   const std::vector<int>& stream_ids,
                                   std::uint64_t seed) {
    if (stream_ids.size() != static_cast<std::size_t>(circuit.n_qubits())) {
        throw ValidationError("stream_ids must map every qubit");
    }
    return run_trajectory_impl(circuit, noise, &stream_ids, seed);
}

Counts sample_counts(const StateVector& state, std::uint64_t shots, double readout,
                     std::uint64_t seed) {
    if (shots == 0) {
        throw ValidationError("sample_counts needs at least one shot");
    }
    if (!(readout >= 0.0 && readout <= 1.0)) {
        throw ValidationError("readout probability must lie in [0, 1]");
    }
    std::vector<double> cdf(state.dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        acc += std::norm(state.amps[i]);
        cdf[i] = acc;
    }

    Counts counts;
    counts.n_qubits = state.n_qubits;
    counts.shots = shots;
    SplitMix64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::uint64_t index = it == cdf.end() ? state.dim() - 1
                                              : static_cast<std::uint64_t>(it - cdf.begin());
        if (readout > 0.0) {
            for (int q = 0; q < state.n_qubits; ++q) {
                if (rng.next_double() < readout) {
                    index ^= 1ULL << q;
                }
            }
        }
        counts.histogram[bitstring_key(index, state.n_qubits)] += 1;
    }
    return counts;
}

double exact_fidelity(const StateVector& state, const StateVector& reference) {
    if (state.n_qubits != reference.n_qubits) {
        throw ValidationError("fidelity: register widths differ");
    }
    Amplitude overlap{0.0, 0.0};
    for (std::size_t i = 0; i < state.dim(); ++i) {
        overlap += std::conj(reference.amps[i]) * state.amps[i];
    }
    return std::norm(overlap);
}

double expectation_pauli(const StateVector& state, std::string_view pauli_string) {
    if (pauli_string.size() != static_cast<std::size_t>(state.n_qubits)) {
        throw ValidationError("pauli string length must equal qubit count");
    }
    std::uint64_t flip_mask = 0; // X and Y flip the bit
    std::uint64_t y_mask = 0;
    std::uint64_t z_mask = 0;
    for (int q = 0; q < state.n_qubits; ++q) {
        switch (pauli_string[static_cast<std::size_t>(q)]) {
        case 'I':
            break;
        case 'X':
            flip_mask |= 1ULL << q;
            break;
        case 'Y':
            flip_mask |= 1ULL << q;
            y_mask |= 1ULL << q;
            break;
        case 'Z':
            z_mask |= 1ULL << q;
            break;
        default:
            throw ValidationError("pauli string may only contain I, X, Y, Z");
        }
    }
    // P|b> = phase(b) |b ^ flip_mask>, phase(b) = prod over Y of (b_i ? -i : i)
    // times prod over Z of (-1)^{b_i}.
    const int y_count = static_cast<int>(std::popcount(y_mask));
    Amplitude sum{0.0, 0.0};
    for (std::uint64_t b = 0; b < state.dim(); ++b) {
        const int y_ones = static_cast<int>(std::popcount(b & y_mask));
        const int z_ones = static_cast<int>(std::popcount(b & z_mask));
        // i^{y_count} * (-1)^{y_ones} * (-1)^{z_ones}
        Amplitude phase{1.0, 0.0};
        switch (y_count & 3) {
        case 1: phase = kI; break;
        case 2: phase = {-1.0, 0.0}; break;
        case 3: phase = -kI; break;
        default: break;
        }
        if ((y_ones + z_ones) & 1) {
            phase = -phase;
        }
        sum += std::conj(state.amps[b ^ flip_mask]) * phase * state.amps[b];
    }
    return sum.real();
}

StateVector ghz_state(int n_qubits) {
    if (n_qubits < 2) {
        throw ValidationError("GHZ state needs at least two qubits");
    }
    StateVector s = StateVector::zero(n_qubits);
    const double r = 1.0 / std::sqrt(2.0);
    s.amps[0] = Amplitude{r, 0.0};
    s.amps[s.dim() - 1] = Amplitude{r, 0.0};
    return s;
}

} // namespace qrk
