#include "qrk/circuit.hpp"

#include <cmath>

#include "qrk/errors.hpp"

namespace qrk {

const char* gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    }
    return "?";
}

bool is_rotation(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

int gate_arity(GateKind kind) {
    return (kind == GateKind::CX || kind == GateKind::CZ) ? 2 : 1;
}

namespace {

Gate make_rotation(GateKind kind, int q, double angle) {
    if (!std::isfinite(angle)) {
        throw ValidationError(std::string(gate_name(kind)) + ": angle must be finite");
    }
    Gate g{kind, {q, 0}, angle};
    return g;
}

} // namespace

Gate Gate::rx(int q, double angle) { return make_rotation(GateKind::RX, q, angle); }
Gate Gate::ry(int q, double angle) { return make_rotation(GateKind::RY, q, angle); }
Gate Gate::rz(int q, double angle) { return make_rotation(GateKind::RZ, q, angle); }
Gate Gate::h(int q) { return Gate{GateKind::H, {q, 0}, 0.0}; }
Gate Gate::x(int q) { return Gate{GateKind::X, {q, 0}, 0.0}; }
Gate Gate::cx(int control, int target) { return Gate{GateKind::CX, {control, target}, 0.0}; }
Gate Gate::cz(int a, int b) { return Gate{GateKind::CZ, {a, b}, 0.0}; }

Gate Gate::inverse() const {
    Gate g = *this;
    if (is_rotation(kind)) {
        g.angle = -angle;
    }
    return g;
}

bool Gate::operator==(const Gate& other) const {
    if (kind != other.kind || targets[0] != other.targets[0]) {
        return false;
    }
    if (arity() == 2 && targets[1] != other.targets[1]) {
        return false;
    }
    return !is_rotation(kind) || angle == other.angle;
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) {
        throw ValidationError("circuit needs at least one qubit");
    }
}

Circuit& Circuit::append(const Gate& gate) {
    const int arity = gate.arity();
    for (int i = 0; i < arity; ++i) {
        const int q = gate.targets[i];
        if (q < 0 || q >= n_qubits_) {
            throw IndexError(std::string(gate_name(gate.kind)) + ": qubit " +
                             std::to_string(q) + " outside register of size " +
                             std::to_string(n_qubits_));
        }
    }
    if (arity == 2 && gate.targets[0] == gate.targets[1]) {
        throw ValidationError(std::string(gate_name(gate.kind)) +
                              ": duplicate target qubit " + std::to_string(gate.targets[0]));
    }
    if (is_rotation(gate.kind) && !std::isfinite(gate.angle)) {
        throw ValidationError(std::string(gate_name(gate.kind)) + ": angle must be finite");
    }
    gates_.push_back(gate);
    return *this;
}

Circuit& Circuit::extend(const Circuit& other) {
    if (other.n_qubits_ != n_qubits_) {
        throw ValidationError("extend: register widths differ");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit inv(n_qubits_);
    inv.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        inv.gates_.push_back(it->inverse());
    }
    return inv;
}

bool Circuit::operator==(const Circuit& other) const {
    return n_qubits_ == other.n_qubits_ && gates_ == other.gates_;
}

Circuit append_gate(const Circuit& circuit, const Gate& gate) {
    Circuit out = circuit;
    out.append(gate);
    return out;
}

} // namespace qrk
