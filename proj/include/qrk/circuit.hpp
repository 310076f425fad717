#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qrk {

/// Gate alphabet. Rotations carry an angle; the rest are fixed unitaries.
/// For CX, targets[0] is the control and targets[1] the target; CZ is
/// symmetric but still requires two distinct qubits.
enum class GateKind { RX, RY, RZ, H, X, CX, CZ };

const char* gate_name(GateKind kind);
bool is_rotation(GateKind kind);
int gate_arity(GateKind kind);

struct Gate {
    GateKind kind;
    std::array<int, 2> targets{0, 0}; // targets[1] unused for 1-qubit kinds
    double angle = 0.0;               // radians, rotations only; stored unreduced

    static Gate rx(int q, double angle);
    static Gate ry(int q, double angle);
    static Gate rz(int q, double angle);
    static Gate h(int q);
    static Gate x(int q);
    static Gate cx(int control, int target);
    static Gate cz(int a, int b);

    int arity() const { return gate_arity(kind); }

    /// Gate-wise adjoint: rotations negate the angle, the rest are self-inverse.
    Gate inverse() const;

    bool operator==(const Gate& other) const;
};

/// Ordered gate list over an n-qubit register. Built once, then treated as an
/// immutable value: safe to copy and share across threads.
class Circuit {
  public:
    explicit Circuit(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t gate_count() const { return gates_.size(); }

    /// Validates the gate against this register and appends it.
    /// Throws IndexError for out-of-range targets, ValidationError for
    /// duplicate targets, non-finite angles, or arity mismatches.
    Circuit& append(const Gate& gate);

    // Fluent builders.
    Circuit& rx(int q, double angle) { return append(Gate::rx(q, angle)); }
    Circuit& ry(int q, double angle) { return append(Gate::ry(q, angle)); }
    Circuit& rz(int q, double angle) { return append(Gate::rz(q, angle)); }
    Circuit& h(int q) { return append(Gate::h(q)); }
    Circuit& x(int q) { return append(Gate::x(q)); }
    Circuit& cx(int control, int target) { return append(Gate::cx(control, target)); }
    Circuit& cz(int a, int b) { return append(Gate::cz(a, b)); }

    /// Appends every gate of `other` (same register width required).
    Circuit& extend(const Circuit& other);

    /// Gate-wise adjoint in reversed order; composes with *this to identity.
    Circuit inverse() const;

    bool operator==(const Circuit& other) const;

  private:
    int n_qubits_;
    std::vector<Gate> gates_;
};

/// Functional form of Circuit::append: returns a new circuit, input untouched.
Circuit append_gate(const Circuit& circuit, const Gate& gate);

} // namespace qrk
