#include "qrk/qasm.hpp"

#include <cstdio>
#include <sstream>

namespace qrk {

namespace {

std::string format_angle(double angle) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", angle);
    return buf;
}

} // namespace

std::string emit_qasm(const Circuit& circuit) {
    std::ostringstream out;
    out << "OPENQASM 3;\n";
    out << "include \"stdgates.inc\";\n";
    out << "qubit[" << circuit.n_qubits() << "] q;\n";
    out << "bit[" << circuit.n_qubits() << "] c;\n";
    for (const Gate& g : circuit.gates()) {
        out << gate_name(g.kind);
        if (is_rotation(g.kind)) {
            out << '(' << format_angle(g.angle) << ')';
        }
        out << " q[" << g.targets[0] << ']';
        if (g.arity() == 2) {
            out << ", q[" << g.targets[1] << ']';
        }
        out << ";\n";
    }
    out << "c = measure q;\n";
    return out.str();
}

} // namespace qrk
