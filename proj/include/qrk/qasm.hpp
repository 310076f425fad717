#pragma once

#include <string>

#include "qrk/circuit.hpp"

namespace qrk {

/// Renders the circuit as an OpenQASM 3 program: header, stdgates include,
/// one qubit register `q` and one bit register `c` of the circuit's width,
/// one gate statement per line in circuit order, and a terminal measurement
/// of all qubits. Angle literals use 17 significant digits so parsing them
/// back reproduces the exact double.
std::string emit_qasm(const Circuit& circuit);

} // namespace qrk
