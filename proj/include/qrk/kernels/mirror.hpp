#pragma once

#include <cstdint>

#include "qrk/circuit.hpp"

namespace qrk {

/// GHZ preparation: H on qubit 0 followed by the CX chain
/// CX(0,1), CX(1,2), ..., CX(n-2, n-1). Gate count is exactly n.
Circuit build_ghz_circuit(int n);

/// Pseudo-random mirror load: L layers, each one RY with a uniform [0, 2pi)
/// angle on every qubit followed by CZ brickwork (even layers pair
/// (0,1),(2,3),...; odd layers pair (1,2),(3,4),...), then the inverses of
/// those layers in reverse order — 2L layers total, composing to the identity
/// ideally. Deterministic in (n, L, seed); for a fixed seed the first layers
/// are a prefix of any deeper build.
Circuit build_mirror_load(int n, int L, std::uint64_t seed);

} // namespace qrk
