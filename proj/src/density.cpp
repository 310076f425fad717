#include "qrk/density.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qrk/errors.hpp"

namespace qrk {

namespace {

constexpr Amplitude kI{0.0, 1.0};
using Matrix = std::vector<Amplitude>; // dim * dim, row-major

Matrix matmul(const Matrix& a, const Matrix& b, std::size_t dim) {
    Matrix out(dim * dim, Amplitude{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            const Amplitude aik = a[i * dim + k];
            if (aik == Amplitude{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                out[i * dim + j] += aik * b[k * dim + j];
            }
        }
    }
    return out;
}

Matrix adjoint(const Matrix& a, std::size_t dim) {
    Matrix out(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            out[i * dim + j] = std::conj(a[j * dim + i]);
        }
    }
    return out;
}

// rho -> U rho U^dagger
void conjugate_inplace(Matrix& rho, const Matrix& u, std::size_t dim) {
    rho = matmul(matmul(u, rho, dim), adjoint(u, dim), dim);
}

// Local 2x2 matrices.
std::array<Amplitude, 4> local_1q(const Gate& gate) {
    const double c = std::cos(gate.angle / 2.0);
    const double s = std::sin(gate.angle / 2.0);
    switch (gate.kind) {
    case GateKind::RX: return {Amplitude{c, 0}, -kI * s, -kI * s, Amplitude{c, 0}};
    case GateKind::RY: return {Amplitude{c, 0}, Amplitude{-s, 0}, Amplitude{s, 0}, Amplitude{c, 0}};
    case GateKind::RZ: return {Amplitude{c, -s}, {0, 0}, {0, 0}, Amplitude{c, s}};
    case GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        return {Amplitude{r, 0}, Amplitude{r, 0}, Amplitude{r, 0}, Amplitude{-r, 0}};
    }
    case GateKind::X: return {Amplitude{0, 0}, {1, 0}, {1, 0}, {0, 0}};
    default: break;
    }
    throw ValidationError("not a 1-qubit gate");
}

std::array<Amplitude, 4> pauli_2x2(int pauli) {
    switch (pauli) {
    case 0: return {Amplitude{1, 0}, {0, 0}, {0, 0}, {1, 0}};
    case 1: return {Amplitude{0, 0}, {1, 0}, {1, 0}, {0, 0}};
    case 2: return {Amplitude{0, 0}, -kI, kI, {0, 0}};
    default: return {Amplitude{1, 0}, {0, 0}, {0, 0}, {-1, 0}};
    }
}

// Expands a 2x2 acting on `target` to the full register.
Matrix expand_1q(const std::array<Amplitude, 4>& g, int target, int n, std::size_t dim) {
    Matrix u(dim * dim, Amplitude{0.0, 0.0});
    const std::uint64_t mask = 1ULL << target;
    for (std::uint64_t col = 0; col < dim; ++col) {
        const int cb = (col & mask) ? 1 : 0;
        for (int rb = 0; rb < 2; ++rb) {
            const std::uint64_t row = rb ? (col | mask) : (col & ~mask);
            u[row * dim + col] = g[static_cast<std::size_t>(rb * 2 + cb)];
        }
    }
    (void)n;
    return u;
}

// Full-register unitary of one gate.
Matrix expand_gate(const Gate& gate, int n, std::size_t dim) {
    if (gate.arity() == 1) {
        return expand_1q(local_1q(gate), gate.targets[0], n, dim);
    }
    Matrix u(dim * dim, Amplitude{0.0, 0.0});
    const std::uint64_t m0 = 1ULL << gate.targets[0];
    const std::uint64_t m1 = 1ULL << gate.targets[1];
    for (std::uint64_t col = 0; col < dim; ++col) {
        std::uint64_t row = col;
        Amplitude value{1.0, 0.0};
        if (gate.kind == GateKind::CX) {
            if (col & m0) {
                row = col ^ m1;
            }
        } else { // CZ
            if ((col & m0) && (col & m1)) {
                value = Amplitude{-1.0, 0.0};
            }
        }
        u[row * dim + col] = value;
    }
    return u;
}

// rho -> (1-p) rho + (p/3) sum_{P in X,Y,Z} P rho P
void depolarize_1q(Matrix& rho, int target, int n, std::size_t dim, double p) {
    if (p <= 0.0) {
        return;
    }
    Matrix mixed(dim * dim, Amplitude{0.0, 0.0});
    for (int pauli = 1; pauli <= 3; ++pauli) {
        Matrix u = expand_1q(pauli_2x2(pauli), target, n, dim);
        Matrix term = matmul(matmul(u, rho, dim), adjoint(u, dim), dim);
        for (std::size_t i = 0; i < mixed.size(); ++i) {
            mixed[i] += term[i];
        }
    }
    for (std::size_t i = 0; i < rho.size(); ++i) {
        rho[i] = (1.0 - p) * rho[i] + (p / 3.0) * mixed[i];
    }
}

// rho -> (1-p) rho + (p/15) sum over the 15 non-identity Pauli pairs
void depolarize_2q(Matrix& rho, int t0, int t1, int n, std::size_t dim, double p) {
    if (p <= 0.0) {
        return;
    }
    Matrix mixed(dim * dim, Amplitude{0.0, 0.0});
    for (int idx = 1; idx <= 15; ++idx) {
        const int pa = idx >> 2;
        const int pb = idx & 3;
        Matrix u = expand_1q(pauli_2x2(pa), t0, n, dim);
        if (pb != 0) {
            u = matmul(expand_1q(pauli_2x2(pb), t1, n, dim), u, dim);
        }
        Matrix term = matmul(matmul(u, rho, dim), adjoint(u, dim), dim);
        for (std::size_t i = 0; i < mixed.size(); ++i) {
            mixed[i] += term[i];
        }
    }
    for (std::size_t i = 0; i < rho.size(); ++i) {
        rho[i] = (1.0 - p) * rho[i] + (p / 15.0) * mixed[i];
    }
}

DensityMatrix reference_impl(const Circuit& circuit, const NoiseModel& noise,
                             const std::vector<int>* stream_ids) {
    if (circuit.n_qubits() > 4) {
        throw CapabilityError("density-matrix oracle capped at 4 qubits, got " +
                              std::to_string(circuit.n_qubits()));
    }
    noise.validate();
    DensityMatrix rho = DensityMatrix::zero_state(circuit.n_qubits());
    const std::size_t dim = rho.dim;
    const int n = rho.n_qubits;
    for (const Gate& g : circuit.gates()) {
        Matrix u = expand_gate(g, n, dim);
        conjugate_inplace(rho.data, u, dim);
        if (g.arity() == 1) {
            depolarize_1q(rho.data, g.targets[0], n, dim, noise.p1);
        } else {
            depolarize_2q(rho.data, g.targets[0], g.targets[1], n, dim, noise.p2);
            if (stream_ids != nullptr && noise.crosstalk > 0.0) {
                const int gate_stream = (*stream_ids)[static_cast<std::size_t>(g.targets[0])];
                for (int q = 0; q < n; ++q) {
                    if ((*stream_ids)[static_cast<std::size_t>(q)] != gate_stream) {
                        depolarize_1q(rho.data, q, n, dim, noise.crosstalk);
                    }
                }
            }
        }
    }
    return rho;
}

} // namespace

DensityMatrix DensityMatrix::zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 4) {
        throw CapabilityError("density matrix supports 1..4 qubits");
    }
    DensityMatrix rho;
    rho.n_qubits = n_qubits;
    rho.dim = std::size_t{1} << n_qubits;
    rho.data.assign(rho.dim * rho.dim, Amplitude{0.0, 0.0});
    rho.data[0] = Amplitude{1.0, 0.0};
    return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    DensityMatrix rho = zero_state(n_qubits);
    rho.data[0] = Amplitude{0.0, 0.0};
    const double p = 1.0 / static_cast<double>(rho.dim);
    for (std::size_t i = 0; i < rho.dim; ++i) {
        rho.at(i, i) = Amplitude{p, 0.0};
    }
    return rho;
}

DensityMatrix DensityMatrix::from_pure(const StateVector& state) {
    DensityMatrix rho = zero_state(state.n_qubits);
    for (std::size_t i = 0; i < rho.dim; ++i) {
        for (std::size_t j = 0; j < rho.dim; ++j) {
            rho.at(i, j) = state.amps[i] * std::conj(state.amps[j]);
        }
    }
    return rho;
}

double DensityMatrix::trace_real() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        t += at(i, i).real();
    }
    return t;
}

double DensityMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
        }
    }
    return worst;
}

DensityMatrix density_matrix_reference(const Circuit& circuit, const NoiseModel& noise) {
    return reference_impl(circuit, noise, nullptr);
}

DensityMatrix density_matrix_reference_streams(const Circuit& circuit,
                                               const NoiseModel& noise,
                                               const std::vector<int>& stream_ids) {
    if (stream_ids.size() != static_cast<std::size_t>(circuit.n_qubits())) {
        throw ValidationError("stream_ids must map every qubit");
    }
    return reference_impl(circuit, noise, &stream_ids);
}

double state_fidelity(const DensityMatrix& rho, const StateVector& psi) {
    if (rho.n_qubits != psi.n_qubits) {
        throw ValidationError("fidelity: register widths differ");
    }
    Amplitude value{0.0, 0.0};
    for (std::size_t i = 0; i < rho.dim; ++i) {
        for (std::size_t j = 0; j < rho.dim; ++j) {
            value += std::conj(psi.amps[i]) * rho.at(i, j) * psi.amps[j];
        }
    }
    return value.real();
}

double expectation_pauli(const DensityMatrix& rho, std::string_view pauli_string) {
    if (pauli_string.size() != static_cast<std::size_t>(rho.n_qubits)) {
        throw ValidationError("pauli string length must equal qubit count");
    }
    std::uint64_t flip_mask = 0;
    std::uint64_t y_mask = 0;
    std::uint64_t z_mask = 0;
    for (int q = 0; q < rho.n_qubits; ++q) {
        switch (pauli_string[static_cast<std::size_t>(q)]) {
        case 'I': break;
        case 'X': flip_mask |= 1ULL << q; break;
        case 'Y':
            flip_mask |= 1ULL << q;
            y_mask |= 1ULL << q;
            break;
        case 'Z': z_mask |= 1ULL << q; break;
        default:
            throw ValidationError("pauli string may only contain I, X, Y, Z");
        }
    }
    const int y_count = static_cast<int>(std::popcount(y_mask));
    Amplitude sum{0.0, 0.0};
    for (std::uint64_t b = 0; b < rho.dim; ++b) {
        const int y_ones = static_cast<int>(std::popcount(b & y_mask));
        const int z_ones = static_cast<int>(std::popcount(b & z_mask));
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
        // tr(rho P) = sum_b rho[b, b ^ flip] * phase(b)
        sum += rho.at(b, b ^ flip_mask) * phase;
    }
    return sum.real();
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep_qubits) {
    for (int q : keep_qubits) {
        if (q < 0 || q >= rho.n_qubits) {
            throw IndexError("partial_trace: qubit " + std::to_string(q) + " out of range");
        }
    }
    std::vector<int> keep = keep_qubits;
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw ValidationError("partial_trace: duplicate qubit");
    }
    if (keep.empty() || keep.size() > static_cast<std::size_t>(rho.n_qubits)) {
        throw ValidationError("partial_trace: keep set must be a nonempty subset");
    }
    std::vector<int> traced;
    for (int q = 0; q < rho.n_qubits; ++q) {
        if (!std::binary_search(keep.begin(), keep.end(), q)) {
            traced.push_back(q);
        }
    }
    const int k = static_cast<int>(keep.size());
    DensityMatrix out = DensityMatrix::zero_state(k);
    std::fill(out.data.begin(), out.data.end(), Amplitude{0.0, 0.0});
    const std::size_t kd = out.dim;
    const std::size_t ed = std::size_t{1} << traced.size();

    auto scatter = [](std::uint64_t bits, const std::vector<int>& positions) {
        std::uint64_t full = 0;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if ((bits >> i) & 1ULL) {
                full |= 1ULL << positions[i];
            }
        }
        return full;
    };

    for (std::uint64_t a = 0; a < kd; ++a) {
        for (std::uint64_t b = 0; b < kd; ++b) {
            Amplitude acc{0.0, 0.0};
            for (std::uint64_t e = 0; e < ed; ++e) {
                const std::uint64_t env = scatter(e, traced);
                acc += rho.at(scatter(a, keep) | env, scatter(b, keep) | env);
            }
            out.at(a, b) = acc;
        }
    }
    return out;
}

} // namespace qrk
