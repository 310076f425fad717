#include "qrk/statevector.hpp"

#include "qrk/errors.hpp"

namespace qrk {

StateVector StateVector::zero(int n_qubits) {
    if (n_qubits < 1) {
        throw ValidationError("state needs at least one qubit");
    }
    if (n_qubits > 24) {
        throw CapabilityError("dense simulation capped at 24 qubits, got " +
                              std::to_string(n_qubits));
    }
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
    s.amps[0] = Amplitude{1.0, 0.0};
    return s;
}

double StateVector::norm() const {
    double total = 0.0;
    for (const Amplitude& a : amps) {
        total += std::norm(a);
    }
    return total;
}

std::uint64_t Counts::count(const std::string& key) const {
    auto it = histogram.find(key);
    return it == histogram.end() ? 0 : it->second;
}

void Counts::merge(const Counts& other) {
    if (n_qubits == 0) {
        n_qubits = other.n_qubits;
    }
    if (n_qubits != other.n_qubits) {
        throw ValidationError("cannot merge counts of different register widths");
    }
    for (const auto& [key, value] : other.histogram) {
        histogram[key] += value;
    }
    shots += other.shots;
}

std::string bitstring_key(std::uint64_t index, int n_qubits) {
    std::string key(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if ((index >> q) & 1ULL) {
            key[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
        }
    }
    return key;
}

void NoiseModel::validate() const {
    auto check = [](double value, const char* name) {
        if (!(value >= 0.0 && value <= 1.0)) {
            throw ValidationError(std::string("noise field ") + name +
                                  " must lie in [0, 1]");
        }
    };
    check(p1, "p1");
    check(p2, "p2");
    check(readout, "readout");
    check(crosstalk, "crosstalk");
}

} // namespace qrk
