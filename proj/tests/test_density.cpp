#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "qrk/density.hpp"
#include "qrk/errors.hpp"
#include "qrk/simulator.hpp"

#include "helpers.hpp"

using namespace qrk;

namespace {

// All length-n Pauli strings in lexicographic order.
std::vector<std::string> all_pauli_strings(int n) {
    std::vector<std::string> out{""};
    for (int q = 0; q < n; ++q) {
        std::vector<std::string> next;
        for (const std::string& s : out) {
            for (char c : {'I', 'X', 'Y', 'Z'}) {
                next.push_back(s + c);
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("noiseless GHZ-2 evolution gives the pure projector") {
    Circuit c(2);
    c.h(0).cx(0, 1);
    const DensityMatrix rho = density_matrix_reference(c, NoiseModel{});
    const DensityMatrix pure = DensityMatrix::from_pure(run_exact(c));
    for (std::size_t i = 0; i < rho.data.size(); ++i) {
        CHECK(std::abs(rho.data[i] - pure.data[i]) < 1e-12);
    }
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rho.hermiticity_defect() < 1e-12);
}

TEST_CASE("full depolarizing on one gate mixes |0> to diag(1/3, 2/3)") {
    Circuit c(1);
    c.ry(0, 0.0);
    const DensityMatrix rho = density_matrix_reference(c, NoiseModel{1.0, 0.0, 0.0, 0.0});
    CHECK(std::abs(rho.at(0, 0) - Amplitude{1.0 / 3.0, 0.0}) < 1e-12);
    CHECK(std::abs(rho.at(1, 1) - Amplitude{2.0 / 3.0, 0.0}) < 1e-12);
    CHECK(std::abs(rho.at(0, 1)) < 1e-12);
    CHECK(std::abs(rho.at(1, 0)) < 1e-12);
}

TEST_CASE("oracle keeps trace and hermiticity under heavy noise") {
    const Circuit c = test::random_circuit(3, 25, 41);
    const DensityMatrix rho = density_matrix_reference(c, NoiseModel{0.3, 0.4, 0.0, 0.0});
    CHECK(std::abs(rho.trace_real() - 1.0) < 1e-10);
    CHECK(rho.hermiticity_defect() < 1e-10);
}

TEST_CASE("oracle is capped at four qubits") {
    CHECK_THROWS_AS(density_matrix_reference(Circuit(5), NoiseModel{}), CapabilityError);
}

TEST_CASE("trajectory-averaged fidelity matches the oracle within 3 sigma") {
    const Circuit c = test::random_circuit(3, 10, 77);
    const NoiseModel noise{0.05, 0.05, 0.0, 0.0};
    const StateVector ideal = run_exact(c);
    const double oracle = state_fidelity(density_matrix_reference(c, noise), ideal);

    const std::uint64_t runs = 10000;
    std::vector<double> fids;
    fids.reserve(runs);
    for (std::uint64_t t = 0; t < runs; ++t) {
        fids.push_back(exact_fidelity(run_trajectory(c, noise, derive_seed(900, "trajectory", t)), ideal));
    }
    const auto stats = test::sample_stats(fids);
    CHECK(std::abs(stats.mean - oracle) <= 3.0 * stats.std_error);
}

TEST_CASE("trajectory Pauli expectations match the oracle on a 3-qubit circuit") {
    const Circuit c = test::random_circuit(3, 12, 123);
    const NoiseModel noise{0.05, 0.05, 0.0, 0.0};
    const DensityMatrix rho = density_matrix_reference(c, noise);

    const std::uint64_t runs = 10000;
    std::vector<StateVector> states;
    states.reserve(runs);
    for (std::uint64_t t = 0; t < runs; ++t) {
        states.push_back(run_trajectory(c, noise, derive_seed(901, "trajectory", t)));
    }
    for (const std::string pauli : {"ZII", "XYZ", "ZZZ", "IXI", "YYX"}) {
        const double exact = expectation_pauli(rho, pauli);
        std::vector<double> vals;
        vals.reserve(runs);
        for (const StateVector& s : states) {
            vals.push_back(expectation_pauli(s, pauli));
        }
        const auto stats = test::sample_stats(vals);
        const double band = 3.0 * std::max(stats.std_error, 1e-12);
        CHECK(std::abs(stats.mean - exact) <= band);
    }
}

TEST_CASE("pauli expectations agree between pure-state paths") {
    const Circuit c = test::random_circuit(2, 15, 55);
    const StateVector psi = run_exact(c);
    const DensityMatrix rho = DensityMatrix::from_pure(psi);
    for (const std::string& pauli : all_pauli_strings(2)) {
        CHECK(expectation_pauli(rho, pauli) ==
              doctest::Approx(expectation_pauli(psi, pauli)).epsilon(1e-9));
    }
}

TEST_CASE("maximally mixed state has GHZ fidelity 1/4 on two qubits") {
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
    CHECK(state_fidelity(mixed, ghz_state(2)) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("partial trace of GHZ-2 is maximally mixed") {
    const DensityMatrix rho = DensityMatrix::from_pure(ghz_state(2));
    const DensityMatrix reduced = partial_trace(rho, {0});
    CHECK(reduced.n_qubits == 1);
    CHECK(std::abs(reduced.at(0, 0) - Amplitude{0.5, 0.0}) < 1e-12);
    CHECK(std::abs(reduced.at(1, 1) - Amplitude{0.5, 0.0}) < 1e-12);
    CHECK(std::abs(reduced.at(0, 1)) < 1e-12);
}

TEST_CASE("partial trace of a product state stays pure") {
    Circuit c(2);
    c.ry(0, 0.6).ry(1, 1.9);
    const DensityMatrix rho = DensityMatrix::from_pure(run_exact(c));
    const DensityMatrix reduced = partial_trace(rho, {1});

    Circuit single(1);
    single.ry(0, 1.9);
    const StateVector expected = run_exact(single);
    CHECK(state_fidelity(reduced, expected) == doctest::Approx(1.0).epsilon(1e-10));
}
