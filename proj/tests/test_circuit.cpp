#include <doctest.h>

#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "qrk/circuit.hpp"
#include "qrk/errors.hpp"
#include "qrk/qasm.hpp"
#include "qrk/simulator.hpp"

#include "helpers.hpp"

using namespace qrk;

namespace {

constexpr double kPi = std::numbers::pi;

// Gate statements in a QASM program: lines minus the four declarations and
// the terminal measurement.
std::size_t qasm_statement_count(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') {
            ++lines;
        }
    }
    return lines - 5;
}

std::size_t count_lines_starting_with(const std::string& text, const std::string& prefix) {
    std::size_t n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) {
            ++n;
        }
    }
    return n;
}

} // namespace

TEST_CASE("append preserves order and counts gates") {
    Circuit c(1);
    c.append(Gate::ry(0, kPi / 6.0));
    CHECK(c.gate_count() == 1);

    Circuit two(2);
    two.append(Gate::cx(0, 1)).append(Gate::cx(0, 1));
    CHECK(two.gate_count() == 2);
    CHECK(two.gates()[0] == Gate::cx(0, 1));
    CHECK(two.gates()[1] == Gate::cx(0, 1));
}

TEST_CASE("append validates targets") {
    Circuit c(2);
    CHECK_THROWS_AS(c.append(Gate::cz(1, 1)), ValidationError);
    CHECK_THROWS_AS(c.append(Gate::ry(2, 0.1)), IndexError);
    CHECK_THROWS_AS(c.append(Gate::cx(0, 2)), IndexError);
    CHECK_THROWS_AS(c.append(Gate::ry(-1, 0.1)), IndexError);
    // Failed appends leave the circuit untouched.
    CHECK(c.gate_count() == 0);
}

TEST_CASE("append_gate is functional") {
    const Circuit base(1);
    const Circuit grown = append_gate(base, Gate::x(0));
    CHECK(base.gate_count() == 0);
    CHECK(grown.gate_count() == 1);
}

TEST_CASE("inverse negates rotations and reverses order") {
    Circuit c(1);
    c.ry(0, 0.75);
    const Circuit inv = c.inverse();
    REQUIRE(inv.gate_count() == 1);
    CHECK(inv.gates()[0] == Gate::ry(0, -0.75));

    Circuit bell(2);
    bell.h(0).cx(0, 1);
    const Circuit bell_inv = bell.inverse();
    REQUIRE(bell_inv.gate_count() == 2);
    CHECK(bell_inv.gates()[0] == Gate::cx(0, 1));
    CHECK(bell_inv.gates()[1] == Gate::h(0));
}

TEST_CASE("inverse is an involution and preserves gate count") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Circuit c = test::random_circuit(4, 30, seed);
        const Circuit inv = c.inverse();
        CHECK(inv.gate_count() == c.gate_count());
        CHECK(inv.inverse() == c);
    }
}

TEST_CASE("circuit followed by its inverse restores the initial state") {
    const StateVector zero = StateVector::zero(4);
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        Circuit c = test::random_circuit(4, 20, seed);
        c.extend(c.inverse());
        const StateVector out = run_exact(c);
        CHECK(exact_fidelity(out, zero) >= 1.0 - 1e-9);
    }
}

TEST_CASE("extend requires matching register width") {
    Circuit a(2);
    Circuit b(3);
    CHECK_THROWS_AS(a.extend(b), ValidationError);
}

TEST_CASE("gate factories reject non-finite angles") {
    Circuit c(1);
    CHECK_THROWS_AS(c.ry(0, std::numeric_limits<double>::quiet_NaN()), ValidationError);
    CHECK_THROWS_AS(c.rx(0, std::numeric_limits<double>::infinity()), ValidationError);
}

TEST_CASE("qasm emits one rotation statement with a bit-faithful angle") {
    const double angle = 0.5235987755982988;
    Circuit c(1);
    c.ry(0, angle);
    const std::string text = emit_qasm(c);
    CHECK(count_lines_starting_with(text, "ry(") == 1);

    const auto open = text.find("ry(");
    const auto close = text.find(')', open);
    REQUIRE(open != std::string::npos);
    REQUIRE(close != std::string::npos);
    const std::string literal = text.substr(open + 3, close - open - 3);
    CHECK(std::stod(literal) == angle);
}

TEST_CASE("qasm for the 3-qubit GHZ prep has 1 h and 2 cx statements") {
    Circuit c(3);
    c.h(0).cx(0, 1).cx(1, 2);
    const std::string text = emit_qasm(c);
    CHECK(count_lines_starting_with(text, "h ") == 1);
    CHECK(count_lines_starting_with(text, "cx ") == 2);
    CHECK(qasm_statement_count(text) == 3);
}

TEST_CASE("qasm of an empty circuit is declarations and measurement only") {
    const std::string text = emit_qasm(Circuit(2));
    CHECK(text ==
          "OPENQASM 3;\n"
          "include \"stdgates.inc\";\n"
          "qubit[2] q;\n"
          "bit[2] c;\n"
          "c = measure q;\n");
}

TEST_CASE("qasm statement count equals gate count on random circuits") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto n_gates = 20 * seed;
        const Circuit c = test::random_circuit(5, n_gates, seed * 7 + 1);
        CHECK(qasm_statement_count(emit_qasm(c)) == c.gate_count());
    }
}
