#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "qrk/backend.hpp"
#include "qrk/circuit.hpp"
#include "qrk/config.hpp"
#include "qrk/errors.hpp"
#include "qrk/kernels/area.hpp"
#include "qrk/kernels/encode.hpp"
#include "qrk/kernels/mirror.hpp"
#include "qrk/kernels/streams.hpp"
#include "qrk/kernels/witness.hpp"
#include "qrk/qasm.hpp"
#include "qrk/report.hpp"
#include "qrk/result.hpp"
#include "qrk/rng.hpp"
#include "qrk/runner.hpp"
#include "qrk/simulator.hpp"
#include "qrk/stats.hpp"
#include "qrk/statevector.hpp"

namespace py = pybind11;
using namespace qrk;

namespace {

nlohmann::json py_to_json(const py::object& obj) {
    const auto dumped =
        py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return nlohmann::json::parse(dumped);
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Self-verifying quantum benchmark kernels on a noisy "
              "state-vector simulator";

    // Exception mapping. The base translator is registered first so the
    // later (derived) translators take precedence.
    static py::exception<Error> exc_base(m, "Error");
    py::register_exception<ValidationError>(m, "ValidationError", exc_base.ptr());
    py::register_exception<qrk::IndexError>(m, "IndexError", exc_base.ptr());
    py::register_exception<CapabilityError>(m, "CapabilityError", exc_base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", exc_base.ptr());
    py::register_exception<ExecutionError>(m, "ExecutionError", exc_base.ptr());

    m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("domain"),
          py::arg("index"),
          "Seed for sub-task `index` of stream `domain` under `master`.");

    // Circuits -----------------------------------------------------------
    py::class_<Gate>(m, "Gate")
        .def_static("rx", &Gate::rx, py::arg("q"), py::arg("angle"))
        .def_static("ry", &Gate::ry, py::arg("q"), py::arg("angle"))
        .def_static("rz", &Gate::rz, py::arg("q"), py::arg("angle"))
        .def_static("h", &Gate::h, py::arg("q"))
        .def_static("x", &Gate::x, py::arg("q"))
        .def_static("cx", &Gate::cx, py::arg("control"), py::arg("target"))
        .def_static("cz", &Gate::cz, py::arg("a"), py::arg("b"))
        .def_readonly("targets", &Gate::targets)
        .def_readonly("angle", &Gate::angle)
        .def_property_readonly("name",
                               [](const Gate& g) { return gate_name(g.kind); })
        .def_property_readonly("arity", &Gate::arity)
        .def("inverse", &Gate::inverse)
        .def("__eq__", [](const Gate& a, const Gate& b) { return a == b; });

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<int>(), py::arg("n_qubits"))
        .def_property_readonly("n_qubits", &Circuit::n_qubits)
        .def_property_readonly("gate_count", &Circuit::gate_count)
        .def_property_readonly("gates",
                               [](const Circuit& c) { return c.gates(); })
        .def("append", &Circuit::append, py::arg("gate"),
             py::return_value_policy::reference_internal)
        .def("rx", &Circuit::rx, py::arg("q"), py::arg("angle"),
             py::return_value_policy::reference_internal)
        .def("ry", &Circuit::ry, py::arg("q"), py::arg("angle"),
             py::return_value_policy::reference_internal)
        .def("rz", &Circuit::rz, py::arg("q"), py::arg("angle"),
             py::return_value_policy::reference_internal)
        .def("h", &Circuit::h, py::arg("q"),
             py::return_value_policy::reference_internal)
        .def("x", &Circuit::x, py::arg("q"),
             py::return_value_policy::reference_internal)
        .def("cx", &Circuit::cx, py::arg("control"), py::arg("target"),
             py::return_value_policy::reference_internal)
        .def("cz", &Circuit::cz, py::arg("a"), py::arg("b"),
             py::return_value_policy::reference_internal)
        .def("extend", &Circuit::extend, py::arg("other"),
             py::return_value_policy::reference_internal)
        .def("inverse", &Circuit::inverse)
        .def("__eq__",
             [](const Circuit& a, const Circuit& b) { return a == b; })
        .def("__len__", &Circuit::gate_count);

    m.def("emit_qasm", &emit_qasm, py::arg("circuit"),
          "OpenQASM 3 program text for the circuit.");

    // States and noise ---------------------------------------------------
    py::class_<StateVector>(m, "StateVector")
        .def_static("zero", &StateVector::zero, py::arg("n_qubits"))
        .def_readonly("n_qubits", &StateVector::n_qubits)
        .def_property_readonly(
            "amps", [](const StateVector& s) { return s.amps; },
            "Amplitudes, basis index bit i = qubit i.")
        .def_property_readonly("norm", &StateVector::norm);

    py::class_<NoiseModel>(m, "NoiseModel")
        .def(py::init([](double p1, double p2, double readout, double crosstalk) {
                 NoiseModel noise{p1, p2, readout, crosstalk};
                 noise.validate();
                 return noise;
             }),
             py::arg("p1") = 0.0, py::arg("p2") = 0.0, py::arg("readout") = 0.0,
             py::arg("crosstalk") = 0.0)
        .def_readwrite("p1", &NoiseModel::p1)
        .def_readwrite("p2", &NoiseModel::p2)
        .def_readwrite("readout", &NoiseModel::readout)
        .def_readwrite("crosstalk", &NoiseModel::crosstalk)
        .def("is_zero", &NoiseModel::is_zero);

    py::class_<Counts>(m, "Counts")
        .def_readonly("histogram", &Counts::histogram)
        .def_readonly("shots", &Counts::shots)
        .def_readonly("n_qubits", &Counts::n_qubits)
        .def("count", &Counts::count, py::arg("key"));

    // Simulation ---------------------------------------------------------
    m.def("run_exact", &run_exact, py::arg("circuit"));
    m.def("run_trajectory", &run_trajectory, py::arg("circuit"),
          py::arg("noise"), py::arg("seed"));
    m.def("sample_counts", &sample_counts, py::arg("state"), py::arg("shots"),
          py::arg("readout"), py::arg("seed"));
    m.def("exact_fidelity", &exact_fidelity, py::arg("state"),
          py::arg("reference"));
    m.def("expectation_pauli",
          [](const StateVector& s, const std::string& pauli) {
              return expectation_pauli(s, pauli);
          },
          py::arg("state"), py::arg("pauli_string"));
    m.def("ghz_state", &ghz_state, py::arg("n_qubits"));

    // Backends -----------------------------------------------------------
    py::class_<Backend>(m, "Backend")
        .def_property_readonly("name", &Backend::name)
        .def_property_readonly("width", &Backend::width)
        .def_property_readonly("is_exact", &Backend::is_exact)
        .def_property_readonly("trajectories", &Backend::trajectories)
        .def("run", &Backend::run, py::arg("circuit"), py::arg("shots"),
             py::arg("seed"))
        .def("trajectory_states", &Backend::trajectory_states,
             py::arg("circuit"), py::arg("seed"));

    py::class_<ExactBackend, Backend>(m, "ExactBackend")
        .def(py::init<int>(), py::arg("width") = 16);

    py::class_<TrajectoryBackend, Backend>(m, "TrajectoryBackend")
        .def(py::init<NoiseModel, std::uint64_t, int>(), py::arg("noise"),
             py::arg("trajectories"), py::arg("width") = 16);

    m.def("make_backend", &make_backend, py::arg("kind"), py::arg("noise"),
          py::arg("trajectories"), py::arg("width") = 16);

    // Statistics ---------------------------------------------------------
    py::class_<TestOutcome>(m, "TestOutcome")
        .def_readonly("observed", &TestOutcome::observed)
        .def_readonly("expected", &TestOutcome::expected)
        .def_readonly("z", &TestOutcome::z)
        .def_readonly("alpha", &TestOutcome::alpha)
        .def_readonly("pass_", &TestOutcome::pass);

    m.def("binomial_ztest", &binomial_ztest, py::arg("successes"),
          py::arg("shots"), py::arg("expected_p"), py::arg("alpha"));
    m.def("required_shots", &required_shots, py::arg("tolerance"),
          py::arg("alpha"));
    m.def("bonferroni", &bonferroni, py::arg("alpha"), py::arg("m_tests"));
    m.def("z_critical", &z_critical, py::arg("alpha"));
    m.def("inverse_normal_cdf", &inverse_normal_cdf, py::arg("p"));

    // Kernel results -----------------------------------------------------
    py::class_<KernelResult>(m, "KernelResult")
        .def_readonly("kernel", &KernelResult::kernel)
        .def_property_readonly(
            "passed", [](const KernelResult& r) { return r.pass; })
        .def_readonly("metric", &KernelResult::metric)
        .def_readonly("seed", &KernelResult::seed)
        .def_readonly("wall_ms", &KernelResult::wall_ms)
        .def_property_readonly(
            "params", [](const KernelResult& r) { return json_to_py(r.params); })
        .def_property_readonly(
            "details",
            [](const KernelResult& r) { return json_to_py(r.details); })
        .def("to_dict",
             [](const KernelResult& r) { return json_to_py(r.to_json()); });

    // Encode kernel ------------------------------------------------------
    py::class_<EncodeParams>(m, "EncodeParams")
        .def(py::init<>())
        .def_readwrite("n", &EncodeParams::n)
        .def_readwrite("shots", &EncodeParams::shots)
        .def_readwrite("alpha", &EncodeParams::alpha)
        .def_readwrite("seed", &EncodeParams::seed)
        .def_readwrite("offset", &EncodeParams::offset);

    m.def("encode_values", &encode_values, py::arg("N"));
    m.def("build_encode_circuit", &build_encode_circuit, py::arg("angles"),
          py::arg("offset") = kPi / 6.0);
    m.def("run_encode",
          [](const EncodeParams& params, const Backend& backend) {
              return run_encode(params, backend);
          },
          py::arg("params"), py::arg("backend"));

    // Entanglement workloads ---------------------------------------------
    m.def("build_ghz_circuit", &build_ghz_circuit, py::arg("n"));
    m.def("build_mirror_load", &build_mirror_load, py::arg("n"), py::arg("L"),
          py::arg("seed"));

    py::class_<WitnessEstimate>(m, "WitnessEstimate")
        .def_readonly("fidelity", &WitnessEstimate::fidelity)
        .def_readonly("std_error", &WitnessEstimate::std_error)
        .def_readonly("population", &WitnessEstimate::population)
        .def_readonly("coherence", &WitnessEstimate::coherence);

    m.def("ghz_witness_exact", &ghz_witness_exact, py::arg("final_states"),
          py::arg("n"));
    m.def("ghz_witness_shots", &ghz_witness_shots, py::arg("backend"),
          py::arg("circuit"), py::arg("n"), py::arg("shots"), py::arg("seed"));

    py::enum_<WitnessMode>(m, "WitnessMode")
        .value("EXACT", WitnessMode::Exact)
        .value("SHOTS", WitnessMode::Shots);

    py::class_<CAParams>(m, "CAParams")
        .def(py::init<>())
        .def_readwrite("n_max", &CAParams::n_max)
        .def_readwrite("depth_max", &CAParams::depth_max)
        .def_readwrite("threshold", &CAParams::threshold)
        .def_readwrite("shots", &CAParams::shots)
        .def_readwrite("witness_mode", &CAParams::witness_mode)
        .def_readwrite("seed", &CAParams::seed);

    py::class_<CAPoint>(m, "CAPoint")
        .def_readonly("n", &CAPoint::n)
        .def_readonly("L", &CAPoint::L)
        .def_readonly("ops", &CAPoint::ops)
        .def_readonly("witness", &CAPoint::witness)
        .def_readonly("pass_", &CAPoint::pass);

    py::class_<CAResult>(m, "CAResult")
        .def_readonly("best_n", &CAResult::best_n)
        .def_readonly("best_depth", &CAResult::best_depth)
        .def_readonly("ops", &CAResult::ops)
        .def_readonly("area", &CAResult::area)
        .def_readonly("pass_map", &CAResult::pass_map);

    m.def("compute_computational_area",
          [](const CAParams& params, const Backend& backend) {
              return compute_computational_area(params, backend);
          },
          py::arg("params"), py::arg("backend"));
    m.def("run_computational_area",
          [](const CAParams& params, const Backend& backend) {
              return run_computational_area(params, backend);
          },
          py::arg("params"), py::arg("backend"));

    py::class_<StreamsParams>(m, "StreamsParams")
        .def(py::init<>())
        .def_readwrite("k_max", &StreamsParams::k_max)
        .def_readwrite("n_per_stream", &StreamsParams::n_per_stream)
        .def_readwrite("depth", &StreamsParams::depth)
        .def_readwrite("threshold", &StreamsParams::threshold)
        .def_readwrite("seed", &StreamsParams::seed);

    py::class_<StreamsKRow>(m, "StreamsKRow")
        .def_readonly("k", &StreamsKRow::k)
        .def_readonly("fidelities", &StreamsKRow::fidelities)
        .def_readonly("all_pass", &StreamsKRow::all_pass);

    py::class_<StreamsResult>(m, "StreamsResult")
        .def_readonly("k_achieved", &StreamsResult::k_achieved)
        .def_readonly("per_stream_area", &StreamsResult::per_stream_area)
        .def_readonly("score", &StreamsResult::score)
        .def_readonly("ops", &StreamsResult::ops)
        .def_readonly("rows", &StreamsResult::rows);

    m.def("build_stream_circuit", &build_stream_circuit, py::arg("params"),
          py::arg("s"));
    m.def("combine_streams", &combine_streams, py::arg("streams"));
    m.def("marginal_ghz_fidelity", &marginal_ghz_fidelity, py::arg("state"),
          py::arg("first_qubit"), py::arg("block"));
    m.def("compute_parallel_streams",
          [](const StreamsParams& params, const Backend& backend) {
              return compute_parallel_streams(params, backend);
          },
          py::arg("params"), py::arg("backend"));
    m.def("run_parallel_streams",
          [](const StreamsParams& params, const Backend& backend) {
              return run_parallel_streams(params, backend);
          },
          py::arg("params"), py::arg("backend"));

    // Suite runner -------------------------------------------------------
    m.def(
        "run_suite",
        [](const py::object& config) {
            RunConfig rc;
            if (!config.is_none()) {
                apply_config_json(rc, py_to_json(config));
            }
            const RunOutcome outcome = run_suite(rc);
            return py::make_tuple(outcome.exit_code,
                                  json_to_py(outcome.report.to_json()));
        },
        py::arg("config") = py::none(),
        "Runs the configured kernels; returns (exit_code, report). The "
        "config mirrors the CLI's JSON config file.");

    m.attr("__version__") = "1.0.0";
}
