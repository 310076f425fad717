#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qrk/config.hpp"
#include "qrk/errors.hpp"
#include "qrk/runner.hpp"

namespace qrk {

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Quantum Research Kernel benchmark suite"};
    app.get_formatter()->column_width(34);

    std::string kernel_arg;
    std::string backend_arg;
    std::string noise_arg;
    std::string weights_arg;
    std::string config_arg;
    std::string report_arg;
    std::string qasm_arg;
    std::uint64_t n_arg = 0;
    std::uint64_t shots_arg = 0;
    std::uint64_t trajectories_arg = 0;
    std::uint64_t seed_arg = 0;
    int n_max_arg = 0;
    int depth_max_arg = 0;
    int streams_arg = 0;
    double alpha_arg = 0.0;
    double threshold_arg = 0.0;

    auto* o_kernel = app.add_option(
        "--kernel", kernel_arg,
        "Kernels to run: encode, ca, streams, all (comma-separated)");
    auto* o_n = app.add_option("--n", n_arg,
                               "Encode sequence upper index N (N+1 values)");
    auto* o_n_max =
        app.add_option("--n-max", n_max_arg, "Largest register for ca");
    auto* o_depth_max = app.add_option("--depth-max", depth_max_arg,
                                       "Largest mirror half-depth for ca");
    auto* o_streams = app.add_option("--streams", streams_arg,
                                     "Largest stream count for streams");
    auto* o_shots =
        app.add_option("--shots", shots_arg, "Measurement shots per circuit");
    auto* o_trajectories = app.add_option("--trajectories", trajectories_arg,
                                          "Noise trajectories per circuit");
    auto* o_noise = app.add_option(
        "--noise", noise_arg, "Noise rates, e.g. p1=0.001,p2=0.01,ro=0.02,xt=0");
    auto* o_alpha =
        app.add_option("--alpha", alpha_arg, "Statistical significance level");
    auto* o_threshold = app.add_option("--threshold", threshold_arg,
                                       "Witness fidelity threshold");
    auto* o_backend = app.add_option("--backend", backend_arg,
                                     "Execution backend: exact or trajectory");
    auto* o_seed = app.add_option("--seed", seed_arg, "Master RNG seed");
    auto* o_config =
        app.add_option("--config", config_arg, "JSON config file");
    auto* o_report = app.add_option(
        "--report", report_arg, "Report file path (default: stdout)");
    auto* o_qasm = app.add_option("--emit-qasm", qasm_arg,
                                  "Directory for OpenQASM exports");
    auto* o_weights = app.add_option(
        "--weights", weights_arg,
        "Composite weights, e.g. encode=0.3,ca=0.4,streams=0.3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    RunConfig config;
    try {
        if (o_config->count() > 0) {
            load_config_file(config, config_arg);
        }
        // Command-line flags override config-file values; --noise replaces
        // the whole noise model (unnamed rates fall back to zero).
        if (o_kernel->count() > 0) {
            config.kernels = parse_kernel_selection(kernel_arg);
        }
        if (o_n->count() > 0) {
            config.encode_n = n_arg;
        }
        if (o_n_max->count() > 0) {
            config.n_max = n_max_arg;
        }
        if (o_depth_max->count() > 0) {
            config.depth_max = depth_max_arg;
        }
        if (o_streams->count() > 0) {
            config.k_max = streams_arg;
        }
        if (o_shots->count() > 0) {
            config.shots = shots_arg;
        }
        if (o_trajectories->count() > 0) {
            config.trajectories = trajectories_arg;
        }
        if (o_noise->count() > 0) {
            config.noise = parse_noise_spec(noise_arg);
        }
        if (o_alpha->count() > 0) {
            config.alpha = alpha_arg;
        }
        if (o_threshold->count() > 0) {
            config.threshold = threshold_arg;
        }
        if (o_backend->count() > 0) {
            config.backend = backend_arg;
        }
        if (o_seed->count() > 0) {
            config.seed = seed_arg;
        }
        if (o_report->count() > 0) {
            config.report_path = report_arg;
        }
        if (o_qasm->count() > 0) {
            config.emit_qasm_dir = qasm_arg;
        }
        if (o_weights->count() > 0) {
            config.weights = parse_weights_spec(weights_arg);
        }
        config.validate();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    RunOutcome outcome;
    try {
        outcome = run_suite(config);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    for (const KernelResult& result : outcome.report.results) {
        std::cerr << result.kernel << ": "
                  << (result.pass ? "pass" : "FAIL")
                  << " (metric " << result.metric << ", "
                  << result.wall_ms << " ms)\n";
    }

    const std::string text = outcome.report.serialize();
    if (config.report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(config.report_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write report to '"
                      << config.report_path << "'\n";
            return 2;
        }
        out << text;
        if (!out) {
            std::cerr << "error: failed writing report to '"
                      << config.report_path << "'\n";
            return 2;
        }
    }
    return outcome.exit_code;
}

} // namespace qrk
