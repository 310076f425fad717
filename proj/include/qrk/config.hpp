#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qrk/constants.hpp"
#include "qrk/statevector.hpp"

namespace qrk {

/// Effective configuration of one harness run, merged from built-in
/// defaults, an optional JSON config file, and command-line flags (in
/// ascending precedence).
struct RunConfig {
    std::vector<std::string> kernels = {"encode", "ca", "streams"};
    std::string backend = "trajectory";
    std::uint64_t seed = 12345;
    std::uint64_t shots = 4096;
    std::uint64_t trajectories = 200;
    double alpha = 0.01;
    double threshold = 0.5;
    NoiseModel noise;
    int width = 16;

    // encode
    std::uint64_t encode_n = 64;
    double encode_offset = kPi / 6.0;

    // computational area
    int n_max = 6;
    int depth_max = 8;
    std::string witness_mode = "exact";

    // parallel streams
    int k_max = 4;
    int n_per_stream = 3;
    int streams_depth = 4;

    // I/O (not part of the experiment; excluded from the report's config echo)
    std::string report_path;   // empty = print the report to stdout
    std::string emit_qasm_dir; // empty = no QASM export
    std::optional<std::map<std::string, double>> weights;

    /// Throws ConfigError on any out-of-range or inconsistent setting.
    void validate() const;

    /// Experiment-relevant fields plus the measurement conventions
    /// (operation counting, noise model, RNG, normalizers), echoed into
    /// every report so results can be audited and recomputed.
    nlohmann::json to_json() const;
};

/// Resolves a --kernel selection: comma-separated names from
/// {encode, ca, streams, all}; "all" expands to every kernel. The returned
/// list is in canonical execution order and free of duplicates.
std::vector<std::string> parse_kernel_selection(const std::string& text);

/// Parses "p1=..,p2=..,ro=..,xt=.." (any subset, unset rates stay zero).
NoiseModel parse_noise_spec(const std::string& text);

/// Parses "kernel=weight,..." with non-negative weights.
std::map<std::string, double> parse_weights_spec(const std::string& text);

/// Strictly applies a config-file JSON object onto `config`: every key must
/// be known, every value well-typed; unknown keys anywhere are rejected.
void apply_config_json(RunConfig& config, const nlohmann::json& j);

/// Reads and applies a JSON config file.
void load_config_file(RunConfig& config, const std::string& path);

} // namespace qrk
