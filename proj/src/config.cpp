#include "qrk/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "qrk/errors.hpp"

namespace qrk {

namespace {

const std::vector<std::string> kKernelOrder = {"encode", "ca", "streams"};

bool known_kernel(const std::string& name) {
    for (const std::string& k : kKernelOrder) {
        if (name == k) {
            return true;
        }
    }
    return false;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, sep)) {
        parts.push_back(part);
    }
    return parts;
}

double parse_double(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ConfigError("invalid number '" + text + "' for " + what);
    }
    if (pos != text.size()) {
        throw ConfigError("invalid number '" + text + "' for " + what);
    }
    return value;
}

void reject_unknown(const nlohmann::json& j,
                    const std::set<std::string>& allowed,
                    const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (allowed.find(key) == allowed.end()) {
            throw ConfigError("unknown key '" + key + "' in " + where);
        }
    }
}

std::uint64_t get_u64(const nlohmann::json& j, const std::string& key) {
    const nlohmann::json& v = j.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
        throw ConfigError("'" + key + "' must be a non-negative integer");
    }
    if (v.is_number_integer() && v.get<std::int64_t>() < 0) {
        throw ConfigError("'" + key + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

int get_int(const nlohmann::json& j, const std::string& key) {
    const nlohmann::json& v = j.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
        throw ConfigError("'" + key + "' must be an integer");
    }
    return v.get<int>();
}

double get_double(const nlohmann::json& j, const std::string& key) {
    const nlohmann::json& v = j.at(key);
    if (!v.is_number()) {
        throw ConfigError("'" + key + "' must be a number");
    }
    return v.get<double>();
}

std::string get_string(const nlohmann::json& j, const std::string& key) {
    const nlohmann::json& v = j.at(key);
    if (!v.is_string()) {
        throw ConfigError("'" + key + "' must be a string");
    }
    return v.get<std::string>();
}

void check_unit_interval(double value, const std::string& what,
                         bool open_ends) {
    const bool ok = open_ends ? (value > 0.0 && value < 1.0)
                              : (value >= 0.0 && value <= 1.0);
    if (!std::isfinite(value) || !ok) {
        throw ConfigError(what + (open_ends ? " must lie in (0, 1)"
                                            : " must lie in [0, 1]"));
    }
}

} // namespace

std::vector<std::string> parse_kernel_selection(const std::string& text) {
    std::set<std::string> picked;
    for (const std::string& raw : split(text, ',')) {
        if (raw.empty()) {
            throw ConfigError("empty kernel name in '" + text + "'");
        }
        if (raw == "all") {
            for (const std::string& k : kKernelOrder) {
                picked.insert(k);
            }
        } else if (known_kernel(raw)) {
            picked.insert(raw);
        } else {
            throw ConfigError("unknown kernel '" + raw +
                              "' (expected encode, ca, streams, or all)");
        }
    }
    if (picked.empty()) {
        throw ConfigError("no kernel selected");
    }
    std::vector<std::string> ordered;
    for (const std::string& k : kKernelOrder) {
        if (picked.count(k)) {
            ordered.push_back(k);
        }
    }
    return ordered;
}

NoiseModel parse_noise_spec(const std::string& text) {
    NoiseModel noise;
    std::set<std::string> seen;
    for (const std::string& item : split(text, ',')) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("noise entry '" + item +
                              "' is not of the form key=value");
        }
        const std::string key = item.substr(0, eq);
        const double value = parse_double(item.substr(eq + 1), "noise " + key);
        if (!seen.insert(key).second) {
            throw ConfigError("duplicate noise key '" + key + "'");
        }
        if (key == "p1") {
            noise.p1 = value;
        } else if (key == "p2") {
            noise.p2 = value;
        } else if (key == "ro") {
            noise.readout = value;
        } else if (key == "xt") {
            noise.crosstalk = value;
        } else {
            throw ConfigError("unknown noise key '" + key +
                              "' (expected p1, p2, ro, xt)");
        }
    }
    return noise;
}

std::map<std::string, double> parse_weights_spec(const std::string& text) {
    std::map<std::string, double> weights;
    for (const std::string& item : split(text, ',')) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("weight entry '" + item +
                              "' is not of the form kernel=value");
        }
        const std::string key = item.substr(0, eq);
        if (!known_kernel(key)) {
            throw ConfigError("unknown kernel '" + key + "' in weights");
        }
        if (weights.count(key)) {
            throw ConfigError("duplicate weight for kernel '" + key + "'");
        }
        const double value = parse_double(item.substr(eq + 1), "weight " + key);
        if (!(value >= 0.0) || !std::isfinite(value)) {
            throw ConfigError("weight for kernel '" + key +
                              "' must be a non-negative number");
        }
        weights[key] = value;
    }
    if (weights.empty()) {
        throw ConfigError("empty weights specification");
    }
    return weights;
}

void apply_config_json(RunConfig& config, const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    reject_unknown(j,
                   {"kernel", "backend", "seed", "shots", "trajectories",
                    "alpha", "threshold", "width", "noise", "encode", "ca",
                    "streams", "weights", "report", "emit_qasm"},
                   "config");
    if (j.contains("kernel")) {
        const nlohmann::json& k = j.at("kernel");
        if (k.is_string()) {
            config.kernels = parse_kernel_selection(k.get<std::string>());
        } else if (k.is_array()) {
            std::string joined;
            for (const nlohmann::json& item : k) {
                if (!item.is_string()) {
                    throw ConfigError("'kernel' entries must be strings");
                }
                joined += (joined.empty() ? "" : ",") +
                          item.get<std::string>();
            }
            config.kernels = parse_kernel_selection(joined);
        } else {
            throw ConfigError("'kernel' must be a string or array of strings");
        }
    }
    if (j.contains("backend")) {
        config.backend = get_string(j, "backend");
    }
    if (j.contains("seed")) {
        config.seed = get_u64(j, "seed");
    }
    if (j.contains("shots")) {
        config.shots = get_u64(j, "shots");
    }
    if (j.contains("trajectories")) {
        config.trajectories = get_u64(j, "trajectories");
    }
    if (j.contains("alpha")) {
        config.alpha = get_double(j, "alpha");
    }
    if (j.contains("threshold")) {
        config.threshold = get_double(j, "threshold");
    }
    if (j.contains("width")) {
        config.width = get_int(j, "width");
    }
    if (j.contains("noise")) {
        const nlohmann::json& n = j.at("noise");
        if (!n.is_object()) {
            throw ConfigError("'noise' must be an object");
        }
        reject_unknown(n, {"p1", "p2", "ro", "xt"}, "noise");
        if (n.contains("p1")) {
            config.noise.p1 = get_double(n, "p1");
        }
        if (n.contains("p2")) {
            config.noise.p2 = get_double(n, "p2");
        }
        if (n.contains("ro")) {
            config.noise.readout = get_double(n, "ro");
        }
        if (n.contains("xt")) {
            config.noise.crosstalk = get_double(n, "xt");
        }
    }
    if (j.contains("encode")) {
        const nlohmann::json& e = j.at("encode");
        if (!e.is_object()) {
            throw ConfigError("'encode' must be an object");
        }
        reject_unknown(e, {"n", "offset"}, "encode");
        if (e.contains("n")) {
            config.encode_n = get_u64(e, "n");
        }
        if (e.contains("offset")) {
            config.encode_offset = get_double(e, "offset");
        }
    }
    if (j.contains("ca")) {
        const nlohmann::json& c = j.at("ca");
        if (!c.is_object()) {
            throw ConfigError("'ca' must be an object");
        }
        reject_unknown(c, {"n_max", "depth_max", "witness_mode"}, "ca");
        if (c.contains("n_max")) {
            config.n_max = get_int(c, "n_max");
        }
        if (c.contains("depth_max")) {
            config.depth_max = get_int(c, "depth_max");
        }
        if (c.contains("witness_mode")) {
            config.witness_mode = get_string(c, "witness_mode");
        }
    }
    if (j.contains("streams")) {
        const nlohmann::json& s = j.at("streams");
        if (!s.is_object()) {
            throw ConfigError("'streams' must be an object");
        }
        reject_unknown(s, {"k_max", "n_per_stream", "depth"}, "streams");
        if (s.contains("k_max")) {
            config.k_max = get_int(s, "k_max");
        }
        if (s.contains("n_per_stream")) {
            config.n_per_stream = get_int(s, "n_per_stream");
        }
        if (s.contains("depth")) {
            config.streams_depth = get_int(s, "depth");
        }
    }
    if (j.contains("weights")) {
        const nlohmann::json& w = j.at("weights");
        if (!w.is_object()) {
            throw ConfigError("'weights' must be an object");
        }
        std::map<std::string, double> weights;
        for (const auto& [key, value] : w.items()) {
            if (!known_kernel(key)) {
                throw ConfigError("unknown kernel '" + key + "' in weights");
            }
            if (!value.is_number()) {
                throw ConfigError("weight for '" + key + "' must be a number");
            }
            weights[key] = value.get<double>();
        }
        if (weights.empty()) {
            throw ConfigError("'weights' must not be empty");
        }
        config.weights = std::move(weights);
    }
    if (j.contains("report")) {
        config.report_path = get_string(j, "report");
    }
    if (j.contains("emit_qasm")) {
        config.emit_qasm_dir = get_string(j, "emit_qasm");
    }
}

void load_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file '" + path +
                          "' is not valid JSON: " + e.what());
    }
    apply_config_json(config, j);
}

void RunConfig::validate() const {
    if (kernels.empty()) {
        throw ConfigError("no kernel selected");
    }
    for (const std::string& k : kernels) {
        if (!known_kernel(k)) {
            throw ConfigError("unknown kernel '" + k + "'");
        }
    }
    if (backend != "exact" && backend != "trajectory") {
        throw ConfigError("unknown backend '" + backend +
                          "' (expected 'exact' or 'trajectory')");
    }
    if (shots == 0) {
        throw ConfigError("shots must be positive");
    }
    if (trajectories == 0) {
        throw ConfigError("trajectories must be positive");
    }
    if (width < 1 || width > 24) {
        throw ConfigError("backend width must lie in [1, 24]");
    }
    check_unit_interval(alpha, "alpha", /*open_ends=*/true);
    check_unit_interval(threshold, "threshold", /*open_ends=*/true);
    check_unit_interval(noise.p1, "noise p1", false);
    check_unit_interval(noise.p2, "noise p2", false);
    check_unit_interval(noise.readout, "noise ro", false);
    check_unit_interval(noise.crosstalk, "noise xt", false);
    if (encode_n == 0) {
        throw ConfigError("encode n must be at least 1");
    }
    if (!std::isfinite(encode_offset)) {
        throw ConfigError("encode offset must be finite");
    }
    const bool ca_selected =
        std::find(kernels.begin(), kernels.end(), "ca") != kernels.end();
    const bool streams_selected =
        std::find(kernels.begin(), kernels.end(), "streams") != kernels.end();
    if (ca_selected) {
        if (n_max < 2) {
            throw ConfigError("n_max must be at least 2");
        }
        if (n_max > width) {
            throw ConfigError("n_max exceeds backend width");
        }
        if (depth_max < 1) {
            throw ConfigError("depth_max must be at least 1");
        }
        if (witness_mode != "exact" && witness_mode != "shots") {
            throw ConfigError("witness_mode must be 'exact' or 'shots'");
        }
        if (witness_mode == "shots" &&
            shots < static_cast<std::uint64_t>(n_max + 2) * 100) {
            throw ConfigError(
                "shot-based witness needs shots >= (n_max + 2) * 100");
        }
    }
    if (streams_selected) {
        if (k_max < 1) {
            throw ConfigError("streams k_max must be at least 1");
        }
        if (n_per_stream < 2) {
            throw ConfigError("n_per_stream must be at least 2");
        }
        if (streams_depth < 1) {
            throw ConfigError("streams depth must be at least 1");
        }
        if (k_max * n_per_stream > width) {
            throw ConfigError("k_max * n_per_stream exceeds backend width");
        }
    }
    if (weights.has_value()) {
        std::set<std::string> selected(kernels.begin(), kernels.end());
        std::set<std::string> weighted;
        for (const auto& [key, value] : *weights) {
            weighted.insert(key);
            if (!std::isfinite(value) || value < 0.0) {
                throw ConfigError("weight for '" + key +
                                  "' must be non-negative");
            }
        }
        if (weighted != selected) {
            throw ConfigError(
                "weights must cover exactly the selected kernels");
        }
    }
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["kernel"] = kernels;
    j["backend"] = backend;
    j["seed"] = seed;
    j["shots"] = shots;
    j["trajectories"] = trajectories;
    j["alpha"] = alpha;
    j["threshold"] = threshold;
    j["width"] = width;
    j["noise"] = {{"p1", noise.p1},
                  {"p2", noise.p2},
                  {"ro", noise.readout},
                  {"xt", noise.crosstalk}};
    j["encode"] = {{"n", encode_n}, {"offset", encode_offset}};
    j["ca"] = {{"n_max", n_max},
               {"depth_max", depth_max},
               {"witness_mode", witness_mode}};
    j["streams"] = {{"k_max", k_max},
                    {"n_per_stream", n_per_stream},
                    {"depth", streams_depth}};
    if (weights.has_value()) {
        j["weights"] = *weights;
    } else {
        j["weights"] = nullptr;
    }
    // Measurement conventions, recorded so reported numbers can be
    // recomputed under alternative definitions.
    j["conventions"] = {
        {"op_counting", "every gate counts as one operation, any arity"},
        {"noise_model",
         "uniform random Pauli insertion after each gate on its targets with "
         "probability p1/p2; readout bit-flips at sampling; crosstalk "
         "depolarizes qubits outside a stream during that stream's 2-qubit "
         "gates"},
        {"rng",
         "splitmix64; sub-seeds = mix64(mix64(master ^ fnv1a64(domain)) ^ "
         "index)"},
        {"normalizers",
         "encode: clamp01(1 - max_deviation); ca: area / (n_max * "
         "ops(n_max, depth_max)); streams: score / (k_max * n_per_stream * "
         "ops(n_per_stream, depth))"}};
    return j;
}

} // namespace qrk
