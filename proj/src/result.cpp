#include "qrk/result.hpp"

#include "qrk/errors.hpp"

namespace qrk {

nlohmann::json KernelResult::to_json() const {
    nlohmann::json j;
    j["kernel"] = kernel;
    j["params"] = params;
    j["pass"] = pass;
    j["metric"] = metric;
    j["seed"] = seed;
    j["wall_ms"] = wall_ms;
    j["details"] = details;
    return j;
}

KernelResult KernelResult::from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ConfigError("kernel result must be a JSON object");
    }
    static const char* kKeys[] = {"kernel", "params",  "pass",
                                  "metric", "seed",    "wall_ms",
                                  "details"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const char* k : kKeys) {
            if (key == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError("unknown key '" + key + "' in kernel result");
        }
    }
    for (const char* k : kKeys) {
        if (!j.contains(k)) {
            throw ConfigError(std::string("kernel result missing key '") + k +
                              "'");
        }
    }
    KernelResult r;
    r.kernel = j.at("kernel").get<std::string>();
    r.params = j.at("params");
    r.pass = j.at("pass").get<bool>();
    r.metric = j.at("metric").is_null() ? 0.0 : j.at("metric").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.wall_ms = j.at("wall_ms").get<double>();
    r.details = j.at("details");
    return r;
}

} // namespace qrk
