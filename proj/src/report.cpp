#include "qrk/report.hpp"

#include <ctime>

#include "qrk/errors.hpp"

namespace qrk {

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["version"] = version;
    j["timestamp"] = timestamp;
    j["config"] = config;
    nlohmann::json rows = nlohmann::json::array();
    for (const KernelResult& result : results) {
        rows.push_back(result.to_json());
    }
    j["results"] = std::move(rows);
    if (composite.has_value()) {
        j["composite"] = *composite;
    } else {
        j["composite"] = nullptr;
    }
    return j;
}

std::string Report::serialize() const {
    return to_json().dump(2) + "\n";
}

Report Report::from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ConfigError("report must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "version" && key != "timestamp" && key != "config" &&
            key != "results" && key != "composite") {
            throw ConfigError("unknown key '" + key + "' in report");
        }
    }
    for (const char* key :
         {"version", "timestamp", "config", "results", "composite"}) {
        if (!j.contains(key)) {
            throw ConfigError(std::string("report missing key '") + key + "'");
        }
    }
    Report report;
    if (!j.at("version").is_string() || !j.at("timestamp").is_string()) {
        throw ConfigError("report version and timestamp must be strings");
    }
    report.version = j.at("version").get<std::string>();
    report.timestamp = j.at("timestamp").get<std::string>();
    report.config = j.at("config");
    if (!j.at("results").is_array()) {
        throw ConfigError("report results must be an array");
    }
    for (const nlohmann::json& row : j.at("results")) {
        report.results.push_back(KernelResult::from_json(row));
    }
    const nlohmann::json& comp = j.at("composite");
    if (comp.is_null()) {
        report.composite = std::nullopt;
    } else if (comp.is_number()) {
        report.composite = comp.get<double>();
    } else {
        throw ConfigError("report composite must be a number or null");
    }
    return report;
}

Report Report::parse(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("report is not valid JSON: ") +
                          e.what());
    }
    return from_json(j);
}

std::string rfc3339_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace qrk
