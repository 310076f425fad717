#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qrk/result.hpp"

namespace qrk {

/// Suite-level run record. Serializes to a fixed JSON schema with exactly
/// the top-level keys `version`, `timestamp` (RFC 3339), `config`,
/// `results`, and `composite` (null when no weights were given); the parser
/// rejects unknown keys. serialize(parse(text)) == text for any report this
/// library wrote.
struct Report {
    std::string version = "1.0";
    std::string timestamp;
    nlohmann::json config = nlohmann::json::object();
    std::vector<KernelResult> results;
    std::optional<double> composite;

    nlohmann::json to_json() const;
    std::string serialize() const; // 2-space indent, sorted keys, final newline

    static Report from_json(const nlohmann::json& j);
    static Report parse(const std::string& text);
};

/// Current UTC time as RFC 3339 (e.g. "2024-05-01T12:30:00Z").
std::string rfc3339_utc_now();

} // namespace qrk
