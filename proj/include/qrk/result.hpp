#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace qrk {

/// Verdict and measurements of one kernel run — the unit every report row is
/// built from. `params` echoes the kernel's own parameters; `details` carries
/// the per-check evidence behind the verdict.
struct KernelResult {
    std::string kernel;
    nlohmann::json params = nlohmann::json::object();
    bool pass = false;
    double metric = 0.0;
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
    nlohmann::json details = nlohmann::json::object();

    nlohmann::json to_json() const;
    static KernelResult from_json(const nlohmann::json& j);
};

} // namespace qrk
