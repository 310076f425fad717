#pragma once

#include <numbers>

namespace qrk {

inline constexpr double kPi = std::numbers::pi;

} // namespace qrk
