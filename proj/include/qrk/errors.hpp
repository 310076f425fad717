#pragma once

#include <stdexcept>
#include <string>

namespace qrk {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed inputs: bad angles, empty ranges, mismatched dimensions.
class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Qubit index outside the register.
class IndexError : public Error {
  public:
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

/// Request exceeds what a component supports (register width, oracle size).
class CapabilityError : public Error {
  public:
    explicit CapabilityError(const std::string& msg) : Error(msg) {}
};

/// Bad harness configuration: unknown keys, inconsistent weights, bad flags.
class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// A backend failed while executing a kernel workload.
class ExecutionError : public Error {
  public:
    explicit ExecutionError(const std::string& msg) : Error(msg) {}
};

} // namespace qrk
