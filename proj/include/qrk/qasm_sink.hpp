#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "qrk/circuit.hpp"

namespace qrk {

/// Writes every workload circuit the kernels construct into a directory,
/// one OpenQASM 3 file per circuit, named <kernel>_<hash>.qasm where the
/// hash digests the circuit's identifying parameters. Analysis-only suffix
/// circuits (basis rotations) are not emitted.
class QasmSink {
public:
    explicit QasmSink(std::filesystem::path dir);

    /// `tag` identifies the circuit within the kernel (parameters, seed,
    /// batch/grid indices); it determines the file name hash.
    void emit(const std::string& kernel, const std::string& tag,
              const Circuit& circuit);

    const std::filesystem::path& dir() const { return dir_; }
    std::size_t files_written() const { return files_written_; }

private:
    std::filesystem::path dir_;
    std::size_t files_written_ = 0;
};

} // namespace qrk
