#include "qrk/qasm_sink.hpp"

#include <cstdio>
#include <fstream>

#include "qrk/errors.hpp"
#include "qrk/qasm.hpp"
#include "qrk/rng.hpp"

namespace qrk {

QasmSink::QasmSink(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
        throw ConfigError("cannot create QASM output directory '" +
                          dir_.string() + "': " + ec.message());
    }
}

void QasmSink::emit(const std::string& kernel, const std::string& tag,
                    const Circuit& circuit) {
    const std::uint64_t hash = fnv1a64(kernel + "|" + tag);
    char suffix[32];
    std::snprintf(suffix, sizeof(suffix), "%016llx",
                  static_cast<unsigned long long>(hash));
    const std::filesystem::path path =
        dir_ / (kernel + "_" + suffix + ".qasm");
    std::ofstream out(path);
    if (!out) {
        throw ExecutionError("cannot write QASM file '" + path.string() + "'");
    }
    out << emit_qasm(circuit);
    if (!out) {
        throw ExecutionError("failed writing QASM file '" + path.string() +
                             "'");
    }
    ++files_written_;
}

} // namespace qrk
