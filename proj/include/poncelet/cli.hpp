#pragma once

// The `poncelet` command line: table, coeffs, poly, trace and verify.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace poncelet::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class Format { plain, json, csv };

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kInvalidPrime = 2,
    kDivisibility = 3,
    kNotDiamond = 4,
    kBadStart = 5,
};

/// A failed command together with its process exit code.
class CommandError : public std::runtime_error {
public:
    CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const noexcept { return code_; }

private:
    int code_;
};

struct OutputDocument {
    std::string command;
    nlohmann::ordered_json metadata;  ///< p, c, command, version
    nlohmann::ordered_json payload;
    int exit_code = kOk;
};

OutputDocument cmd_table(std::uint64_t p, std::optional<std::uint64_t> c, bool oracle);
OutputDocument cmd_coeffs(std::uint64_t p, unsigned n);
OutputDocument cmd_poly(unsigned n);
OutputDocument cmd_trace(std::uint64_t p, std::uint64_t alpha, std::uint64_t beta,
                         std::optional<std::vector<std::int64_t>> start, std::optional<std::uint64_t> c);
OutputDocument cmd_verify(std::uint64_t p_max, unsigned n_max);

/// Writes the document in the requested format.
void render(const OutputDocument& doc, Format format, std::ostream& out);

/// Parses argv, runs the command, renders to out, reports failures on err.
/// Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace poncelet::cli
