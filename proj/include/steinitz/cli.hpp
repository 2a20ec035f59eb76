#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "steinitz/geom_core.hpp"

namespace steinitz::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Command { Select, Verify, Center, Exhaustive, Grundbacher, Corollary14, Macbeath, Bench };

struct RunConfig {
    Command command = Command::Select;
    std::optional<std::string> input_path;
    std::optional<std::string> output_path;
    std::optional<int> dim;
    std::optional<int> m;
    std::uint64_t seed = 0;
    Tolerance tol;
    double radius = 1.0;
    std::optional<int> k;
    bool exhaustive = false;
    std::optional<double> alpha;
    double lambda = 1.0;
    std::size_t samples = 200'000;
    int count = 10;
    int jobs = 1;
};

enum ExitCode : int { kOk = 0, kCertifiedFailure = 1, kUsage = 2, kInternalFailure = 3 };

/// Parses argv; on failure writes a message to `err` and returns nothing
/// with `exit_code` set (0 for --help, 2 for usage errors).
std::optional<RunConfig> parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                               int& exit_code);

/// Executes the command and writes one JSON record to the output path or
/// `out`. Returns one of ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace steinitz::cli
