#pragma once

#include "dagscope/cli/options.hpp"
#include "dagscope/error.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace dagscope::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
  kSolverFailure = 3,
  kPresetNotFound = 4,
};

/// The flip search ran out of seeds.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Each command returns the run directory it wrote.
std::filesystem::path cmd_simulate(const SimulateOptions& options);
std::filesystem::path cmd_fit(const FitOptions& options);
std::filesystem::path cmd_sweep(const SweepOptions& options);
std::filesystem::path cmd_reproduce(const ReproduceOptions& options);

/// Re-run the command recorded in a manifest into `output`.
std::filesystem::path cmd_replay(const std::filesystem::path& manifest, const OutputOptions& output);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

/// Lower-case hex SHA-256 of a byte string / of a file's contents.
std::string sha256_hex(const std::string& bytes);
std::string file_sha256(const std::filesystem::path& path);

/// Worker count: DAGSCOPE_THREADS if set, else `requested`, else hardware
/// concurrency (at least 1).
std::size_t resolve_threads(std::size_t requested);

}  // namespace dagscope::cli
