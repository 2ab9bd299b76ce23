#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace ptdirac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitNumerical = 3;

// Default output directory when --out is not given.
inline constexpr const char* kOutputDirEnv = "PTDIRAC_OUTPUT_DIR";

// Parses the command line and runs the selected command.
int run(const std::vector<std::string>& args);

// Runs `command` ("soliton", "domain", "spectrum", "evolve") with a fully
// resolved configuration, writing into `out`. Library errors propagate.
void execute(const std::string& command, const nlohmann::json& config,
             const std::filesystem::path& out);

// Fixed scientific notation, 17 significant digits, independent of locale.
std::string format_double(double x);

}  // namespace ptdirac::cli
