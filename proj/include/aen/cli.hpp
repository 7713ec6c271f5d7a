#pragma once

// Command-line front end: state files, reports and the subcommand driver.
//
// State file: {"parties":[{"label":"A","dim":2},...],"amplitudes":[[re,im],...]}
// with amplitudes in row-major order (party 0 most significant).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aen/statespace.hpp"

namespace aen::cli {

inline constexpr std::string_view kToolVersion = "1.0.0";
/// Environment variable supplying the default seed; --seed overrides it.
inline constexpr const char* kSeedEnv = "AEN_SEED";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kInputFile = 3,
  kNumerical = 4,
  kDimensionLimit = 5,
  kShapeMismatch = 6,
};

/// Unreadable or malformed input file.
class InputError : public Error {
 public:
  using Error::Error;
};

PureState parse_state_json(std::string_view text);
PureState parse_state_file(const std::string& path);
std::string format_state_json(const PureState& psi);
void write_state_file(const std::string& path, const PureState& psi);

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  std::string tool_version{kToolVersion};

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);
std::string format_machine(const Report& report);
std::string format_human(const Report& report);

/// JSON number, or the strings "inf" / "-inf" / "nan" for non-finite values.
nlohmann::json number(double x);

int exit_code_for(const std::exception& e);

/// `args` excludes the program name. Writes the report to `out` and
/// diagnostics to `err`; returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace aen::cli
