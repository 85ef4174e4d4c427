#pragma once

// Command-line front end. Every command writes one JSON envelope
//
//   { "command": str, "params": {...}, "result": {...}, "exact": str, "decimal": str? }
//
// (or CSV for `table --format csv`). Exit codes: 0 success, 1 verification
// failure, 2 usage error. The schema lives in schema/trisum-output.schema.json.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "trisum/analysis.hpp"
#include "trisum/verify.hpp"

namespace trisum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Overrides the default number of decimal digits (12) when set.
inline constexpr const char* kDigitsEnvVar = "TRISUM_DIGITS";

/// Runs the CLI on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const verify::IdentityReport& report);
nlohmann::json to_json(const analysis::GapReport& report);

/// RFC 4180 field quoting: wraps in quotes when the field holds a comma,
/// quote, CR or LF, doubling embedded quotes.
std::string csv_field(const std::string& field);

}  // namespace trisum::cli
