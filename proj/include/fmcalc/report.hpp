#pragma once

// Running a parsed scenario and rendering the report. Every number in a
// report is an exact fraction string. The optional header carries run
// metadata; the rest of the document depends only on the scenario.

#include "fmcalc/scenario.hpp"

#include <json.hpp>

#include <string>

namespace fmcalc {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct RunOptions {
  CheckLevel check_level = CheckLevel::Fast;
  bool parallel = false;
  bool header = true;
  /// Scenario path or subcommand name, echoed in the header.
  std::string source;
};

/// Runs every task in order. Task failures are rethrown with the task index
/// and type prefixed to the message; the error kind is preserved.
Json run_scenario(const Scenario& scenario, const RunOptions& options);

/// Conjunction of every boolean under a "checks" object.
bool all_checks_pass(const Json& report);

std::string render_json(const Json& report);
/// Long format: task,type,path,value.
std::string render_csv(const Json& report);
/// Wide table of scan rows (one line per model); tasks of other types are skipped.
std::string render_scan_csv(const Json& report);
std::string render_text(const Json& report);
std::string render(const Json& report, OutputFormat format);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace fmcalc
