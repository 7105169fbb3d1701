#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qpbl::cli {

/// Outcome of one CLI invocation. The report is the full envelope
///   { schema_version, command, status, payload, elapsed_ms }
/// written to stdout (or --out) by the binary. Exit code 0 corresponds to
/// status "pass" or "evidence-only", 1 to "fail" or a domain error, 2 to a
/// usage error. Payloads are deterministic given --seed; elapsed_ms lives
/// outside the payload for that reason.
struct RunResult {
  int exit_code = 0;
  nlohmann::json report;
};

/// Executes one subcommand (args exclude the program name).
RunResult run(const std::vector<std::string>& args);

/// Renders an envelope as human-readable text (--format text).
std::string render_text(const nlohmann::json& envelope);

/// Scripted replays of the worked examples, keyed by stable identifiers.
std::vector<std::string> reproduce_ids();

/// Runs one registry entry and returns its payload
///   { id, passed, checks: [ { name, passed, expected, actual, basis } ] }.
/// Throws UnknownExample for ids outside the registry.
nlohmann::json reproduce_example(const std::string& example_id);

}  // namespace qpbl::cli
