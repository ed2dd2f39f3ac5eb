#pragma once

#include <string>

#include "json.hpp"
#include "rdpforge/verdict.hpp"

namespace rdpforge::cli {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

enum class ExitCode { Pass = 0, Fail = 1, Inconclusive = 2, Usage = 3 };

// Report document in the fixed field order:
//   schema_version, command, descriptor, parameters, verdict, mode, note,
//   failed, witnesses, counterexamples, stats
// Commands may append further fields (table, frontier) after stats.
Json report_json(const std::string& command, const std::string& descriptor, Json parameters, const VerdictReport& r);

// {schema_version, command, error: {type, message[, line, column]}}
Json error_json(const std::string& command, const std::string& type, const std::string& message, int line = 0,
                int column = 0);

// Human-readable rendering of a report or error document. Refinement tables
// print as a labelled 2x2 grid.
std::string render_text(const Json& doc);

// Exit code for a report document's verdict; Usage for error documents.
ExitCode exit_code_of(const Json& doc);

}  // namespace rdpforge::cli
