#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace cgk::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPrecondition = 2;
inline constexpr int kBudget = 3;

// Runs one subcommand. args excludes the program name. The report (JSON
// with --json, a flat key/value rendering otherwise) goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The JSON report a successful invocation would print with --json.
nlohmann::json report(const std::vector<std::string>& args);

// Reads a knot spec from a path or an inline JSON object. A file holding a
// fixture ({"knot": ...}) yields its knot.
nlohmann::json load_spec(const std::string& path_or_json);

}  // namespace cgk::cli
