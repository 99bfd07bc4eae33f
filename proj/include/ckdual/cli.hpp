#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace ckdual {

/// Runs one command; `args` excludes the program name. Exit status: 0 for
/// success or a true verdict, 1 for a false verdict, 2 for input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Indented "key: value" rendering of a report; strings are printed verbatim.
std::string render_text(const nlohmann::json& report);

}  // namespace ckdual
