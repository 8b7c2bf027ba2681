#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptb::cli {

inline constexpr const char* kEngineVersion = "ptb-engine-3";

/// Run the command line (args without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The built-in regression fixture as JSON text.
const std::string& embedded_fixture();

}  // namespace ptb::cli
